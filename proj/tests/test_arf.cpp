#include <random>

#include "doctest.h"
#include "slicegap/arf.hpp"
#include "slicegap/error.hpp"

using namespace slicegap;

namespace {

std::vector<BitVec> random_basis(int n, std::mt19937& rng) {
    std::vector<BitVec> b(n);
    for (int i = 0; i < n; ++i) b[i] = 1ULL << i;
    std::uniform_int_distribution<int> idx(0, n - 1);
    for (int s = 0; s < 4 * n; ++s) {
        int i = idx(rng), j = idx(rng);
        if (i == j)
            continue;
        if (s % 3 == 0)
            std::swap(b[i], b[j]);
        else
            b[i] ^= b[j];
    }
    return b;
}

QuadraticSpace random_space(int g, std::mt19937& rng) {
    for (;;) {
        const int n = 2 * g;
        std::vector<BitVec> B(n, 0);
        std::vector<int> q(n);
        std::bernoulli_distribution coin;
        for (int i = 0; i < n; ++i) {
            q[i] = coin(rng);
            for (int j = i + 1; j < n; ++j)
                if (coin(rng)) {
                    B[i] |= 1ULL << j;
                    B[j] |= 1ULL << i;
                }
        }
        QuadraticSpace Q(g, q, B);
        if (Q.nondegenerate()) return Q;
    }
}

}  // namespace

TEST_CASE("eval_q fixtures") {
    auto H = QuadraticSpace::hyperbolic();
    CHECK(H.eval(0b00) == 0);
    CHECK(H.eval(0b01) == 0);
    CHECK(H.eval(0b10) == 0);
    CHECK(H.eval(0b11) == 1);
    CHECK(H.eval(std::vector<int>{1, 1}) == 1);
    CHECK_THROWS_AS(H.eval(std::vector<int>{1, 1, 0}), InvalidInput);
    CHECK_THROWS_AS(H.eval(BitVec{0b100}), InvalidInput);
}

TEST_CASE("refinement law holds on all pairs for random g=2 spaces") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        auto Q = random_space(2, rng);
        CHECK(Q.eval(0) == 0);
        for (BitVec x = 0; x < 16; ++x)
            for (BitVec y = 0; y < 16; ++y) CHECK(Q.eval(x ^ y) == (Q.eval(x) ^ Q.eval(y) ^ Q.pairing(x, y)));
    }
}

TEST_CASE("arf fixtures") {
    auto H = QuadraticSpace::hyperbolic();
    auto P = QuadraticSpace::arf_one();
    CHECK(arf(H) == 0);
    CHECK(arf(P) == 1);
    CHECK(value_histogram(P) == std::array<std::uint64_t, 2>{1, 3});
    CHECK(arf(direct_sum(P, P)) == 0);
    CHECK(value_histogram(direct_sum(P, P)) == std::array<std::uint64_t, 2>{10, 6});
    CHECK(witt_class(direct_sum(H, H)) == 0);
    CHECK(witt_class(P) == 1);
    CHECK_THROWS_AS(arf(QuadraticSpace(1, {0, 0}, {0, 0})), MathError);
    CHECK_THROWS_AS(witt_class(QuadraticSpace(1, {0, 0}, {0, 0})), MathError);
    CHECK_THROWS_AS(QuadraticSpace(1, {0, 0}, {0b11, 0b01}), InvalidInput);
}

TEST_CASE("arf report json") {
    auto j = arf_report(QuadraticSpace::arf_one());
    CHECK(j.dump() == R"({"arf":1,"valueHistogram":{"0":1,"1":3},"wittClass":1})");
    auto Q = QuadraticSpace::from_json(json::parse(R"({"g":1,"qBasis":[0,0],"B":[[0,1],[1,0]]})"));
    CHECK(Q == QuadraticSpace::hyperbolic());
}

TEST_CASE("exhaustive g <= 2: witt = arf = gauss sign, additivity") {
    std::vector<QuadraticSpace> all;
    for (int g = 0; g <= 2; ++g)
        for_each_nondegenerate(g, [&](const QuadraticSpace& Q) {
            const int a = arf(Q);
            CHECK(witt_class(Q) == a);
            CHECK((gauss_sum(Q) > 0) == (a == 0));
            all.push_back(Q);
        });
    // pairs with g(A) + g(B) <= 2; the acceptance run takes each factor up to g = 2
    for (const auto& A : all)
        for (const auto& B : all)
            if (A.g() + B.g() <= 2) CHECK(arf(direct_sum(A, B)) == (arf(A) ^ arf(B)));
}

TEST_CASE("arf is invariant under basis changes") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        auto Q = random_space(1 + trial % 3, rng);
        const int a = arf(Q);
        for (int k = 0; k < 50; ++k) {
            auto Q2 = Q.change_basis(random_basis(Q.dim(), rng));
            CHECK(Q2.nondegenerate());
            CHECK(arf(Q2) == a);
        }
    }
}
