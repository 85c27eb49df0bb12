#include "slicegap/arf.hpp"

#include <algorithm>
#include <bit>

#include "slicegap/error.hpp"

namespace slicegap {

int f2_rank(std::vector<BitVec> rows) {
    int r = 0;
    for (int bit = 0; bit < 64; ++bit) {
        auto piv = std::find_if(rows.begin() + r, rows.end(), [&](BitVec v) { return v >> bit & 1; });
        if (piv == rows.end()) continue;
        std::iter_swap(rows.begin() + r, piv);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (static_cast<int>(i) != r && (rows[i] >> bit & 1)) rows[i] ^= rows[r];
        ++r;
    }
    return r;
}

QuadraticSpace::QuadraticSpace(int g, std::vector<int> q_basis, std::vector<BitVec> B_rows)
    : g_(g), q_(std::move(q_basis)), B_(std::move(B_rows)) {
    require(g >= 0 && g <= 16, "QuadraticSpace: g out of range");
    const int n = 2 * g;
    require(static_cast<int>(q_.size()) == n, "QuadraticSpace: qBasis must have 2g entries");
    require(static_cast<int>(B_.size()) == n, "QuadraticSpace: B must be 2g x 2g");
    for (auto& v : q_) {
        require(v == 0 || v == 1, "QuadraticSpace: qBasis entries are bits");
    }
    const BitVec mask = n == 64 ? ~0ULL : ((1ULL << n) - 1);
    for (int i = 0; i < n; ++i) {
        require((B_[i] & ~mask) == 0, "QuadraticSpace: B row out of range");
        require(!(B_[i] >> i & 1), "QuadraticSpace: B must have zero diagonal");
        for (int j = 0; j < n; ++j)
            require((B_[i] >> j & 1) == (B_[j] >> i & 1), "QuadraticSpace: B must be symmetric");
    }
}

QuadraticSpace QuadraticSpace::hyperbolic() { return QuadraticSpace(1, {0, 0}, {0b10, 0b01}); }

QuadraticSpace QuadraticSpace::arf_one() { return QuadraticSpace(1, {1, 1}, {0b10, 0b01}); }

QuadraticSpace QuadraticSpace::from_json(const json& j) {
    const int g = j.at("g").get<int>();
    auto q = j.at("qBasis").get<std::vector<int>>();
    auto rows = j.at("B").get<std::vector<std::vector<int>>>();
    std::vector<BitVec> B;
    for (const auto& r : rows) {
        require(static_cast<int>(r.size()) == 2 * g, "QuadraticSpace: B must be 2g x 2g");
        BitVec v = 0;
        for (int c = 0; c < 2 * g; ++c) {
            require(r[c] == 0 || r[c] == 1, "QuadraticSpace: B entries are bits");
            if (r[c]) v |= 1ULL << c;
        }
        B.push_back(v);
    }
    return QuadraticSpace(g, std::move(q), std::move(B));
}

json QuadraticSpace::to_json() const {
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < dim(); ++i) {
        std::vector<int> r(dim());
        for (int c = 0; c < dim(); ++c) r[c] = B_[i] >> c & 1;
        rows.push_back(r);
    }
    return json{{"g", g_}, {"qBasis", q_}, {"B", rows}};
}

int QuadraticSpace::pairing(BitVec x, BitVec y) const {
    int s = 0;
    for (BitVec t = x; t; t &= t - 1) s ^= std::popcount(B_[std::countr_zero(t)] & y) & 1;
    return s;
}

bool QuadraticSpace::nondegenerate() const { return f2_rank(B_) == dim(); }

int QuadraticSpace::eval(BitVec x) const {
    require(dim() == 64 || (x >> dim()) == 0, "eval_q: vector length mismatch");
    // q(sum e_i) = sum q(e_i) + sum_{i<j} B(e_i, e_j)
    int s = 0;
    for (BitVec t = x; t; t &= t - 1) {
        const int i = std::countr_zero(t);
        s ^= q_[i];
        const BitVec above = x & ~((2ULL << i) - 1);
        s ^= std::popcount(B_[i] & above) & 1;
    }
    return s;
}

int QuadraticSpace::eval(const std::vector<int>& bits) const {
    require(static_cast<int>(bits.size()) == dim(), "eval_q: vector length mismatch");
    BitVec x = 0;
    for (int i = 0; i < dim(); ++i) {
        require(bits[i] == 0 || bits[i] == 1, "eval_q: entries are bits");
        if (bits[i]) x |= 1ULL << i;
    }
    return eval(x);
}

QuadraticSpace QuadraticSpace::change_basis(const std::vector<BitVec>& basis) const {
    require(static_cast<int>(basis.size()) == dim(), "change_basis: wrong basis size");
    require(f2_rank(basis) == dim(), "change_basis: basis is not invertible");
    std::vector<int> q(dim());
    std::vector<BitVec> B(dim(), 0);
    for (int i = 0; i < dim(); ++i) {
        q[i] = eval(basis[i]);
        for (int j = 0; j < dim(); ++j)
            if (pairing(basis[i], basis[j])) B[i] |= 1ULL << j;
    }
    return QuadraticSpace(g_, std::move(q), std::move(B));
}

QuadraticSpace direct_sum(const QuadraticSpace& a, const QuadraticSpace& b) {
    const int na = a.dim();
    std::vector<int> q;
    std::vector<BitVec> B;
    for (int i = 0; i < na; ++i) {
        q.push_back(a.q_basis(i));
        B.push_back(a.row(i));
    }
    for (int i = 0; i < b.dim(); ++i) {
        q.push_back(b.q_basis(i));
        B.push_back(b.row(i) << na);
    }
    return QuadraticSpace(a.g() + b.g(), std::move(q), std::move(B));
}

std::array<std::uint64_t, 2> value_histogram(const QuadraticSpace& Q) {
    require(Q.dim() <= 30, "value_histogram: dimension too large to enumerate");
    // Gray-code walk: q(x + e_i) = q(x) + q(e_i) + B(x, e_i)
    std::array<std::uint64_t, 2> h{1, 0};
    BitVec x = 0;
    int qx = 0;
    const std::uint64_t total = 1ULL << Q.dim();
    for (std::uint64_t k = 1; k < total; ++k) {
        const int i = std::countr_zero(k);
        qx ^= Q.q_basis(i) ^ (std::popcount(Q.row(i) & x) & 1);
        x ^= 1ULL << i;
        ++h[qx];
    }
    return h;
}

int arf(const QuadraticSpace& Q) {
    if (!Q.nondegenerate()) throw MathError("arf: degenerate pairing");
    auto h = value_histogram(Q);
    return h[1] > h[0] ? 1 : 0;
}

long gauss_sum(const QuadraticSpace& Q) {
    auto h = value_histogram(Q);
    return static_cast<long>(h[0]) - static_cast<long>(h[1]);
}

int witt_class(const QuadraticSpace& Q) {
    if (!Q.nondegenerate()) throw MathError("witt_class: degenerate pairing");
    // current subspace as a list of independent vectors of the ambient space
    std::vector<BitVec> W;
    for (int i = 0; i < Q.dim(); ++i) W.push_back(1ULL << i);
    while (!W.empty()) {
        const int k = static_cast<int>(W.size());
        auto combo = [&](std::uint64_t c) {
            BitVec v = 0;
            for (int i = 0; i < k; ++i)
                if (c >> i & 1) v ^= W[i];
            return v;
        };
        BitVec x = 0;
        for (std::uint64_t c = 1; c < (1ULL << k) && !x; ++c)
            if (Q.eval(combo(c)) == 0) x = combo(c);
        if (!x) return 1;  // anisotropic, nonzero Witt class
        BitVec y = 0;
        for (int i = 0; i < k && !y; ++i)
            if (Q.pairing(x, W[i])) y = W[i];
        if (!y) throw MathError("witt_class: pairing degenerate on a subspace");
        // span{x, y} is a hyperbolic plane; project onto its complement
        std::vector<BitVec> next;
        for (auto w : W) {
            BitVec p = w;
            if (Q.pairing(w, y)) p ^= x;
            if (Q.pairing(w, x)) p ^= y;
            next.push_back(p);
        }
        // keep an independent subset, reducing against pivots by top bit
        std::vector<BitVec> basis;
        std::array<BitVec, 64> pivot{};
        for (auto v : next) {
            for (BitVec r = v; r;) {
                const int top = 63 - std::countl_zero(r);
                if (!pivot[top]) {
                    pivot[top] = r;
                    basis.push_back(v);
                    break;
                }
                r ^= pivot[top];
            }
        }
        if (static_cast<int>(basis.size()) != k - 2) throw MathError("witt_class: complement has wrong dimension");
        W = std::move(basis);
    }
    return 0;
}

void for_each_nondegenerate(int g, const std::function<void(const QuadraticSpace&)>& fn) {
    require(g >= 0 && g <= 3, "for_each_nondegenerate: g <= 3 only");
    const int n = 2 * g;
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    for (std::uint64_t bm = 0; bm < (1ULL << slots.size()); ++bm) {
        std::vector<BitVec> B(n, 0);
        for (std::size_t s = 0; s < slots.size(); ++s)
            if (bm >> s & 1) {
                B[slots[s].first] |= 1ULL << slots[s].second;
                B[slots[s].second] |= 1ULL << slots[s].first;
            }
        if (f2_rank(B) != n) continue;
        for (std::uint64_t qm = 0; qm < (1ULL << n); ++qm) {
            std::vector<int> q(n);
            for (int i = 0; i < n; ++i) q[i] = qm >> i & 1;
            fn(QuadraticSpace(g, std::move(q), B));
        }
    }
}

json arf_report(const QuadraticSpace& Q) {
    auto h = value_histogram(Q);
    return json{{"arf", arf(Q)}, {"wittClass", witt_class(Q)}, {"valueHistogram", {{"0", h[0]}, {"1", h[1]}}}};
}

}  // namespace slicegap
