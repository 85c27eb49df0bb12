#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "slicegap/error.hpp"
#include "slicegap/rings.hpp"

namespace slicegap {

inline constexpr int kMaxVars = 4;
using Exponent = std::array<std::uint8_t, kMaxVars>;

inline int total_degree(const Exponent& a) {
    int d = 0;
    for (auto v : a) d += v;
    return d;
}

inline Exponent mono(std::initializer_list<int> exps) {
    Exponent e{};
    int i = 0;
    for (int v : exps) e[i++] = static_cast<std::uint8_t>(v);
    return e;
}

// Multivariate power series truncated at total degree `cutoff`.
// Only nonzero coefficients of degree <= cutoff are stored.
template <class R>
class TruncSeries {
public:
    using Elem = typename R::elem;
    using Terms = std::map<Exponent, Elem>;

    TruncSeries(R ring, std::vector<std::string> vars, int cutoff)
        : ring_(std::move(ring)), vars_(std::move(vars)), cutoff_(cutoff) {
        require(!vars_.empty() && vars_.size() <= kMaxVars, "TruncSeries: 1..4 variables");
        require(cutoff >= 0 && cutoff < 250, "TruncSeries: cutoff out of range");
    }

    static TruncSeries variable(R ring, std::vector<std::string> vars, int cutoff, int i) {
        TruncSeries s(std::move(ring), std::move(vars), cutoff);
        Exponent e{};
        e[i] = 1;
        s.set(e, s.ring_.one());
        return s;
    }

    static TruncSeries constant(R ring, std::vector<std::string> vars, int cutoff, Elem c) {
        TruncSeries s(std::move(ring), std::move(vars), cutoff);
        s.set(Exponent{}, std::move(c));
        return s;
    }

    // sum_i coeffs[i] t^i
    static TruncSeries univariate(R ring, int cutoff, const std::vector<Elem>& coeffs,
                                  std::string var = "t") {
        TruncSeries s(std::move(ring), {std::move(var)}, cutoff);
        for (std::size_t i = 0; i < coeffs.size(); ++i) s.set(mono({static_cast<int>(i)}), coeffs[i]);
        return s;
    }

    const R& ring() const { return ring_; }
    const std::vector<std::string>& vars() const { return vars_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    int cutoff() const { return cutoff_; }
    const Terms& terms() const { return terms_; }

    Elem coeff(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? ring_.zero() : it->second;
    }
    Elem coeff(int i) const { return coeff(mono({i})); }
    Elem constant_term() const { return coeff(Exponent{}); }

    void set(const Exponent& e, Elem c) {
        if (total_degree(e) > cutoff_) return;
        if (ring_.is_zero(c))
            terms_.erase(e);
        else
            terms_[e] = std::move(c);
    }

    void add_to(const Exponent& e, const Elem& c) {
        if (total_degree(e) > cutoff_ || ring_.is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
            return;
        }
        it->second = ring_.add(it->second, c);
        if (ring_.is_zero(it->second)) terms_.erase(it);
    }

    bool is_zero() const { return terms_.empty(); }

    // lowest total degree carrying a nonzero coefficient, -1 for zero
    int valuation() const {
        int v = -1;
        for (const auto& [e, c] : terms_) {
            int d = total_degree(e);
            if (v < 0 || d < v) v = d;
        }
        return v;
    }

    TruncSeries truncated(int cutoff) const {
        TruncSeries r(ring_, vars_, std::min(cutoff, cutoff_));
        for (const auto& [e, c] : terms_) r.set(e, c);
        return r;
    }

    // homogeneous part of total degree d
    TruncSeries degree_part(int d) const {
        TruncSeries r(ring_, vars_, cutoff_);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) == d) r.terms_.emplace(e, c);
        return r;
    }

    TruncSeries operator-() const {
        TruncSeries r(ring_, vars_, cutoff_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, ring_.neg(c));
        return r;
    }

    TruncSeries operator+(const TruncSeries& o) const {
        TruncSeries r = like(o);
        for (const auto& [e, c] : terms_) r.add_to(e, c);
        for (const auto& [e, c] : o.terms_) r.add_to(e, c);
        return r;
    }

    TruncSeries operator-(const TruncSeries& o) const { return *this + (-o); }

    TruncSeries operator*(const TruncSeries& o) const {
        TruncSeries r = like(o);
        std::vector<std::vector<const typename Terms::value_type*>> by_deg(r.cutoff_ + 1);
        for (const auto& kv : o.terms_) {
            int d = total_degree(kv.first);
            if (d <= r.cutoff_) by_deg[d].push_back(&kv);
        }
        for (const auto& [ea, ca] : terms_) {
            const int da = total_degree(ea);
            for (int db = 0; da + db <= r.cutoff_; ++db) {
                for (const auto* kv : by_deg[db]) {
                    Exponent e{};
                    for (int i = 0; i < kMaxVars; ++i) e[i] = ea[i] + kv->first[i];
                    r.add_to(e, ring_.mul(ca, kv->second));
                }
            }
        }
        return r;
    }

    TruncSeries scale(const Elem& k) const {
        TruncSeries r(ring_, vars_, cutoff_);
        for (const auto& [e, c] : terms_) r.set(e, ring_.mul(k, c));
        return r;
    }

    TruncSeries pow(int k) const {
        require(k >= 0, "TruncSeries::pow: negative exponent");
        TruncSeries r = constant(ring_, vars_, cutoff_, ring_.one());
        TruncSeries b = *this;
        while (k) {
            if (k & 1) r = r * b;
            k >>= 1;
            if (k) b = b * b;
        }
        return r;
    }

    // coefficientwise equality on the common truncation
    bool operator==(const TruncSeries& o) const {
        const int c = std::min(cutoff_, o.cutoff_);
        return (truncated(c) - o.truncated(c)).is_zero();
    }

    // {"cutoff", "vars", "coeffs": {"i,j,...": c}}
    json to_json() const {
        json coeffs = json::object();
        for (const auto& [e, c] : terms_) coeffs[key(e)] = ring_.to_json(c);
        return json{{"vars", vars_}, {"cutoff", cutoff_}, {"coeffs", coeffs}};
    }

    std::string key(const Exponent& e) const {
        std::string k;
        for (int i = 0; i < nvars(); ++i) {
            if (i) k += ',';
            k += std::to_string(e[i]);
        }
        return k;
    }

private:
    TruncSeries like(const TruncSeries& o) const {
        require(vars_.size() == o.vars_.size(), "TruncSeries: variable count mismatch");
        return TruncSeries(ring_, vars_, std::min(cutoff_, o.cutoff_));
    }

    R ring_;
    std::vector<std::string> vars_;
    int cutoff_;
    Terms terms_;
};

// f(g(...)) for univariate f; g must have zero constant term.
template <class R>
TruncSeries<R> compose(const TruncSeries<R>& f, const TruncSeries<R>& g) {
    require(f.nvars() == 1, "compose: outer series must be univariate");
    if (!g.ring().is_zero(g.constant_term())) throw MathError("compose: inner series has nonzero constant term");
    const int cutoff = std::min(f.cutoff(), g.cutoff());
    TruncSeries<R> gt = g.truncated(cutoff);
    // Horner from the top coefficient down
    TruncSeries<R> acc(g.ring(), g.vars(), cutoff);
    for (int i = cutoff; i >= 0; --i) {
        acc = acc * gt;
        acc.add_to(Exponent{}, f.coeff(i));
    }
    return acc;
}

// f(g_1, ..., g_k) for a k-variable f; every g_i has zero constant term and
// all g_i share variables.
template <class R>
TruncSeries<R> substitute(const TruncSeries<R>& f, const std::vector<TruncSeries<R>>& gs) {
    require(static_cast<int>(gs.size()) == f.nvars(), "substitute: arity mismatch");
    int cutoff = f.cutoff();
    for (const auto& g : gs) {
        if (!g.ring().is_zero(g.constant_term()))
            throw MathError("substitute: inner series has nonzero constant term");
        require(g.nvars() == gs[0].nvars(), "substitute: inner series variable mismatch");
        cutoff = std::min(cutoff, g.cutoff());
    }
    const int k = f.nvars();
    const auto& ring = gs[0].ring();
    // powers[i][j] = g_i^j
    std::vector<std::vector<TruncSeries<R>>> powers(k);
    for (int i = 0; i < k; ++i) {
        auto gi = gs[i].truncated(cutoff);
        powers[i].push_back(TruncSeries<R>::constant(ring, gi.vars(), cutoff, ring.one()));
        for (int j = 1; j <= cutoff; ++j) powers[i].push_back(powers[i].back() * gi);
    }
    // group by the exponents of the first k-1 variables, linear combination in the last
    std::map<Exponent, TruncSeries<R>> groups;
    for (const auto& [e, c] : f.terms()) {
        if (total_degree(e) > cutoff) continue;
        Exponent prefix = e;
        prefix[k - 1] = 0;
        auto it = groups.find(prefix);
        if (it == groups.end()) it = groups.emplace(prefix, TruncSeries<R>(ring, gs[0].vars(), cutoff)).first;
        it->second = it->second + powers[k - 1][e[k - 1]].scale(c);
    }
    TruncSeries<R> out(ring, gs[0].vars(), cutoff);
    for (auto& [prefix, lin] : groups) {
        TruncSeries<R> term = lin;
        for (int i = 0; i + 1 < k; ++i)
            if (prefix[i]) term = term * powers[i][prefix[i]];
        out = out + term;
    }
    return out;
}

// compositional inverse of a univariate f = a t + ..., a a unit
template <class R>
TruncSeries<R> series_reverse(const TruncSeries<R>& f) {
    require(f.nvars() == 1, "series_reverse: univariate series expected");
    const auto& ring = f.ring();
    if (!ring.is_zero(f.constant_term())) throw MathError("series_reverse: nonzero constant term");
    auto a_inv = ring.inv(f.coeff(1));
    if (!a_inv) throw MathError("series_reverse: linear coefficient is not a unit");
    const int cutoff = f.cutoff();
    TruncSeries<R> g(ring, f.vars(), cutoff);
    g.set(mono({1}), *a_inv);
    for (int k = 2; k <= cutoff; ++k) {
        auto h = compose(f, g.truncated(k));
        auto c = h.coeff(k);
        if (!ring.is_zero(c)) g.add_to(mono({k}), ring.neg(ring.mul(c, *a_inv)));
    }
    return g;
}

// the single-variable identity series t
template <class R>
TruncSeries<R> identity_series(const R& ring, int cutoff, std::string var = "t") {
    return TruncSeries<R>::variable(ring, {std::move(var)}, cutoff, 0);
}

}  // namespace slicegap
