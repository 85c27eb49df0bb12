#include "slicegap/slice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "slicegap/bredon.hpp"
#include "slicegap/equivariant.hpp"
#include "slicegap/error.hpp"

namespace slicegap {

namespace {

long floor_div(long a, long b) {
    long q = a / b;
    return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

}  // namespace

SliceCell::SliceCell(int group, int sub, long mult, bool reg) : g(group), k(sub), m(mult), regular(reg) {
    require_subgroup(group, sub);
}

json SliceCell::to_json() const { return json{{"k", k}, {"m", m}, {"regular", regular}}; }

void Wedge::add(const SliceCell& c, long count) {
    require(c.g == g, "slice cell over a different group");
    if (count == 0) return;
    if ((cells[c] += count) == 0) cells.erase(c);
}

long Wedge::underlying_count() const {
    long n = 0;
    for (auto& [c, count] : cells) n += count * c.underlying_count();
    return n;
}

long Wedge::size() const {
    long n = 0;
    for (auto& [c, count] : cells) n += count;
    return n;
}

json Wedge::to_json() const {
    json out = json::array();
    for (auto& [c, count] : cells) {
        json j = c.to_json();
        j["count"] = count;
        out.push_back(j);
    }
    return out;
}

std::pair<long, long> cw_range(long n, int g) {
    require_group(g);
    return n >= 0 ? std::pair{floor_div(n, g), n} : std::pair{n, floor_div(n, g)};
}

std::pair<long, long> cw_range(const SliceCell& c) { return cw_range(c.dimension(), c.g); }

std::vector<long> cell_dimensions(const SliceCell& c) {
    std::vector<long> dims;
    long s = c.regular ? 0 : -1;
    if (c.m == 0) return {s};
    auto census = cell_census(RealRep::regular(c.k).scaled(c.m < 0 ? -c.m : c.m));
    for (auto& [d, iso] : census.dims) {
        if (d == 0) continue;
        dims.push_back((c.m < 0 ? -d : d) + s);
    }
    std::sort(dims.begin(), dims.end());
    return dims;
}

Wedge restrict_cell(const SliceCell& c, int j) {
    require_subgroup(c.g, j);
    Wedge W;
    W.g = j;
    int l = std::gcd(j, c.k);
    long copies = c.g / std::lcm(j, c.k);
    W.add(SliceCell(j, l, c.m * (c.k / l), c.regular), copies);
    return W;
}

Wedge smash(const SliceCell& a, const SliceCell& b) {
    require(a.g == b.g, "slice cells over different groups");
    if (!a.regular || !b.regular) throw InvalidInput("smash products of irregular slice cells are not wedges of slice cells");
    int l = std::gcd(a.k, b.k);
    long c = a.m * (a.k / l) + b.m * (b.k / l);
    Wedge W;
    W.g = a.g;
    W.add(SliceCell(a.g, l, c), a.g / std::lcm(a.k, b.k));
    return W;
}

Wedge smash_brute(const SliceCell& a, const SliceCell& b) {
    require(a.g == b.g, "slice cells over different groups");
    require(a.regular && b.regular, "smash_brute takes regular cells");
    int g = a.g, h = a.k;
    // Ind_H(S^{a rho_H} ^ Res_H Ind_K S^{b rho_K})
    GSet orbits = double_coset_restrict_brute(g, b.k, h, GSet::orbit(b.k));
    Wedge W;
    W.g = g;
    for (auto [l, count] : orbits.orbits) {
        // orbit H/C_l carries Ind_{C_l}^H S^{Res rho_K}; the sphere there is
        // S^{a Res rho_H + b Res rho_K} over C_l
        RealRep V = rep_res(RealRep::regular(h), l).scaled(a.m) + rep_res(RealRep::regular(b.k), l).scaled(b.m);
        RealRep rho = RealRep::regular(l);
        long c = V.a;
        if (!(rho.scaled(c) == V)) throw MathError("restricted sphere is not a multiple of rho");
        W.add(SliceCell(g, l, c), count);
    }
    return W;
}

Wedge norm_wedge(int g, int h, const std::vector<long>& exponents, long dmax) {
    require_subgroup(g, h);
    require(!exponents.empty(), "norm_wedge needs a nonempty exponent list");
    int r = g / h;
    int n = static_cast<int>(exponents.size());
    Wedge W;
    W.g = g;
    std::vector<int> f(r, 0);
    long min_exp = *std::min_element(exponents.begin(), exponents.end());
    std::function<void(int, long)> rec = [&](int pos, long total) {
        if ((total + (r - pos) * min_exp) * h > dmax && min_exp >= 0) return;
        if (pos == r) {
            // keep only the lexicographically minimal rotation
            for (int t = 1; t < r; ++t) {
                std::vector<int> rot(r);
                for (int x = 0; x < r; ++x) rot[x] = f[(x + t) % r];
                if (rot < f) return;
            }
            int p = r;
            for (int q = 1; q < r; q *= 2) {
                bool periodic = true;
                for (int x = 0; x < r && periodic; ++x) periodic = f[x] == f[(x + q) % r];
                if (periodic) {
                    p = q;
                    break;
                }
            }
            long stab = static_cast<long>(h) * (r / p);
            long size = total * p / r;
            SliceCell c(g, static_cast<int>(stab), size);
            if (c.dimension() <= dmax) W.add(c);
            return;
        }
        for (int i = 0; i < n; ++i) {
            f[pos] = i;
            rec(pos + 1, total + exponents[i]);
        }
    };
    rec(0, 0);
    return W;
}

Wedge norm_wedge_brute(int g, int h, const std::vector<long>& exps, long dmax) {
    require_subgroup(g, h);
    require(!exps.empty() && exps.size() <= 16 && g / h <= 8, "norm_wedge_brute is for small index sets");
    int r = g / h, n = static_cast<int>(exps.size());
    long total = 1;
    for (int i = 0; i < r; ++i) total *= n;
    std::vector<bool> seen(total, false);
    auto decode = [&](long code) {
        std::vector<int> f(r);
        for (int x = 0; x < r; ++x, code /= n) f[x] = static_cast<int>(code % n);
        return f;
    };
    auto encode = [&](const std::vector<int>& f) {
        long code = 0;
        for (int x = r - 1; x >= 0; --x) code = code * n + f[x];
        return code;
    };
    Wedge W;
    W.g = g;
    for (long code = 0; code < total; ++code) {
        if (seen[code]) continue;
        auto f = decode(code);
        int fixing = 0;
        long sum = 0;
        for (int x = 0; x < r; ++x) sum += exps[f[x]];
        for (int a = 0; a < g; ++a) {
            // gamma^a moves the coset x to x + a
            std::vector<int> moved(r);
            for (int x = 0; x < r; ++x) moved[(x + a) % r] = f[x];
            seen[encode(moved)] = true;
            if (moved == f) ++fixing;
        }
        long stab = fixing;
        long size = sum * h / stab;
        SliceCell c(g, static_cast<int>(stab), size);
        if (c.dimension() <= dmax) W.add(c);
    }
    return W;
}

namespace {

// partitions of w as non-increasing part lists, for w <= wmax
std::vector<std::vector<std::vector<int>>> partitions_upto(int wmax) {
    std::vector<std::vector<std::vector<int>>> out(wmax + 1);
    std::vector<int> cur;
    std::function<void(int, int, int)> rec = [&](int w, int remaining, int maxpart) {
        if (remaining == 0) {
            out[w].push_back(cur);
            return;
        }
        for (int p = std::min(maxpart, remaining); p >= 1; --p) {
            cur.push_back(p);
            rec(w, remaining - p, p);
            cur.pop_back();
        }
    };
    for (int w = 0; w <= wmax; ++w) rec(w, w, w);
    return out;
}

}  // namespace

std::map<long, Wedge> refinement_census(int e, long dmax) {
    require(e >= 1 && e <= 5, "refinement_census needs 1 <= e <= 5");
    require(dmax >= 0 && dmax <= 32, "refinement_census needs 0 <= dmax <= 32");
    int g = 1 << e, n = g / 2;
    int wmax = static_cast<int>(dmax / 2);
    auto parts = partitions_upto(wmax);
    // monomials as (weight, parts); a function G/C_2 -> monomials is a list of ids
    std::vector<std::pair<int, std::vector<int>>> monomials;
    for (int w = 0; w <= wmax; ++w)
        for (auto& p : parts[w]) monomials.push_back({w, p});
    std::sort(monomials.begin(), monomials.end(), [](const auto& a, const auto& b) { return a.second < b.second; });

    std::map<long, Wedge> out;
    for (long d = 0; d <= dmax; d += 2) out[d].g = g;
    std::vector<int> f(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int total) {
        if (pos == n) {
            for (int t = 1; t < n; ++t) {
                std::vector<int> rot(n);
                for (int x = 0; x < n; ++x) rot[x] = f[(x + t) % n];
                if (rot < f) return;
            }
            int p = n;
            for (int q = 1; q < n; q *= 2) {
                bool periodic = true;
                for (int x = 0; x < n && periodic; ++x) periodic = f[x] == f[(x + q) % n];
                if (periodic) {
                    p = q;
                    break;
                }
            }
            int stab = 2 * (n / p);
            SliceCell c(g, stab, static_cast<long>(total) * p / n);
            if (!c.isotropic()) throw MathError("refinement produced a non-isotropic cell");
            out[2L * total].add(c);
            return;
        }
        for (int i = 0; i < static_cast<int>(monomials.size()); ++i) {
            if (total + monomials[i].first > wmax) continue;
            f[pos] = i;
            rec(pos + 1, total + monomials[i].first);
        }
    };
    rec(0, 0);
    return out;
}

std::vector<long> hmu_series(int n, long dmax) {
    long wmax = dmax / 2;
    std::vector<long> coef(wmax + 1, 0);
    coef[0] = 1;
    // multiply by (1 - x^j)^{-1}, n times for each j
    for (long j = 1; j <= wmax; ++j)
        for (int rep = 0; rep < n; ++rep)
            for (long w = j; w <= wmax; ++w) coef[w] += coef[w - j];
    return coef;
}

bool slice_ss_support(int g, long s, long t) {
    require_group(g);
    long k = t - s;
    if (k >= 0) return s >= 0 && s <= (g - 1) * k;
    // negative stems: t <= k <= floor((t+1)/|G|)
    return t <= k && k <= floor_div(t + 1, g);
}

Wedge rho_shift(const Wedge& W, long m) {
    Wedge out;
    out.g = W.g;
    for (auto& [c, count] : W.cells) {
        SliceCell s(c.g, c.k, c.m + m * (c.g / c.k), c.regular);
        if (s.dimension() != c.dimension() + m * c.g) throw MathError("rho shift changed the dimension bookkeeping");
        out.add(s, count);
    }
    return out;
}

json GapReport::to_json() const {
    json j{{"ok", ok}, {"cells", cells}, {"computed", computed}, {"outsideRange", outside_range}};
    if (failure) j["failure"] = *failure;
    return j;
}

GapReport gap_report(int e, long l, long tmax) {
    require(l >= 1, "the twist l must be positive");
    require(tmax >= 0 && tmax <= 32, "tmax must lie in 0..32");
    int g = 1 << e;
    auto census = refinement_census(e, tmax);
    GapReport R;
    std::map<std::pair<int, long>, bool> cache;
    for (auto& [t, W] : census)
        for (auto& [c, count] : W.cells) {
            // S^{-k l rho_G} ^ Ind_K S^{m rho_K} = Ind_K S^{(m - k l [G:K]) rho_K}; once the
            // top cell drops below -3 every further twist does too
            for (long k = 0;; ++k) {
                SliceCell tw(g, c.k, c.m - k * l * (g / c.k), c.regular);
                auto dims = cell_dimensions(tw);
                ++R.cells;
                if (dims.back() < -3) {
                    ++R.outside_range;
                    break;
                }
                if (dims.front() > -1) {
                    ++R.outside_range;
                    continue;
                }
                ++R.computed;
                auto key = std::pair{tw.k, tw.m};
                auto it = cache.find(key);
                if (it == cache.end()) {
                    MackeyCoefficient Z(MackeyKind::ConstantZ, g);
                    auto H = bredon_all(slice_cell_complex(g, tw.k, tw.m), Z, Variance::Homology);
                    bool vanish = std::none_of(H.begin(), H.end(), [](const auto& kv) { return kv.first >= -3 && kv.first <= -1; });
                    it = cache.emplace(key, vanish).first;
                }
                if (!it->second && R.ok) {
                    R.ok = false;
                    R.failure = "Ind_{C" + std::to_string(tw.k) + "} S^{" + std::to_string(tw.m) + " rho} in slice " + std::to_string(t);
                }
            }
        }
    return R;
}

bool gap_check(int e, long l, long tmax) { return gap_report(e, l, tmax).ok; }

}  // namespace slicegap
