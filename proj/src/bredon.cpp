#include "slicegap/bredon.hpp"

#include <algorithm>
#include <numeric>

#include "slicegap/error.hpp"

namespace slicegap {

namespace {

long mod(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

bool all_zero(const GroupRingElem& x) {
    return std::all_of(x.begin(), x.end(), [](long v) { return v == 0; });
}

GroupRingElem translate(const GroupRingElem& x, long t) {
    long s = static_cast<long>(x.size());
    GroupRingElem y(x.size(), 0);
    for (long p = 0; p < s; ++p) y[mod(p + t, s)] = x[p];
    return y;
}

void add_into(GroupRingElem& acc, const GroupRingElem& x, long scale = 1) {
    if (acc.empty()) acc.assign(x.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) acc[i] += scale * x[i];
}

// Orbit of the pair (gamma^i x, gamma^j y) for orbit sizes sx, sy (powers of
// two): representative (x, gamma^delta y), and the coset index t.
std::pair<long, long> pair_orbit(long sx, long sy, long i, long j) {
    long g = std::min(sx, sy);
    long delta = mod(j - i, g);
    long t = sx >= sy ? mod(i, sx) : mod(j - delta, sy);
    return {delta, t};
}

}  // namespace

GroupRingElem compose(int m, const GroupRingElem& alpha, const GroupRingElem& beta) {
    (void)m;
    GroupRingElem out(beta.size(), 0);
    for (std::size_t t = 0; t < alpha.size(); ++t)
        if (alpha[t]) add_into(out, translate(beta, static_cast<long>(t)), alpha[t]);
    return out;
}

// ---- EqCellComplex

int EqCellComplex::orbit_count(int k) const {
    auto it = cells.find(k);
    return it == cells.end() ? 0 : static_cast<int>(it->second.size());
}

long EqCellComplex::underlying_rank(int k) const {
    long r = 0;
    if (auto it = cells.find(k); it != cells.end())
        for (int d : it->second) r += order / d;
    return r;
}

int EqCellComplex::min_degree() const { return cells.empty() ? 0 : cells.begin()->first; }
int EqCellComplex::max_degree() const { return cells.empty() ? 0 : cells.rbegin()->first; }

const GroupRingElem* EqCellComplex::entry(int k, int target, int source) const {
    auto it = diff.find(k);
    if (it == diff.end()) return nullptr;
    auto e = it->second.find({target, source});
    return e == it->second.end() ? nullptr : &e->second;
}

void EqCellComplex::validate() const {
    for (auto& [k, entries] : diff) {
        for (auto& [ts, x] : entries) {
            auto [t, s] = ts;
            if (t >= orbit_count(k - 1) || s >= orbit_count(k)) throw MathError("differential entry outside the cell list");
            int d = isotropy(k - 1, t), dp = isotropy(k, s);
            if (static_cast<long>(x.size()) != order / d) throw MathError("group ring entry has the wrong length");
            long step = order / dp;
            for (long i = 0; i < static_cast<long>(x.size()); ++i)
                if (x[i] != x[mod(i + step, static_cast<long>(x.size()))])
                    throw MathError("group ring entry is not invariant under the source isotropy");
        }
    }
    for (auto& [k, entries] : diff) {
        auto lower = diff.find(k - 1);
        if (lower == diff.end()) continue;
        std::map<std::pair<int, int>, GroupRingElem> dd;
        for (auto& [ts, alpha] : entries)
            for (auto& [ts2, beta] : lower->second)
                if (ts2.second == ts.first) add_into(dd[{ts2.first, ts.second}], compose(order, alpha, beta));
        for (auto& [key, x] : dd)
            if (!all_zero(x)) throw MathError("dd != 0 in degree " + std::to_string(k));
    }
}

bool EqCellComplex::is_valid() const {
    try {
        validate();
        return true;
    } catch (const MathError&) {
        return false;
    }
}

json EqCellComplex::to_json() const {
    json jc = json::object(), jd = json::object();
    for (auto& [k, iso] : cells) jc[std::to_string(k)] = iso;
    for (auto& [k, entries] : diff) {
        json e = json::object();
        for (auto& [ts, x] : entries) e[std::to_string(ts.first) + "," + std::to_string(ts.second)] = x;
        if (!entries.empty()) jd[std::to_string(k)] = e;
    }
    return json{{"group", order}, {"cells", jc}, {"diff", jd}};
}

// ---- census

json CellCensus::to_json() const {
    json j = json::object();
    for (auto& [k, v] : dims) j[std::to_string(k)] = json{{"isotropy", v.first}, {"orbits", v.second}};
    return json{{"group", order}, {"cells", j}};
}

CellCensus cell_census(const RealRep& V) {
    require(V.genuine(), "cell census needs a genuine representation");
    CellCensus C;
    int m = V.m;
    C.order = m;
    C.dims[0] = {m, 1};
    long deg = V.a;
    if (V.a > 0) C.dims[deg] = {m, 1};
    for (long i = 0; i < V.b; ++i) C.dims[++deg] = {m / 2, 1};
    // lambda summands by descending order of zeta^k
    std::vector<int> ks;
    for (int k = 1; k <= static_cast<int>(V.c.size()); ++k)
        for (long r = 0; r < V.c[k - 1]; ++r) ks.push_back(k);
    std::stable_sort(ks.begin(), ks.end(), [m](int x, int y) { return lambda_kernel(m, x) < lambda_kernel(m, y); });
    for (int k : ks) {
        int K = lambda_kernel(m, k);
        C.dims[++deg] = {K, 1};
        C.dims[++deg] = {K, 1};
    }
    return C;
}

// ---- atomic complexes and constructions

EqCellComplex sphere_zero(int m) {
    require_group(m);
    EqCellComplex C;
    C.order = m;
    C.cells[0] = {m};
    return C;
}

EqCellComplex atomic_complex(int m, char kind, int k) {
    require_group(m);
    EqCellComplex C;
    C.order = m;
    switch (kind) {
    case 'e':
        C.cells[1] = {m};
        break;
    case 's':
        require(m >= 2, "sigma needs a group of even order");
        C.cells[0] = {m};
        C.cells[1] = {m / 2};
        C.diff[1][{0, 0}] = {1};
        break;
    case 'l': {
        require(k >= 1 && k < m / 2, "lambda(k) needs 1 <= k <= n-1");
        int K = lambda_kernel(m, k);
        C.cells[0] = {m};
        C.cells[1] = {K};
        C.cells[2] = {K};
        C.diff[1][{0, 0}] = {1};
        GroupRingElem f(m / K, 0);
        f[0] = -1;
        f[1] = 1;
        C.diff[2][{0, 0}] = f;
        break;
    }
    default:
        throw InvalidInput(std::string("unknown atomic complex '") + kind + "'");
    }
    return C;
}

EqCellComplex tensor(const EqCellComplex& A, const EqCellComplex& B) {
    require(A.order == B.order, "tensor of complexes over different groups");
    int m = A.order;
    EqCellComplex T;
    T.order = m;
    // (degA, degB, x, y, delta) -> index in its total degree
    std::map<std::tuple<int, int, int, int, long>, int> index;
    for (auto& [p, xs] : A.cells)
        for (auto& [q, ys] : B.cells)
            for (int x = 0; x < static_cast<int>(xs.size()); ++x)
                for (int y = 0; y < static_cast<int>(ys.size()); ++y) {
                    long sx = m / xs[x], sy = m / ys[y];
                    for (long delta = 0; delta < std::min(sx, sy); ++delta) {
                        auto& list = T.cells[p + q];
                        index[{p, q, x, y, delta}] = static_cast<int>(list.size());
                        list.push_back(m / static_cast<int>(std::max(sx, sy)));
                    }
                }
    auto add_term = [&](int deg, int src, int p, int x, int y, long i, long j, long coef) {
        long sx = m / A.isotropy(p, x), sy = m / B.isotropy(deg - p, y);
        auto [delta, t] = pair_orbit(sx, sy, i, j);
        int tgt = index.at({p, deg - p, x, y, delta});
        auto& e = T.diff[deg + 1][{tgt, src}];
        if (e.empty()) e.assign(m / T.cells[deg][tgt], 0);
        e[t] += coef;
    };
    for (auto& [p, xs] : A.cells)
        for (auto& [q, ys] : B.cells)
            for (int x = 0; x < static_cast<int>(xs.size()); ++x)
                for (int y = 0; y < static_cast<int>(ys.size()); ++y) {
                    long sx = m / xs[x], sy = m / ys[y];
                    for (long delta = 0; delta < std::min(sx, sy); ++delta) {
                        int src = index.at({p, q, x, y, delta});
                        int deg = p + q;
                        if (auto it = A.diff.find(p); it != A.diff.end())
                            for (auto& [ts, alpha] : it->second)
                                if (ts.second == x)
                                    for (long s = 0; s < static_cast<long>(alpha.size()); ++s)
                                        if (alpha[s]) add_term(deg - 1, src, p - 1, ts.first, y, s, delta, alpha[s]);
                        long sign = (p % 2 == 0) ? 1 : -1;
                        if (auto it = B.diff.find(q); it != B.diff.end())
                            for (auto& [ts, beta] : it->second)
                                if (ts.second == y)
                                    for (long s = 0; s < static_cast<long>(beta.size()); ++s)
                                        if (beta[s]) add_term(deg - 1, src, p, x, ts.first, 0, delta + s, sign * beta[s]);
                    }
                }
    for (auto& [k, entries] : T.diff)
        std::erase_if(entries, [](const auto& kv) { return all_zero(kv.second); });
    return T;
}

EqCellComplex dual(const EqCellComplex& C) {
    EqCellComplex D;
    D.order = C.order;
    for (auto& [k, iso] : C.cells) D.cells[-k] = iso;
    for (auto& [k, entries] : C.diff)
        for (auto& [ts, x] : entries) {
            auto [a, b] = ts;  // a in degree k-1, b in degree k
            long sa = static_cast<long>(x.size()), sb = C.order / C.isotropy(k, b);
            GroupRingElem y(sb, 0);
            for (long j = 0; j < sb; ++j) y[j] = x[mod(-j, sa)];
            D.diff[-(k - 1)][{b, a}] = y;
        }
    return D;
}

EqCellComplex shifted(const EqCellComplex& C, int s) {
    EqCellComplex D;
    D.order = C.order;
    for (auto& [k, iso] : C.cells) D.cells[k + s] = iso;
    for (auto& [k, entries] : C.diff) D.diff[k + s] = entries;
    return D;
}

EqCellComplex reduce(const EqCellComplex& C) {
    int m = C.order;
    // degree -> id -> isotropy; degree -> source -> target -> entry
    std::map<int, std::map<int, int>> alive;
    std::map<int, std::map<int, std::map<int, GroupRingElem>>> cols;
    for (auto& [k, iso] : C.cells)
        for (int i = 0; i < static_cast<int>(iso.size()); ++i) alive[k][i] = iso[i];
    for (auto& [k, entries] : C.diff)
        for (auto& [ts, x] : entries)
            if (!all_zero(x)) cols[k][ts.second][ts.first] = x;

    auto find_unit = [&](int k, int& B, int& A, long& sign, long& shift) {
        for (auto& [b, col] : cols[k])
            for (auto& [a, x] : col) {
                if (alive[k][b] != alive[k - 1][a]) continue;
                int nz = 0;
                long pos = 0;
                for (long i = 0; i < static_cast<long>(x.size()); ++i)
                    if (x[i]) ++nz, pos = i;
                if (nz == 1 && (x[pos] == 1 || x[pos] == -1)) {
                    B = b, A = a, sign = x[pos], shift = pos;
                    return true;
                }
            }
        return false;
    };

    for (auto& [k, unused] : C.cells) {
        (void)unused;
        int B, A;
        long sign, shift;
        while (cols.count(k) && find_unit(k, B, A, sign, shift)) {
            auto& dk = cols[k];
            std::vector<std::pair<int, GroupRingElem>> colB, rowA;
            for (auto& [x, beta] : dk[B])
                if (x != A) colB.push_back({x, translate(beta, -shift)});
            for (auto& [y, col] : dk)
                if (y != B)
                    if (auto it = col.find(A); it != col.end()) rowA.push_back({y, it->second});
            for (auto& [y, alpha] : rowA)
                for (auto& [x, beta] : colB) {
                    auto& e = dk[y][x];
                    add_into(e, compose(m, alpha, beta), -sign);
                    if (all_zero(e)) dk[y].erase(x);
                }
            dk.erase(B);
            for (auto& [y, col] : dk) col.erase(A);
            if (cols.count(k + 1))
                for (auto& [z, col] : cols[k + 1]) col.erase(B);
            if (cols.count(k - 1)) cols[k - 1].erase(A);
            alive[k].erase(B);
            alive[k - 1].erase(A);
        }
    }

    EqCellComplex R;
    R.order = m;
    std::map<int, std::map<int, int>> renum;
    for (auto& [k, ids] : alive) {
        if (ids.empty()) continue;
        for (auto& [id, iso] : ids) {
            renum[k][id] = static_cast<int>(R.cells[k].size());
            R.cells[k].push_back(iso);
        }
    }
    for (auto& [k, cs] : cols)
        for (auto& [b, col] : cs)
            for (auto& [a, x] : col)
                if (!all_zero(x)) R.diff[k][{renum[k - 1].at(a), renum[k].at(b)}] = x;
    return R;
}

EqCellComplex induce(const EqCellComplex& C, int m) {
    require_subgroup(m, C.order);
    long step = m / C.order;
    EqCellComplex I;
    I.order = m;
    I.cells = C.cells;
    for (auto& [k, entries] : C.diff)
        for (auto& [ts, x] : entries) {
            GroupRingElem y(m / C.isotropy(k - 1, ts.first), 0);
            for (std::size_t i = 0; i < x.size(); ++i) y[i * step] = x[i];
            I.diff[k][ts] = y;
        }
    return I;
}

namespace {

EqCellComplex positive_model(int m, long a, long b, const std::vector<long>& c) {
    EqCellComplex C = sphere_zero(m);
    auto step = [&](const EqCellComplex& A) { C = reduce(tensor(C, A)); };
    for (long i = 0; i < a; ++i) step(atomic_complex(m, 'e'));
    for (long i = 0; i < b; ++i) step(atomic_complex(m, 's'));
    std::vector<int> ks;
    for (int k = 1; k <= static_cast<int>(c.size()); ++k)
        for (long r = 0; r < c[k - 1]; ++r) ks.push_back(k);
    std::stable_sort(ks.begin(), ks.end(), [m](int x, int y) { return lambda_kernel(m, x) > lambda_kernel(m, y); });
    for (int k : ks) step(atomic_complex(m, 'l', k));
    return C;
}

}  // namespace

EqCellComplex chain_model(const RealRep& V, int shift) {
    require(shift == 0 || shift == -1, "shift must be 0 or -1");
    int m = V.m;
    std::vector<long> cp(V.c.size()), cn(V.c.size());
    for (std::size_t i = 0; i < V.c.size(); ++i) {
        cp[i] = std::max(V.c[i], 0L);
        cn[i] = std::max(-V.c[i], 0L);
    }
    EqCellComplex P = positive_model(m, std::max(V.a, 0L), std::max(V.b, 0L), cp);
    EqCellComplex N = positive_model(m, std::max(-V.a, 0L), std::max(-V.b, 0L), cn);
    EqCellComplex C = N.cells.size() == 1 && N.max_degree() == 0 ? P : reduce(tensor(P, dual(N)));
    return shifted(C, shift);
}

// ---- integer complexes

ChainComplexZ underlying(const EqCellComplex& C) {
    int m = C.order;
    ChainComplexZ Z;
    std::map<int, std::vector<long>> offset;
    for (auto& [k, iso] : C.cells) {
        long off = 0;
        for (int d : iso) {
            offset[k].push_back(off);
            off += m / d;
        }
        Z.set_rank(k, static_cast<int>(off));
    }
    for (auto& [k, entries] : C.diff) {
        IntMatrix M(Z.rank(k - 1), Z.rank(k));
        for (auto& [ts, x] : entries) {
            auto [a, b] = ts;
            long sa = static_cast<long>(x.size()), sb = m / C.isotropy(k, b);
            for (long j = 0; j < sb; ++j)
                for (long p = 0; p < sa; ++p)
                    if (x[p]) M(offset[k - 1][a] + mod(p + j, sa), offset[k][b] + j) += x[p];
        }
        Z.set_diff(k, M);
    }
    return Z;
}

ChainComplexZ fixed_subcomplex(const EqCellComplex& C, int h) {
    require_subgroup(C.order, h);
    ChainComplexZ U = underlying(C), F;
    std::map<int, std::vector<int>> keep;  // underlying indices of fixed cells
    for (auto& [k, iso] : C.cells) {
        int off = 0;
        for (int d : iso) {
            int s = C.order / d;
            if (d % h == 0)
                for (int i = 0; i < s; ++i) keep[k].push_back(off + i);
            off += s;
        }
        F.set_rank(k, static_cast<int>(keep[k].size()));
    }
    for (auto& [k, iso] : C.cells) {
        (void)iso;
        if (!C.cells.count(k - 1)) continue;
        IntMatrix D = U.diff(k), M(F.rank(k - 1), F.rank(k));
        for (int r = 0; r < M.rows(); ++r)
            for (int c = 0; c < M.cols(); ++c) M(r, c) = D(keep[k - 1][r], keep[k][c]);
        F.set_diff(k, M);
    }
    return F;
}

ChainComplexZ orbit_complex(const EqCellComplex& C) {
    ChainComplexZ Z;
    for (auto& [k, iso] : C.cells) Z.set_rank(k, static_cast<int>(iso.size()));
    for (auto& [k, entries] : C.diff) {
        IntMatrix M(Z.rank(k - 1), Z.rank(k));
        for (auto& [ts, x] : entries)
            for (long v : x) M(ts.first, ts.second) += v;
        Z.set_diff(k, M);
    }
    return Z;
}

SparseComplexZ bredon_complex(const EqCellComplex& C, const MackeyCoefficient& M, Variance v) {
    require(M.m == C.order, "coefficient system is over a different group");
    int m = C.order;
    bool hom = v == Variance::Homology;
    SparseComplexZ Z;
    std::map<int, std::vector<int>> offset;
    for (auto& [k, iso] : C.cells) {
        int off = 0;
        for (int d : iso) {
            offset[k].push_back(off);
            off += M.level_rank(d);
        }
        Z.set_rank(hom ? k : -k, off);
    }
    for (auto& [k, entries] : C.diff)
        for (auto& [ts, x] : entries) {
            auto [a, b] = ts;
            int d = C.isotropy(k - 1, a), dp = C.isotropy(k, b);
            int L = std::gcd(d, dp);
            // one orbit of C_{d'} on G/C_d per double coset; conj is the identity
            long orbits = std::gcd(static_cast<long>(m / dp), static_cast<long>(m / d));
            long coef = 0;
            for (long t = 0; t < orbits; ++t) coef += x[t];
            if (coef == 0) continue;
            if (hom) {
                IntMatrix blk = M.tr(L, d) * M.conj(L, 0) * M.res(L, dp);
                for (int r = 0; r < blk.rows(); ++r)
                    for (int c = 0; c < blk.cols(); ++c)
                        Z.add(k, offset[k - 1][a] + r, offset[k][b] + c, blk(r, c) * coef);
            } else {
                IntMatrix blk = M.tr(L, dp) * M.conj(L, 0) * M.res(L, d);
                for (int r = 0; r < blk.rows(); ++r)
                    for (int c = 0; c < blk.cols(); ++c)
                        Z.add(-(k - 1), offset[k][b] + r, offset[k - 1][a] + c, blk(r, c) * coef);
            }
        }
    Z.validate();
    return Z;
}

AbelianGroup bredon(const EqCellComplex& C, const MackeyCoefficient& M, Variance v, int k) {
    auto all = homology_all(bredon_complex(C, M, v));
    auto it = all.find(v == Variance::Homology ? k : -k);
    return it == all.end() ? AbelianGroup{} : it->second;
}

std::map<int, AbelianGroup> bredon_all(const EqCellComplex& C, const MackeyCoefficient& M, Variance v) {
    std::map<int, AbelianGroup> out;
    for (auto& [k, g] : homology_all(bredon_complex(C, M, v)))
        if (!g.is_zero()) out[v == Variance::Homology ? k : -k] = g;
    return out;
}

// ---- simplicial join oracle

namespace {

struct Factor {
    std::vector<int> gen;                  // generator on vertices
    std::vector<std::vector<int>> simplices;  // nonempty, sorted
};

Factor factor_points(bool swapped) {
    Factor F;
    F.gen = swapped ? std::vector<int>{1, 0} : std::vector<int>{0, 1};
    F.simplices = {{0}, {1}};
    return F;
}

Factor factor_polygon(int m, int k) {
    int g = std::gcd(m, k), d = m / g, u = k / g;
    require(d >= 3, "polygon needs at least three vertices");
    Factor F;
    for (int i = 0; i < d; ++i) F.gen.push_back((i + u) % d);
    for (int i = 0; i < d; ++i) F.simplices.push_back({i});
    for (int i = 0; i < d; ++i) {
        int a = i, b = (i + 1) % d;
        F.simplices.push_back({std::min(a, b), std::max(a, b)});
    }
    return F;
}

// sorts in place, returns the sign of the permutation applied
int sort_sign(std::vector<int>& v) {
    int sign = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j + 1 < v.size() - i; ++j)
            if (v[j] > v[j + 1]) std::swap(v[j], v[j + 1]), sign = -sign;
    return sign;
}

}  // namespace

EqCellComplex simplicial_model(const RealRep& V) {
    require(V.genuine(), "simplicial oracle needs a genuine representation");
    require(V.dim() <= 6, "simplicial oracle is limited to dim V <= 6");
    int m = V.m;
    std::vector<Factor> factors;
    for (long i = 0; i < V.a; ++i) factors.push_back(factor_points(false));
    for (long i = 0; i < V.b; ++i) factors.push_back(factor_points(true));
    for (int k = 1; k <= static_cast<int>(V.c.size()); ++k)
        for (long r = 0; r < V.c[k - 1]; ++r) factors.push_back(factor_polygon(m, k));

    std::vector<int> gen, base;
    for (auto& F : factors) {
        base.push_back(static_cast<int>(gen.size()));
        for (int v : F.gen) gen.push_back(base.back() + v);
    }
    // all simplices of the join, including the empty one
    std::vector<std::vector<int>> all{{}};
    for (std::size_t f = 0; f < factors.size(); ++f) {
        std::size_t n = all.size();
        for (std::size_t i = 0; i < n; ++i)
            for (auto& s : factors[f].simplices) {
                auto t = all[i];
                for (int v : s) t.push_back(base[f] + v);
                all.push_back(t);
            }
    }
    std::map<std::vector<int>, std::tuple<int, int, int, int>> where;  // deg, orbit, t, sign
    EqCellComplex C;
    C.order = m;
    for (auto& s : all) {
        if (where.count(s)) continue;
        int deg = static_cast<int>(s.size());
        int orbit = C.orbit_count(deg);
        std::vector<int> cur = s;
        int t = 0;
        while (true) {
            auto canon = cur;
            int sign = sort_sign(canon);
            if (t > 0 && canon == s) {
                if (sign != 1) throw MathError("simplex reversed by its stabilizer");
                break;
            }
            where[canon] = {deg, orbit, t, sign};
            for (int& v : cur) v = gen[v];
            ++t;
        }
        C.cells[deg].push_back(m / t);
    }
    for (auto& [s, info] : where) {
        auto [deg, orbit, t, sign] = info;
        if (t != 0 || deg == 0) continue;
        for (int i = 0; i < deg; ++i) {
            auto face = s;
            face.erase(face.begin() + i);
            auto [fdeg, fo, ft, fs] = where.at(face);
            auto& e = C.diff[deg][{fo, orbit}];
            if (e.empty()) e.assign(m / C.isotropy(fdeg, fo), 0);
            e[ft] += (i % 2 == 0 ? 1 : -1) * fs;
        }
    }
    for (auto& [k, entries] : C.diff)
        std::erase_if(entries, [](const auto& kv) { return all_zero(kv.second); });
    return C;
}

std::map<int, AbelianGroup> simplicial_oracle(const RealRep& V, const MackeyCoefficient& M, Variance v) {
    return bredon_all(simplicial_model(V), M, v);
}

// ---- slice cells and the Cell Lemma

EqCellComplex slice_cell_complex(int g, int k, long m, bool regular) {
    require_subgroup(g, k);
    return induce(chain_model(RealRep::regular(k).scaled(m), regular ? 0 : -1), g);
}

bool cell_lemma_check(int g, int k, long m) {
    require_subgroup(g, k);
    require(k > 1, "the Cell Lemma needs a nontrivial subgroup");
    require(m >= -4 && m <= 4, "|m| <= 4 for the Cell Lemma check");
    auto C = slice_cell_complex(g, k, m);
    MackeyCoefficient Z(MackeyKind::ConstantZ, g);
    auto H = bredon_all(C, Z, Variance::Homology);
    return std::none_of(H.begin(), H.end(), [](const auto& kv) { return kv.first >= -3 && kv.first <= -1; });
}

}  // namespace slicegap
