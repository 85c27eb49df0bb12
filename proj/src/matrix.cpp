#include "slicegap/matrix.hpp"

#include <algorithm>
#include <set>

#include "slicegap/error.hpp"

namespace slicegap {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    a_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        require(static_cast<int>(r.size()) == cols_, "IntMatrix: ragged rows");
        for (long v : r) a_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    require(cols_ == o.rows_, "IntMatrix: product shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const auto& a = (*this)(i, k);
            if (sgn(a) == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                if (sgn(o(k, j)) != 0) r(i, j) += a * o(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, "IntMatrix: sum shape mismatch");
    IntMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const { return *this + o.scaled(-1); }

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

IntMatrix IntMatrix::scaled(long k) const {
    IntMatrix r = *this;
    for (auto& v : r.a_) v *= k;
    return r;
}

bool IntMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const mpz_class& v) { return sgn(v) == 0; });
}

mpz_class IntMatrix::det() const {
    require(rows_ == cols_, "IntMatrix::det: square matrix expected");
    const int n = rows_;
    if (n == 0) return 1;
    IntMatrix m = *this;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (sgn(m(k, k)) == 0) {
            int p = k + 1;
            while (p < n && sgn(m(p, k)) == 0) ++p;
            if (p == n) return 0;
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = v;
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

int IntMatrix::rank() const {
    std::vector<std::vector<mpq_class>> m(rows_, std::vector<mpq_class>(cols_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m[i][j] = (*this)(i, j);
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int p = r;
        while (p < rows_ && sgn(m[p][c]) == 0) ++p;
        if (p == rows_) continue;
        std::swap(m[r], m[p]);
        for (int i = r + 1; i < rows_; ++i) {
            if (sgn(m[i][c]) == 0) continue;
            mpq_class f = m[i][c] / m[r][c];
            for (int j = c; j < cols_; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

json IntMatrix::to_json() const {
    json entries = json::object();
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const auto& v = (*this)(i, j);
            if (sgn(v) == 0) continue;
            auto key = std::to_string(i) + "," + std::to_string(j);
            if (v.fits_slong_p())
                entries[key] = v.get_si();
            else
                entries[key] = v.get_str();
        }
    return json{{"rows", rows_}, {"cols", cols_}, {"entries", entries}};
}

IntMatrix IntMatrix::from_json(const json& j) {
    IntMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
    if (j.contains("entries")) {
        for (const auto& [key, v] : j.at("entries").items()) {
            auto comma = key.find(',');
            require(comma != std::string::npos, "IntMatrix: bad entry key " + key);
            int r = std::stoi(key.substr(0, comma)), c = std::stoi(key.substr(comma + 1));
            require(r >= 0 && r < m.rows_ && c >= 0 && c < m.cols_, "IntMatrix: entry out of bounds");
            m(r, c) = v.is_string() ? mpz_class(v.get<std::string>()) : mpz_class(v.get<long>());
        }
    }
    return m;
}

namespace {

int cmpabs(const mpz_class& a, const mpz_class& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

// Shared elimination. U and V are updated only when `track` is set.
void reduce(IntMatrix& D, IntMatrix& U, IntMatrix& V, bool track) {
    const int m = D.rows(), n = D.cols();
    auto swap_rows = [&](int a, int b) {
        if (a == b) return;
        for (int j = 0; j < n; ++j) std::swap(D(a, j), D(b, j));
        if (track)
            for (int j = 0; j < m; ++j) std::swap(U(a, j), U(b, j));
    };
    auto swap_cols = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < m; ++i) std::swap(D(i, a), D(i, b));
        if (track)
            for (int i = 0; i < n; ++i) std::swap(V(i, a), V(i, b));
    };
    // row_dst -= q * row_src
    auto row_axpy = [&](int dst, int src, const mpz_class& q) {
        for (int j = 0; j < n; ++j)
            if (sgn(D(src, j)) != 0) D(dst, j) -= q * D(src, j);
        if (track)
            for (int j = 0; j < m; ++j)
                if (sgn(U(src, j)) != 0) U(dst, j) -= q * U(src, j);
    };
    auto col_axpy = [&](int dst, int src, const mpz_class& q) {
        for (int i = 0; i < m; ++i)
            if (sgn(D(i, src)) != 0) D(i, dst) -= q * D(i, src);
        if (track)
            for (int i = 0; i < n; ++i)
                if (sgn(V(i, src)) != 0) V(i, dst) -= q * V(i, src);
    };

    for (int t = 0; t < std::min(m, n); ++t) {
        // smallest nonzero entry of the trailing block
        int pr = -1, pc = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j)
                if (sgn(D(i, j)) != 0 && (pr < 0 || cmpabs(D(i, j), D(pr, pc)) < 0)) pr = i, pc = j;
        if (pr < 0) break;
        swap_rows(t, pr);
        swap_cols(t, pc);

        for (;;) {
            bool clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (sgn(D(i, t)) == 0) continue;
                mpz_class q = D(i, t) / D(t, t);
                if (sgn(q) != 0) row_axpy(i, t, q);
                if (sgn(D(i, t)) != 0) clean = false;
            }
            for (int j = t + 1; j < n; ++j) {
                if (sgn(D(t, j)) == 0) continue;
                mpz_class q = D(t, j) / D(t, t);
                if (sgn(q) != 0) col_axpy(j, t, q);
                if (sgn(D(t, j)) != 0) clean = false;
            }
            if (!clean) {
                // a remainder smaller than the pivot is left; promote the smallest
                int br = t, bc = t;
                for (int i = t + 1; i < m; ++i)
                    if (sgn(D(i, t)) != 0 && cmpabs(D(i, t), D(br, bc)) < 0) br = i, bc = t;
                for (int j = t + 1; j < n; ++j)
                    if (sgn(D(t, j)) != 0 && cmpabs(D(t, j), D(br, bc)) < 0) br = t, bc = j;
                swap_rows(t, br);
                swap_cols(t, bc);
                continue;
            }
            // divisibility: fold an offending row into the pivot row
            int bad = -1;
            for (int i = t + 1; i < m && bad < 0; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (sgn(D(i, j)) != 0 && !mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            row_axpy(t, bad, -1);
        }
        if (sgn(D(t, t)) < 0) {
            for (int j = 0; j < n; ++j) D(t, j) = -D(t, j);
            if (track)
                for (int j = 0; j < m; ++j) U(t, j) = -U(t, j);
        }
    }
}

std::vector<mpz_class> diag_factors(const IntMatrix& D) {
    std::vector<mpz_class> out;
    for (int i = 0; i < std::min(D.rows(), D.cols()); ++i)
        if (sgn(D(i, i)) != 0) out.push_back(D(i, i));
    return out;
}

}  // namespace

std::vector<mpz_class> SNF::invariant_factors() const { return diag_factors(D); }

int SNF::rank() const { return static_cast<int>(invariant_factors().size()); }

SNF snf(const IntMatrix& M) {
    SNF r{IntMatrix::identity(M.rows()), M, IntMatrix::identity(M.cols())};
    reduce(r.D, r.U, r.V, true);
    return r;
}

std::vector<mpz_class> invariant_factors(const IntMatrix& M) {
    IntMatrix D = M, U, V;
    reduce(D, U, V, false);
    return diag_factors(D);
}

IntMatrix integer_kernel(const IntMatrix& A) {
    auto r = snf(A);
    const int rank = r.rank();
    IntMatrix K(A.cols(), A.cols() - rank);
    for (int i = 0; i < A.cols(); ++i)
        for (int j = rank; j < A.cols(); ++j) K(i, j - rank) = r.V(i, j);
    return K;
}

IntMatrix lattice_basis(const IntMatrix& P) {
    // unimodular column operations to column echelon form
    IntMatrix M = P;
    const int rows = M.rows(), cols = M.cols();
    int piv = 0;
    for (int i = 0; i < rows && piv < cols; ++i) {
        for (;;) {
            int best = -1;
            for (int c = piv; c < cols; ++c)
                if (sgn(M(i, c)) != 0 && (best < 0 || cmpabs(M(i, c), M(i, best)) < 0)) best = c;
            if (best < 0) break;
            if (best != piv)
                for (int r = 0; r < rows; ++r) std::swap(M(r, best), M(r, piv));
            bool done = true;
            for (int c = piv + 1; c < cols; ++c) {
                if (sgn(M(i, c)) == 0) continue;
                mpz_class q = M(i, c) / M(i, piv);
                for (int r = 0; r < rows; ++r) M(r, c) -= q * M(r, piv);
                if (sgn(M(i, c)) != 0) done = false;
            }
            if (done) {
                ++piv;
                break;
            }
        }
    }
    IntMatrix B(rows, piv);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < piv; ++c) B(r, c) = M(r, c);
    return B;
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
    require(a.rows() == b.rows(), "hstack: row mismatch");
    IntMatrix r(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

namespace {

// integer coordinates c with B c = v for a full-column-rank B; v must lie in the lattice
std::vector<mpz_class> coordinates(const IntMatrix& B, const IntMatrix& V, int col) {
    const int n = B.rows(), k = B.cols();
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(k + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j) m[i][j] = B(i, j);
        m[i][k] = V(i, col);
    }
    std::vector<int> pivcol;
    int r = 0;
    for (int c = 0; c < k; ++c) {
        int p = r;
        while (p < n && sgn(m[p][c]) == 0) ++p;
        if (p == n) throw MathError("coordinates: basis is not of full column rank");
        std::swap(m[r], m[p]);
        for (int i = 0; i < n; ++i) {
            if (i == r || sgn(m[i][c]) == 0) continue;
            mpq_class f = m[i][c] / m[r][c];
            for (int j = c; j <= k; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    for (int i = k; i < n; ++i)
        if (sgn(m[i][k]) != 0) throw MathError("coordinates: vector outside the lattice span");
    std::vector<mpz_class> out(k);
    for (int c = 0; c < k; ++c) {
        mpq_class v = m[c][k] / m[c][c];
        if (v.get_den() != 1) throw MathError("coordinates: vector outside the lattice");
        out[c] = v.get_num();
    }
    return out;
}

}  // namespace

bool in_column_lattice(const IntMatrix& R, const IntMatrix& V) {
    require(R.rows() == V.rows(), "in_column_lattice: row mismatch");
    auto B = lattice_basis(R);
    for (int j = 0; j < V.cols(); ++j) {
        bool zero = true;
        for (int i = 0; i < V.rows() && zero; ++i) zero = sgn(V(i, j)) == 0;
        if (zero) continue;
        if (B.cols() == 0) return false;
        try {
            coordinates(B, V, j);
        } catch (const MathError&) {
            return false;
        }
    }
    return true;
}

AbelianGroup subquotient(const IntMatrix& f, const IntMatrix& g, const IntMatrix& R) {
    const int r = f.cols();
    require(f.rows() == R.rows() && g.rows() == r && R.rows() == r, "subquotient: shape mismatch");
    // K = {x : f x in im R}
    auto ker = integer_kernel(hstack(f, R.scaled(-1)));
    IntMatrix proj(r, ker.cols());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < ker.cols(); ++j) proj(i, j) = ker(i, j);
    auto K = lattice_basis(proj);
    auto S = hstack(g, R);
    IntMatrix C(K.cols(), S.cols());
    for (int j = 0; j < S.cols(); ++j) {
        bool zero = true;
        for (int i = 0; i < r && zero; ++i) zero = sgn(S(i, j)) == 0;
        if (zero) continue;
        auto c = coordinates(K, S, j);
        for (int i = 0; i < K.cols(); ++i) C(i, j) = c[i];
    }
    AbelianGroup out;
    auto f_ = invariant_factors(C);
    out.betti = K.cols() - static_cast<int>(f_.size());
    for (const auto& d : f_)
        if (d > 1) out.torsion.push_back(d);
    return out;
}

json AbelianGroup::to_json() const {
    json t = json::array();
    for (const auto& v : torsion) {
        if (v.fits_slong_p())
            t.push_back(v.get_si());
        else
            t.push_back(v.get_str());
    }
    return json{{"betti", betti}, {"torsion", t}};
}

std::string AbelianGroup::str() const {
    if (is_zero()) return "0";
    std::string s;
    auto sep = [&] {
        if (!s.empty()) s += " + ";
    };
    if (betti) {
        sep();
        s += betti == 1 ? "Z" : "Z^" + std::to_string(betti);
    }
    for (const auto& t : torsion) {
        sep();
        s += "Z/" + t.get_str();
    }
    return s;
}

int ChainComplexZ::rank(int k) const {
    auto it = ranks_.find(k);
    return it == ranks_.end() ? 0 : it->second;
}

IntMatrix ChainComplexZ::diff(int k) const {
    auto it = diffs_.find(k);
    if (it != diffs_.end()) return it->second;
    return IntMatrix(rank(k - 1), rank(k));
}

void ChainComplexZ::validate() const {
    for (const auto& [k, d] : diffs_) {
        if (d.rows() != rank(k - 1) || d.cols() != rank(k))
            throw MathError("chain complex: differential " + std::to_string(k) + " has the wrong shape");
    }
    for (const auto& [k, d] : diffs_) {
        auto it = diffs_.find(k - 1);
        if (it == diffs_.end()) continue;
        if (!(it->second * d).is_zero())
            throw MathError("chain complex: dd != 0 at degree " + std::to_string(k));
    }
}

bool ChainComplexZ::is_valid() const {
    try {
        validate();
        return true;
    } catch (const MathError&) {
        return false;
    }
}

json ChainComplexZ::to_json() const {
    json r = json::object(), d = json::object();
    for (const auto& [k, n] : ranks_) r[std::to_string(k)] = n;
    for (const auto& [k, m] : diffs_) d[std::to_string(k)] = m.to_json();
    return json{{"ranks", r}, {"diffs", d}};
}

namespace {

AbelianGroup group_from(int n_k, const std::vector<mpz_class>& out_factors,
                        const std::vector<mpz_class>& in_factors) {
    AbelianGroup g;
    g.betti = n_k - static_cast<int>(out_factors.size()) - static_cast<int>(in_factors.size());
    for (const auto& f : in_factors)
        if (f > 1) g.torsion.push_back(f);
    std::sort(g.torsion.begin(), g.torsion.end());
    return g;
}

}  // namespace

AbelianGroup homology(const ChainComplexZ& C, int k) {
    C.validate();
    return group_from(C.rank(k), invariant_factors(C.diff(k)), invariant_factors(C.diff(k + 1)));
}

AbelianGroup cohomology(const ChainComplexZ& C, int k) {
    C.validate();
    // delta^{k-1} = d_k^T lands in degree k
    return group_from(C.rank(k), invariant_factors(C.diff(k + 1)), invariant_factors(C.diff(k)));
}

// ---- sparse complexes

void SparseComplexZ::add(int k, int target, int source, const mpz_class& v) {
    if (v == 0) return;
    auto& col = cols_[k][source];
    auto& e = col[target];
    e += v;
    if (e == 0) col.erase(target);
}

int SparseComplexZ::rank(int k) const {
    auto it = ranks_.find(k);
    return it == ranks_.end() ? 0 : it->second;
}

void SparseComplexZ::validate() const {
    for (const auto& [k, cols] : cols_)
        for (const auto& [s, col] : cols) {
            if (s < 0 || s >= rank(k)) throw MathError("sparse complex: source index out of range");
            for (const auto& [t, v] : col)
                if (t < 0 || t >= rank(k - 1)) throw MathError("sparse complex: target index out of range");
        }
    for (const auto& [k, cols] : cols_) {
        auto lower = cols_.find(k - 1);
        if (lower == cols_.end()) continue;
        for (const auto& [s, col] : cols) {
            std::map<int, mpz_class> acc;
            for (const auto& [a, v] : col) {
                auto it = lower->second.find(a);
                if (it == lower->second.end()) continue;
                for (const auto& [t, w] : it->second) acc[t] += v * w;
            }
            for (const auto& [t, v] : acc)
                if (v != 0) throw MathError("chain complex: dd != 0 at degree " + std::to_string(k));
        }
    }
}

SparseComplexZ SparseComplexZ::reduced() const {
    std::map<int, std::set<int>> alive;
    for (const auto& [k, r] : ranks_)
        for (int i = 0; i < r; ++i) alive[k].insert(i);
    auto cols = cols_;
    // degree -> target -> sources with a nonzero entry
    std::map<int, std::map<int, std::set<int>>> rows;
    for (const auto& [k, cs] : cols)
        for (const auto& [s, col] : cs)
            for (const auto& [t, v] : col) rows[k][t].insert(s);

    for (auto& [k, cs] : cols) {
        auto& rk = rows[k];
        bool progress = true;
        while (progress) {
            progress = false;
            for (auto cit = cs.begin(); cit != cs.end() && !progress; ++cit) {
                for (const auto& [a, v] : cit->second) {
                    if (v != 1 && v != -1) continue;
                    int B = cit->first, A = a;
                    mpz_class sign = v;
                    Column colB = cit->second;
                    colB.erase(A);
                    std::vector<std::pair<int, mpz_class>> rowA;
                    for (int y : rk[A])
                        if (y != B) rowA.push_back({y, cs[y].at(A)});
                    for (const auto& [y, alpha] : rowA) {
                        auto& col = cs[y];
                        for (const auto& [x, beta] : colB) {
                            auto& e = col[x];
                            e -= sign * alpha * beta;
                            if (e == 0) {
                                col.erase(x);
                                rk[x].erase(y);
                            } else {
                                rk[x].insert(y);
                            }
                        }
                    }
                    for (const auto& [x, beta] : cit->second) rk[x].erase(B);
                    for (int y : rk[A]) cs[y].erase(A);
                    rk.erase(A);
                    cs.erase(B);
                    if (auto up = cols.find(k + 1); up != cols.end()) {
                        for (int z : rows[k + 1][B]) up->second[z].erase(B);
                        rows[k + 1].erase(B);
                    }
                    if (auto down = cols.find(k - 1); down != cols.end()) {
                        if (auto it = down->second.find(A); it != down->second.end()) {
                            for (const auto& [t, w] : it->second) rows[k - 1][t].erase(A);
                            down->second.erase(it);
                        }
                    }
                    alive[k].erase(B);
                    alive[k - 1].erase(A);
                    progress = true;
                    break;
                }
            }
        }
    }

    SparseComplexZ R;
    std::map<int, std::map<int, int>> renum;
    for (const auto& [k, ids] : alive) {
        int n = 0;
        for (int id : ids) renum[k][id] = n++;
        R.set_rank(k, n);
    }
    for (const auto& [k, cs] : cols)
        for (const auto& [s, col] : cs)
            for (const auto& [t, v] : col) R.add(k, renum[k - 1].at(t), renum[k].at(s), v);
    return R;
}

ChainComplexZ SparseComplexZ::dense() const {
    ChainComplexZ C;
    for (const auto& [k, r] : ranks_) C.set_rank(k, r);
    for (const auto& [k, cs] : cols_) {
        IntMatrix M(rank(k - 1), rank(k));
        for (const auto& [s, col] : cs)
            for (const auto& [t, v] : col) M(t, s) = v;
        C.set_diff(k, M);
    }
    return C;
}

std::map<int, AbelianGroup> homology_all(const SparseComplexZ& C) {
    C.validate();
    ChainComplexZ D = C.reduced().dense();
    std::map<int, std::vector<mpz_class>> factors;
    for (const auto& [k, r] : D.ranks()) factors[k] = invariant_factors(D.diff(k));
    std::map<int, AbelianGroup> out;
    for (const auto& [k, r] : D.ranks()) {
        auto up = D.ranks().count(k + 1) ? factors[k + 1] : std::vector<mpz_class>{};
        out[k] = group_from(r, factors[k], up);
    }
    return out;
}

}  // namespace slicegap
