#pragma once

// Integer lattice arithmetic: Hermite/Smith normal forms over arbitrary
// precision integers, character lattices of reductive groups between the
// root and weight lattices, finite abelian quotient presentations, and the
// dual (character-group) side used for component groups of centralizers.

#include "lie/common.hpp"
#include "lie/rootsys.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>

namespace lie {

using bigint = boost::multiprecision::cpp_int;
using Mat = std::vector<std::vector<bigint>>;

inline Mat identity_mat(int n) {
    Mat m(n, std::vector<bigint>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    int n = static_cast<int>(a.size());
    int k = n ? static_cast<int>(a[0].size()) : 0;
    int m = k ? static_cast<int>(b[0].size()) : 0;
    Mat c(n, std::vector<bigint>(m, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (int l = 0; l < m; ++l) c[i][l] += a[i][j] * b[j][l];
        }
    return c;
}

inline std::vector<bigint> row_mul(const std::vector<bigint>& v, const Mat& m) {
    int n = static_cast<int>(m.size());
    int k = n ? static_cast<int>(m[0].size()) : 0;
    std::vector<bigint> out(k, 0);
    for (int i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < k; ++j) out[j] += v[i] * m[i][j];
    }
    return out;
}

// Smith normal form: U * A * V = D diagonal, with V_inv maintained so that
// generator lifts are available without a separate inversion.
struct Smith {
    Mat d;      // diagonal (same shape as input)
    Mat u;      // rows x rows, unimodular
    Mat v;      // cols x cols, unimodular
    Mat v_inv;  // inverse of v
    std::vector<bigint> diag;  // nonzero invariant factors, divisibility chain
};

inline Smith smith_normal_form(Mat a) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    Smith s;
    s.u = identity_mat(rows);
    s.v = identity_mat(cols);
    s.v_inv = identity_mat(cols);

    auto row_swap = [&](int i, int j) {
        std::swap(a[i], a[j]);
        std::swap(s.u[i], s.u[j]);
    };
    auto row_add = [&](int dst, int src, const bigint& f) {  // row dst += f*row src
        for (int k = 0; k < cols; ++k) a[dst][k] += f * a[src][k];
        for (int k = 0; k < rows; ++k) s.u[dst][k] += f * s.u[src][k];
    };
    auto row_neg = [&](int i) {
        for (auto& x : a[i]) x = -x;
        for (auto& x : s.u[i]) x = -x;
    };
    auto col_swap = [&](int i, int j) {
        for (int r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
        for (int r = 0; r < cols; ++r) std::swap(s.v[r][i], s.v[r][j]);
        std::swap(s.v_inv[i], s.v_inv[j]);
    };
    auto col_add = [&](int dst, int src, const bigint& f) {  // col dst += f*col src
        for (int r = 0; r < rows; ++r) a[r][dst] += f * a[r][src];
        for (int r = 0; r < cols; ++r) s.v[r][dst] += f * s.v[r][src];
        // (v * v_inv = I) is preserved by the inverse row operation
        for (int k = 0; k < cols; ++k) s.v_inv[src][k] -= f * s.v_inv[dst][k];
    };
    auto col_neg = [&](int j) {
        for (int r = 0; r < rows; ++r) a[r][j] = -a[r][j];
        for (int r = 0; r < cols; ++r) s.v[r][j] = -s.v[r][j];
        for (int k = 0; k < cols; ++k) s.v_inv[j][k] = -s.v_inv[j][k];
    };

    int t = 0;
    while (t < rows && t < cols) {
        // find a nonzero pivot
        int pi = -1, pj = -1;
        for (int i = t; i < rows && pi < 0; ++i)
            for (int j = t; j < cols; ++j)
                if (a[i][j] != 0) { pi = i; pj = j; break; }
        if (pi < 0) break;
        row_swap(t, pi);
        col_swap(t, pj);
        // clear row/column t
        bool again = true;
        while (again) {
            again = false;
            for (int i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                if (a[i][t] % a[t][t] == 0) {
                    row_add(i, t, -(a[i][t] / a[t][t]));
                } else {
                    bigint q = a[i][t] / a[t][t];
                    row_add(i, t, -q);
                    row_swap(i, t);
                    again = true;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                if (a[t][j] % a[t][t] == 0) {
                    col_add(j, t, -(a[t][j] / a[t][t]));
                } else {
                    bigint q = a[t][j] / a[t][t];
                    col_add(j, t, -q);
                    col_swap(j, t);
                    again = true;
                }
            }
        }
        if (a[t][t] < 0) row_neg(t);
        ++t;
    }
    // enforce the divisibility chain d1 | d2 | ...
    for (int i = 0; i + 1 < t; ++i) {
        for (int j = i + 1; j < t; ++j) {
            if (a[j][j] % a[i][i] == 0) continue;
            // fold a[j][j] into position i via one column add then re-clear
            col_add(i, j, 1);
            bool again = true;
            while (again) {
                again = false;
                if (a[j][i] != 0) {
                    if (a[i][i] != 0 && a[j][i] % a[i][i] == 0) {
                        row_add(j, i, -(a[j][i] / a[i][i]));
                    } else {
                        bigint q = a[i][i] == 0 ? bigint(0) : bigint(a[j][i] / a[i][i]);
                        row_add(j, i, -q);
                        row_swap(i, j);
                        again = true;
                    }
                }
                if (a[i][j] != 0) {
                    if (a[i][i] != 0 && a[i][j] % a[i][i] == 0) {
                        col_add(j, i, -(a[i][j] / a[i][i]));
                    } else {
                        bigint q = a[i][i] == 0 ? bigint(0) : bigint(a[i][j] / a[i][i]);
                        col_add(j, i, -q);
                        col_swap(i, j);
                        again = true;
                    }
                }
            }
            if (a[i][i] < 0) row_neg(i);
            if (a[j][j] < 0) row_neg(j);
            j = i;  // restart the inner scan after folding
        }
    }
    s.d = a;
    for (int i = 0; i < t; ++i)
        if (a[i][i] != 0) s.diag.push_back(a[i][i]);
    if (cols) (void)col_neg;  // silence unused in degenerate shapes
    return s;
}

// Row-style Hermite normal form of the lattice spanned by the rows:
// returns a full-row-rank basis (rows sorted by pivot column).
inline Mat row_lattice_basis(Mat a) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(a[r], a[p]);
        bool again = true;
        while (again) {
            again = false;
            for (int i = r + 1; i < rows; ++i) {
                if (a[i][c] == 0) continue;
                bigint q = a[i][c] / a[r][c];
                for (int k = 0; k < cols; ++k) a[i][k] -= q * a[r][k];
                if (a[i][c] != 0) { std::swap(a[r], a[i]); again = true; }
            }
        }
        if (a[r][c] < 0)
            for (auto& x : a[r]) x = -x;
        // reduce rows above
        for (int i = 0; i < r; ++i) {
            bigint q = a[i][c] / a[r][c];
            if (a[i][c] < 0 && a[i][c] % a[r][c] != 0) q -= 1;
            if (q != 0)
                for (int k = 0; k < cols; ++k) a[i][k] -= q * a[r][k];
        }
        ++r;
    }
    a.resize(r);
    return a;
}

// Presentation of the torsion subgroup of (ambient lattice) / (row span of
// rel) as a product of cyclic groups Z/d_i with d_i > 1, d_i | d_{i+1}.
struct TorsionPresentation {
    std::vector<bigint> factors;  // cyclic orders d_i > 1
    // x (coordinates in the ambient basis) -> class (a_1..a_k), a_i mod d_i
    Mat proj;                     // k x n: class_i = (x . proj[i]) mod d_i ... stored as rows
    Mat lifts;                    // k x n: a lift of each cyclic generator

    int num_factors() const { return static_cast<int>(factors.size()); }
    std::vector<bigint> project(const std::vector<bigint>& x) const {
        std::vector<bigint> out(num_factors());
        for (int i = 0; i < num_factors(); ++i) {
            bigint s = 0;
            for (std::size_t j = 0; j < x.size(); ++j) s += proj[i][j] * x[j];
            s %= factors[i];
            if (s < 0) s += factors[i];
            out[i] = s;
        }
        return out;
    }
    std::vector<bigint> project_int(const std::vector<int>& x) const {
        return project(std::vector<bigint>(x.begin(), x.end()));
    }
    bigint order() const {
        bigint o = 1;
        for (const auto& f : factors) o *= f;
        return o;
    }
    bigint element_order(const std::vector<bigint>& a) const {
        bigint o = 1;
        for (int i = 0; i < num_factors(); ++i) {
            if (a[i] == 0) continue;
            bigint g = boost::multiprecision::gcd(a[i], factors[i]);
            bigint oi = factors[i] / g;
            o = o / boost::multiprecision::gcd(o, oi) * oi;
        }
        return o;
    }
};

// Torsion of Z^n / (row span of rel). Relations may be any spanning set.
inline TorsionPresentation quotient_torsion(const Mat& rel, int n) {
    Mat a = rel;
    if (a.empty()) a.assign(1, std::vector<bigint>(n, 0));
    for (auto& r : a) r.resize(n, 0);
    Smith s = smith_normal_form(a);
    TorsionPresentation tp;
    // x * V has coordinates in the basis where relations are diagonal;
    // coordinate i is killed modulo d_i.
    for (std::size_t i = 0; i < s.diag.size(); ++i) {
        if (s.diag[i] == 1) continue;
        tp.factors.push_back(s.diag[i]);
        std::vector<bigint> col(n);
        for (int r = 0; r < n; ++r) col[r] = s.v[r][i];
        tp.proj.push_back(std::move(col));
        std::vector<bigint> lift(n);
        for (int c = 0; c < n; ++c) lift[c] = s.v_inv[i][c];
        tp.lifts.push_back(std::move(lift));
    }
    return tp;
}

// A homomorphism between finite abelian groups in cyclic-factor coordinates:
// y_j = sum_i m[i][j] * x_i  (mod target factor d'_j).
struct FinAbHom {
    Mat m;  // src factors x dst factors
    std::vector<bigint> apply(const std::vector<bigint>& x,
                              const std::vector<bigint>& dst_factors) const {
        int k = static_cast<int>(dst_factors.size());
        std::vector<bigint> y(k, 0);
        for (std::size_t i = 0; i < x.size(); ++i)
            for (int j = 0; j < k; ++j) y[j] += m[i][j] * x[i];
        for (int j = 0; j < k; ++j) {
            y[j] %= dst_factors[j];
            if (y[j] < 0) y[j] += dst_factors[j];
        }
        return y;
    }
};

// Hom from torsion(A) to torsion(B) induced by a map that sends each cyclic
// generator lift of A through `ambient` coordinates into B's presentation.
inline FinAbHom induced_hom(const TorsionPresentation& src, const TorsionPresentation& dst,
                            const std::function<std::vector<bigint>(const std::vector<bigint>&)>&
                                ambient_map = {}) {
    FinAbHom h;
    h.m.assign(src.num_factors(), std::vector<bigint>(dst.num_factors(), 0));
    for (int i = 0; i < src.num_factors(); ++i) {
        auto lift = src.lifts[i];
        if (ambient_map) lift = ambient_map(lift);
        auto img = dst.project(lift);
        for (int j = 0; j < dst.num_factors(); ++j) h.m[i][j] = img[j];
    }
    // well-definedness: d_i * lift_i must die in dst
    for (int i = 0; i < src.num_factors(); ++i) {
        auto lift = src.lifts[i];
        if (ambient_map) lift = ambient_map(lift);
        for (auto& x : lift) x *= src.factors[i];
        auto img = dst.project(lift);
        for (const auto& v : img)
            if (v != 0) throw std::logic_error("induced_hom: map not well-defined");
    }
    return h;
}

// Dual of an endomorphism/homomorphism of finite abelian groups.
// If f: A -> B has matrix F (x_i generators of A, y_j of B, orders d_i, e_j),
// the dual f*: B* -> A* in the standard dual coordinates has matrix
// (f*)_{j,i} = d_i * F_{i,j} / e_j  (mod d_i); divisibility always holds.
inline FinAbHom dual_hom(const FinAbHom& f, const std::vector<bigint>& src_factors,
                         const std::vector<bigint>& dst_factors) {
    int a = static_cast<int>(src_factors.size());
    int b = static_cast<int>(dst_factors.size());
    FinAbHom g;
    g.m.assign(b, std::vector<bigint>(a, 0));
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) {
            bigint num = src_factors[i] * f.m[i][j];
            if (num % dst_factors[j] != 0)
                throw std::logic_error("dual_hom: divisibility violated (not a homomorphism)");
            bigint v = num / dst_factors[j];
            v %= src_factors[i];
            if (v < 0) v += src_factors[i];
            g.m[j][i] = v;
        }
    return g;
}

// --- character lattice of the group -----------------------------------------

// The character lattice X with Q <= X <= P, in the weight basis of the
// semisimple part. Stored as a full-rank row basis (n x n, HNF).
class CharacterLattice {
  public:
    CharacterLattice(const RootSystem& rs, const GroupSpec& spec) : n_(rs.semisimple_rank()) {
        Mat q = root_lattice_rows(rs);
        switch (spec.isogeny) {
            case Isogeny::simply_connected:
                basis_ = identity_mat(n_);
                break;
            case Isogeny::adjoint:
                basis_ = row_lattice_basis(q);
                break;
            case Isogeny::intermediate: {
                Mat gen = q;
                for (const auto& g : spec.lattice_gens) {
                    if (static_cast<int>(g.size()) != n_)
                        throw UsageError("lattice generator has wrong length");
                    gen.emplace_back(g.begin(), g.end());
                }
                basis_ = row_lattice_basis(gen);
                validate_weyl_stable(rs);
                break;
            }
        }
        if (static_cast<int>(basis_.size()) != n_)
            throw std::logic_error("character lattice is not full rank");
    }

    int rank() const { return n_; }
    const Mat& basis() const { return basis_; }

    // Coordinates of a weight vector in the X-basis; throws if not in X.
    std::vector<bigint> coords_of(const std::vector<bigint>& weight) const {
        // solve x * basis = weight by forward substitution on the HNF
        std::vector<bigint> w = weight;
        std::vector<bigint> x(n_, 0);
        for (int i = 0; i < n_; ++i) {
            int p = pivot_col(i);
            if (w[p] % basis_[i][p] != 0) throw UsageError("weight not in the character lattice");
            x[i] = w[p] / basis_[i][p];
            if (x[i] != 0)
                for (int k = 0; k < n_; ++k) w[k] -= x[i] * basis_[i][k];
        }
        for (const auto& v : w)
            if (v != 0) throw UsageError("weight not in the character lattice");
        return x;
    }
    bool contains(const std::vector<bigint>& weight) const {
        try {
            coords_of(weight);
            return true;
        } catch (const UsageError&) {
            return false;
        }
    }

    // Rows of a root subset in X-coordinates.
    Mat roots_in_x(const RootSystem& rs, const std::vector<int>& roots) const {
        Mat m;
        for (int r : roots) {
            auto w = rs.weight_coords(r);
            m.push_back(coords_of(std::vector<bigint>(w.begin(), w.end())));
        }
        return m;
    }

    // Matrix of a Weyl word on X-coordinates (row convention), given the
    // weight-basis matrices of the generators applied left to right.
    Mat word_matrix_x(const RootSystem& rs, const std::vector<int>& word,
                      const std::vector<int>& gen_roots) const {
        Mat m = identity_mat(n_);
        // act on basis rows through weight space, then re-express in X
        Mat cur = basis_;
        for (int g : word) {
            auto wm = rs.reflection_weight_matrix(gen_roots[g]);
            Mat wmat(n_, std::vector<bigint>(n_));
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j) wmat[i][j] = wm[i][j];
            cur = mat_mul(cur, wmat);
        }
        for (int i = 0; i < n_; ++i) m[i] = coords_of(cur[i]);
        return m;
    }

  private:
    int pivot_col(int row) const {
        for (int c = 0; c < n_; ++c)
            if (basis_[row][c] != 0) return c;
        throw std::logic_error("zero row in lattice basis");
    }
    static Mat root_lattice_rows(const RootSystem& rs) {
        Mat q;
        for (int g = 0; g < rs.num_simples(); ++g) {
            auto [c, i] = rs.global_to_component(g);
            auto w = rs.weight_coords(rs.simple_root_index(c, i));
            q.emplace_back(w.begin(), w.end());
        }
        return q;
    }
    void validate_weyl_stable(const RootSystem& rs) const {
        for (int g = 0; g < rs.num_simples(); ++g) {
            auto [c, i] = rs.global_to_component(g);
            auto wm = rs.reflection_weight_matrix(rs.simple_root_index(c, i));
            for (const auto& row : basis_) {
                std::vector<bigint> im(n_, 0);
                for (int a = 0; a < n_; ++a)
                    for (int b = 0; b < n_; ++b) im[b] += row[a] * wm[a][b];
                if (!contains(im))
                    throw UsageError("intermediate lattice is not Weyl-stable");
            }
        }
    }

    int n_;
    Mat basis_;
};

} // namespace lie
