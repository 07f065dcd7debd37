#pragma once
#ifndef ELK_ZLINALG_HPP
#define ELK_ZLINALG_HPP

// Exact integer linear algebra over Z: dense matrices on arbitrary-precision
// integers, Smith normal form with transform tracking, kernel/cokernel of
// integer maps, Hermite canonicalization, and finitely generated abelian
// groups in canonical form.  Everything is deterministic and allocation-tame;
// matrix sizes in this project stay small (<= a few dozen rows).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace elk {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Internal invariant violations (never caused by user input) carry their own
/// type so callers can map them to a distinct failure class.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}

inline void check_internal(bool cond, const char* what) {
    if (!cond) throw internal_error(what);
}

// --------------------------------------------------------------------------
// IntMatrix

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix zero(std::size_t rows, std::size_t cols) {
        return IntMatrix(rows, cols);
    }

    /// Row-major literal, for tests and small fixtures.
    static IntMatrix from(std::initializer_list<std::initializer_list<long long>> rows) {
        std::size_t r = rows.size();
        std::size_t c = r == 0 ? 0 : rows.begin()->size();
        IntMatrix m(r, c);
        std::size_t i = 0;
        for (const auto& row : rows) {
            require(row.size() == c, "IntMatrix::from: ragged rows");
            std::size_t j = 0;
            for (long long v : row) m(i, j++) = v;
            ++i;
        }
        return m;
    }

    static IntMatrix column(const std::vector<Int>& entries) {
        IntMatrix m(entries.size(), 1);
        for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) {
        return e_[i * cols_ + j];
    }
    const Int& operator()(std::size_t i, std::size_t j) const {
        return e_[i * cols_ + j];
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const Int& x : e_)
            if (x != 0) return false;
        return true;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    IntMatrix operator+(const IntMatrix& o) const {
        require(rows_ == o.rows_ && cols_ == o.cols_, "matrix +: shape mismatch");
        IntMatrix r(rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
        return r;
    }

    IntMatrix operator-(const IntMatrix& o) const {
        require(rows_ == o.rows_ && cols_ == o.cols_, "matrix -: shape mismatch");
        IntMatrix r(rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
        return r;
    }

    IntMatrix operator-() const {
        IntMatrix r(rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
        return r;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        require(cols_ == o.rows_, "matrix *: shape mismatch");
        IntMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const Int& b = o(k, j);
                    if (b != 0) r(i, j) += a * b;
                }
            }
        return r;
    }

    IntMatrix operator*(const Int& s) const {
        IntMatrix r(rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * s;
        return r;
    }

    IntMatrix col(std::size_t j) const {
        IntMatrix c(rows_, 1);
        for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
        return c;
    }

    /// Horizontal concatenation.
    IntMatrix hcat(const IntMatrix& o) const {
        if (cols_ == 0 && rows_ == 0) return o;
        require(rows_ == o.rows_, "hcat: row mismatch");
        IntMatrix r(rows_, cols_ + o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
        }
        return r;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i ? "; " : "");
            os << "[";
            for (std::size_t j = 0; j < cols_; ++j)
                os << (j ? ", " : "") << (*this)(i, j);
            os << "]";
        }
        os << "]";
        return os.str();
    }

private:
    std::size_t rows_, cols_;
    std::vector<Int> e_;
};

inline IntMatrix operator*(const Int& s, const IntMatrix& m) { return m * s; }

/// Signed determinant via fraction-free (Bareiss) elimination.
inline Int det(const IntMatrix& m) {
    require(m.rows() == m.cols(), "det: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = num / prev;  // divides exactly (Bareiss identity)
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

// --------------------------------------------------------------------------
// Smith normal form

/// M = U * D * V with U, V unimodular and D diagonal, d_i >= 0,
/// d_1 | d_2 | ... ; u_inv and v_inv are tracked alongside so callers never
/// need a separate matrix inversion.
struct SmithDecomposition {
    IntMatrix u, d, v;
    IntMatrix u_inv, v_inv;

    std::vector<Int> diagonal() const {
        std::vector<Int> out;
        std::size_t n = std::min(d.rows(), d.cols());
        for (std::size_t i = 0; i < n; ++i) out.push_back(d(i, i));
        return out;
    }

    std::size_t rank() const {
        std::size_t r = 0;
        for (const Int& x : diagonal())
            if (x != 0) ++r;
        return r;
    }
};

namespace detail {

/// Quotient rounded to nearest (ties toward zero); shrinks remainders fastest
/// during the pivoting sweeps.
inline Int nearest_quotient(const Int& a, const Int& b) {
    Int q = a / b;  // truncated
    Int r = a - q * b;
    if (r != 0) {
        Int twice = 2 * boost::multiprecision::abs(r);
        if (twice > boost::multiprecision::abs(b)) q += (r < 0) == (b < 0) ? 1 : -1;
    }
    return q;
}

struct SnfWorker {
    IntMatrix a, u, u_inv, v, v_inv;

    explicit SnfWorker(const IntMatrix& m)
        : a(m),
          u(IntMatrix::identity(m.rows())),
          u_inv(IntMatrix::identity(m.rows())),
          v(IntMatrix::identity(m.cols())),
          v_inv(IntMatrix::identity(m.cols())) {}

    // Row ops act as a <- E a; invariant M = u a v is preserved via
    // u <- u E^{-1}, u_inv <- E u_inv.
    void row_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
        for (std::size_t c = 0; c < u_inv.cols(); ++c) std::swap(u_inv(i, c), u_inv(j, c));
        for (std::size_t r = 0; r < u.rows(); ++r) std::swap(u(r, i), u(r, j));
    }

    void row_negate(std::size_t i) {
        for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
        for (std::size_t c = 0; c < u_inv.cols(); ++c) u_inv(i, c) = -u_inv(i, c);
        for (std::size_t r = 0; r < u.rows(); ++r) u(r, i) = -u(r, i);
    }

    /// row_i += q * row_j
    void row_add(std::size_t i, std::size_t j, const Int& q) {
        if (q == 0) return;
        for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) += q * a(j, c);
        for (std::size_t c = 0; c < u_inv.cols(); ++c) u_inv(i, c) += q * u_inv(j, c);
        for (std::size_t r = 0; r < u.rows(); ++r) u(r, j) -= q * u(r, i);
    }

    void col_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
        for (std::size_t r = 0; r < v_inv.rows(); ++r) std::swap(v_inv(r, i), v_inv(r, j));
        for (std::size_t c = 0; c < v.cols(); ++c) std::swap(v(i, c), v(j, c));
    }

    void col_negate(std::size_t j) {
        for (std::size_t r = 0; r < a.rows(); ++r) a(r, j) = -a(r, j);
        for (std::size_t r = 0; r < v_inv.rows(); ++r) v_inv(r, j) = -v_inv(r, j);
        for (std::size_t c = 0; c < v.cols(); ++c) v(j, c) = -v(j, c);
    }

    /// col_i += q * col_j
    void col_add(std::size_t i, std::size_t j, const Int& q) {
        if (q == 0) return;
        for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) += q * a(r, j);
        for (std::size_t r = 0; r < v_inv.rows(); ++r) v_inv(r, i) += q * v_inv(r, j);
        for (std::size_t c = 0; c < v.cols(); ++c) v(j, c) -= q * v(i, c);
    }

    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        Int best = 0;
        for (std::size_t i = t; i < a.rows(); ++i)
            for (std::size_t j = t; j < a.cols(); ++j) {
                if (a(i, j) == 0) continue;
                Int mag = boost::multiprecision::abs(a(i, j));
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    void run() {
        const std::size_t steps = std::min(a.rows(), a.cols());
        for (std::size_t t = 0; t < steps; ++t) {
            std::size_t pi = t, pj = t;
            if (!find_pivot(t, pi, pj)) break;
            row_swap(t, pi);
            col_swap(t, pj);
            for (;;) {
                if (a(t, t) < 0) row_negate(t);
                // Clear column t below the pivot.
                bool dirty = false;
                for (std::size_t i = t + 1; i < a.rows(); ++i) {
                    if (a(i, t) == 0) continue;
                    Int q = nearest_quotient(a(i, t), a(t, t));
                    row_add(i, t, -q);
                    if (a(i, t) != 0) dirty = true;
                }
                // Clear row t right of the pivot.
                for (std::size_t j = t + 1; j < a.cols(); ++j) {
                    if (a(t, j) == 0) continue;
                    Int q = nearest_quotient(a(t, j), a(t, t));
                    col_add(j, t, -q);
                    if (a(t, j) != 0) dirty = true;
                }
                if (dirty) {
                    // A nonzero remainder is strictly smaller than the pivot;
                    // re-select and sweep again.
                    std::size_t qi = t, qj = t;
                    find_pivot(t, qi, qj);
                    row_swap(t, qi);
                    col_swap(t, qj);
                    continue;
                }
                // Pivot must divide the remaining block for the divisibility
                // chain; fold a violating row in and repeat.
                bool divides_all = true;
                for (std::size_t i = t + 1; i < a.rows() && divides_all; ++i)
                    for (std::size_t j = t + 1; j < a.cols(); ++j)
                        if (a(i, j) % a(t, t) != 0) {
                            row_add(t, i, 1);
                            divides_all = false;
                            break;
                        }
                if (divides_all) break;
            }
        }
    }
};

}  // namespace detail

inline SmithDecomposition snf(const IntMatrix& m) {
    detail::SnfWorker w(m);
    w.run();
    return SmithDecomposition{std::move(w.u), std::move(w.a), std::move(w.v),
                              std::move(w.u_inv), std::move(w.v_inv)};
}

/// Square with |det| = 1, decided via invariant factors.
inline bool is_unimodular(const IntMatrix& m) {
    require(m.rows() == m.cols(), "is_unimodular: matrix not square");
    if (m.rows() == 0) return true;
    SmithDecomposition s = snf(m);
    for (const Int& d : s.diagonal())
        if (d != 1) return false;
    return true;
}

/// Exact inverse of a unimodular matrix.
inline IntMatrix unimodular_inverse(const IntMatrix& m) {
    require(m.rows() == m.cols(), "unimodular_inverse: matrix not square");
    SmithDecomposition s = snf(m);
    for (const Int& d : s.diagonal())
        require(d == 1, "unimodular_inverse: matrix not unimodular");
    return s.v_inv * s.u_inv;
}

// --------------------------------------------------------------------------
// Hermite canonical form (row style) and lattice utilities

/// Unique row Hermite normal form of the lattice spanned by the rows of m:
/// row-echelon, positive pivots, entries above each pivot reduced into
/// [0, pivot).  Zero rows are dropped, pivots move strictly right.
inline IntMatrix hnf_rows(const IntMatrix& m) {
    IntMatrix a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;  // next pivot row
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Gather the column below r to a single nonzero via gcd steps.
        for (;;) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i) {
                if (a(i, c) == 0) continue;
                if (best == rows ||
                    boost::multiprecision::abs(a(i, c)) < boost::multiprecision::abs(a(best, c)))
                    best = i;
            }
            if (best == rows) break;  // column empty below r
            if (best != r)
                for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(best, j));
            bool cleared = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (a(i, c) == 0) continue;
                Int q = detail::nearest_quotient(a(i, c), a(r, c));
                for (std::size_t j = 0; j < cols; ++j) a(i, j) -= q * a(r, j);
                if (a(i, c) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (a(r, c) == 0) continue;
        if (a(r, c) < 0)
            for (std::size_t j = 0; j < cols; ++j) a(r, j) = -a(r, j);
        // Reduce entries above the pivot into [0, pivot).
        for (std::size_t i = 0; i < r; ++i) {
            Int q = a(i, c) / a(r, c);
            if (a(i, c) - q * a(r, c) < 0) q -= 1;  // floor
            if (q != 0)
                for (std::size_t j = 0; j < cols; ++j) a(i, j) -= q * a(r, j);
        }
        ++r;
    }
    IntMatrix out(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = a(i, j);
    return out;
}

/// Canonical basis (as columns) of the lattice spanned by the columns of g.
inline IntMatrix hnf_columns(const IntMatrix& g) {
    return hnf_rows(g.transpose()).transpose();
}

/// Canonical basis of ker(m) acting Z^cols -> Z^rows, as matrix columns.
/// The basis is saturated: every invariant factor of the result is 1.
inline IntMatrix kernel_basis(const IntMatrix& m) {
    SmithDecomposition s = snf(m);
    const std::size_t n = m.cols();
    const std::size_t lim = std::min(m.rows(), m.cols());
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < n; ++j)
        if (j >= lim || s.d(j, j) == 0) free_cols.push_back(j);
    IntMatrix raw(n, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k)
        for (std::size_t i = 0; i < n; ++i) raw(i, k) = s.v_inv(i, free_cols[k]);
    return hnf_columns(raw);
}

/// Solve A X = B exactly over Z; std::nullopt when no integral solution.
/// When ker A != 0 the returned solution is the one with zero coordinates on
/// the kernel directions of the Smith basis (deterministic).
inline std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b) {
    require(a.rows() == b.rows(), "solve_integer: shape mismatch");
    SmithDecomposition s = snf(a);
    IntMatrix c = s.u_inv * b;
    IntMatrix y(a.cols(), b.cols());
    const std::size_t lim = std::min(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Int di = i < lim ? s.d(i, i) : Int(0);
            if (di == 0) {
                if (c(i, j) != 0) return std::nullopt;
            } else {
                if (c(i, j) % di != 0) return std::nullopt;
                y(i, j) = c(i, j) / di;
            }
        }
    }
    return s.v_inv * y;
}

/// Index [L : L'] of the sublattice spanned by the columns of `sub` inside
/// the lattice spanned by the columns of `basis` (full column rank).
/// std::nullopt when the index is infinite or `sub` is not contained.
inline std::optional<Int> lattice_index(const IntMatrix& basis, const IntMatrix& sub) {
    auto x = solve_integer(basis, sub);
    if (!x) return std::nullopt;
    SmithDecomposition s = snf(*x);
    if (s.rank() != basis.cols()) return std::nullopt;
    Int idx = 1;
    for (const Int& d : s.diagonal())
        if (d != 0) idx *= d;
    return idx;
}

// --------------------------------------------------------------------------
// Finitely generated abelian groups

/// Canonical form: free rank plus invariant factors d_1 | d_2 | ..., each
/// >= 2.  Equality of canonical forms is isomorphism.
struct FgAbGroup {
    std::size_t rank = 0;
    std::vector<Int> factors;

    FgAbGroup() = default;
    FgAbGroup(std::size_t r, std::vector<Int> f) : rank(r), factors(std::move(f)) {
        for (std::size_t i = 0; i < factors.size(); ++i) {
            require(factors[i] >= 2, "FgAbGroup: factors must be >= 2");
            if (i) require(factors[i] % factors[i - 1] == 0, "FgAbGroup: divisibility chain");
        }
    }

    /// Normalize an arbitrary list of cyclic-summand moduli (0 = Z) into
    /// canonical form via pairwise gcd/lcm exchanges.
    static FgAbGroup from_moduli(std::vector<Int> mods) {
        std::size_t rank = 0;
        std::vector<Int> fs;
        for (Int& m : mods) {
            if (m < 0) m = -m;
            if (m == 0)
                ++rank;
            else if (m > 1)
                fs.push_back(m);
        }
        // Z/a + Z/b = Z/gcd + Z/lcm; bubble until the divisibility chain holds.
        bool changed = true;
        while (changed) {
            changed = false;
            std::sort(fs.begin(), fs.end());
            for (std::size_t i = 0; i + 1 < fs.size(); ++i)
                if (fs[i + 1] % fs[i] != 0) {
                    Int g = boost::multiprecision::gcd(fs[i], fs[i + 1]);
                    Int l = fs[i] / g * fs[i + 1];
                    fs[i] = g;
                    fs[i + 1] = l;
                    changed = true;
                }
            fs.erase(std::remove(fs.begin(), fs.end(), Int(1)), fs.end());
        }
        return FgAbGroup(rank, std::move(fs));
    }

    bool operator==(const FgAbGroup& o) const {
        return rank == o.rank && factors == o.factors;
    }
    bool operator!=(const FgAbGroup& o) const { return !(*this == o); }

    bool is_trivial() const { return rank == 0 && factors.empty(); }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        if (rank == 1) {
            os << "Z";
            first = false;
        } else if (rank > 1) {
            os << "Z^" << rank;
            first = false;
        }
        for (const Int& f : factors) {
            os << (first ? "" : " + ") << "Z/" << f;
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }
};

// --------------------------------------------------------------------------
// Cokernel

/// coker(M) = Z^rows / im(M) in canonical coordinates.  `transform` is the
/// unimodular change of basis: the class of x in Z^rows has coordinate vector
/// transform * x, where row i is taken mod moduli[i] (moduli 1 = trivial row,
/// 0 = free row).  `generators` columns are lifts of the coordinate
/// generators (generators = transform^{-1}).
struct Cokernel {
    FgAbGroup group;
    IntMatrix transform;
    IntMatrix generators;
    std::vector<Int> moduli;
    std::vector<std::size_t> free_rows;     // moduli == 0, in row order
    std::vector<std::size_t> torsion_rows;  // moduli >= 2, in row order

    /// Reduced coordinates of the class of x: free entries verbatim, torsion
    /// entries as residues in [0, d), trivial rows dropped.
    struct Coords {
        std::vector<Int> free_part;
        std::vector<Int> torsion_part;
        bool operator==(const Coords& o) const {
            return free_part == o.free_part && torsion_part == o.torsion_part;
        }
    };

    Coords coords(const IntMatrix& x) const {
        require(x.rows() == transform.cols() && x.cols() == 1, "Cokernel::coords: bad vector");
        IntMatrix y = transform * x;
        Coords c;
        for (std::size_t i : free_rows) c.free_part.push_back(y(i, 0));
        for (std::size_t i : torsion_rows) {
            Int d = moduli[i];
            Int r = y(i, 0) % d;
            if (r < 0) r += d;
            c.torsion_part.push_back(r);
        }
        return c;
    }

    bool is_zero_class(const IntMatrix& x) const {
        Coords c = coords(x);
        for (const Int& v : c.free_part)
            if (v != 0) return false;
        for (const Int& v : c.torsion_part)
            if (v != 0) return false;
        return true;
    }
};

inline Cokernel cokernel(const IntMatrix& m) {
    SmithDecomposition s = snf(m);
    Cokernel ck;
    ck.transform = std::move(s.u_inv);
    ck.generators = std::move(s.u);
    const std::size_t lim = std::min(m.rows(), m.cols());
    ck.moduli.resize(m.rows());
    std::vector<Int> torsion;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ck.moduli[i] = i < lim ? s.d(i, i) : Int(0);
        if (ck.moduli[i] == 0)
            ck.free_rows.push_back(i);
        else if (ck.moduli[i] >= 2) {
            ck.torsion_rows.push_back(i);
            torsion.push_back(ck.moduli[i]);
        }
    }
    ck.group = FgAbGroup(ck.free_rows.size(), std::move(torsion));
    return ck;
}

}  // namespace elk

#endif  // ELK_ZLINALG_HPP
