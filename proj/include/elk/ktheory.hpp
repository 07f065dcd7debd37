#pragma once
#ifndef ELK_KTHEORY_HPP
#define ELK_KTHEORY_HPP

// Topological K-theory of the underlying spaces and the maps induced by the
// transformations acting on them.
//
// For the n-torus, K^0 and K^1 are exterior powers of H^1 = Z^n: the basis of
// K^0 is the even-size subsets of {1..n}, the basis of K^1 the odd-size
// subsets, both ordered by (size, lex) with the empty set (the class of the
// trivial bundle) first.  A transformation acting on H^1 by an integer matrix
// A acts on a subset basis element S by sum over T of det A[T, S].
//
// Product-of-a-sphere-and-a-circle spaces carry rank-2 K^0 and K^1 with the
// induced map equal to the identity for the rotation-like transformations
// supported here.

#include <elk/rational.hpp>
#include <elk/zlinalg.hpp>

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace elk {

/// Structurally supported input whose parameters nevertheless fall outside
/// the catalog this calculator can answer for (distinct from malformed
/// input, which throws std::invalid_argument).
struct unsupported_space : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --------------------------------------------------------------------------
// Theta symbols

/// A symbolic irrational in (0,1) known only through a rational enclosure.
/// Two symbols interoperate only when their labels agree.
struct ThetaSymbol {
    std::string label;
    Rat lo, hi;

    void validate() const {
        require(!label.empty(), "theta: label must be nonempty");
        if (!(lo > 0))
            throw std::invalid_argument("theta interval: lower bound must be > 0 (got " +
                                        rat_to_string(lo) + ")");
        if (!(hi < 1))
            throw std::invalid_argument("theta interval: upper bound must be < 1 (got " +
                                        rat_to_string(hi) + ")");
        if (!(lo < hi))
            throw std::invalid_argument("theta interval: lo < hi violated (got lo=" +
                                        rat_to_string(lo) + ", hi=" + rat_to_string(hi) + ")");
    }

    bool operator==(const ThetaSymbol& o) const {
        return label == o.label && lo == o.lo && hi == o.hi;
    }
    bool operator!=(const ThetaSymbol& o) const { return !(*this == o); }
};

// --------------------------------------------------------------------------
// Transformation specifications

/// Affine skew-product transformation of the n-torus: the first coordinate
/// rotates by theta, coordinate j+1 is twisted by coordinate j raised to the
/// exponent m_j.  The induced degree-1 matrix is unit upper-triangular with
/// superdiagonal (m_1, ..., m_{n-1}).
struct AffineFurstenbergTorus {
    int dim = 0;                  // n >= 2
    std::vector<Int> exponents;   // length n-1
    ThetaSymbol theta;
    bool cocycle_perturbed = false;  // smooth-cocycle retwist; metadata only

    void validate() const {
        require(dim >= 1, "torus: dimension must be >= 1");
        if (dim < 2) throw unsupported_space("torus: dimension must be >= 2");
        require(static_cast<int>(exponents.size()) == dim - 1,
                "torus: exponent list length must be dim - 1");
        theta.validate();
    }
};

/// Rotation-like transformation of S^d x S^1; supported for d = 2 and odd d.
struct SphereTimesCircle {
    int sphere_dim = 0;
    ThetaSymbol theta;

    void validate() const {
        require(sphere_dim >= 1, "sphere_circle: sphere dimension must be >= 1");
        if (sphere_dim != 2 && sphere_dim % 2 == 0)
            throw unsupported_space(
                "sphere_circle: even sphere dimension != 2 is not supported");
        if (sphere_dim == 1)
            throw unsupported_space("sphere_circle: sphere dimension 1 is not supported");
        theta.validate();
    }
};

using TransformationSpec = std::variant<AffineFurstenbergTorus, SphereTimesCircle>;

inline const ThetaSymbol& theta_of(const TransformationSpec& spec) {
    return std::visit([](const auto& s) -> const ThetaSymbol& { return s.theta; }, spec);
}

inline void validate_spec(const TransformationSpec& spec) {
    std::visit([](const auto& s) { s.validate(); }, spec);
}

// --------------------------------------------------------------------------
// Space K-theory

using Subset = std::vector<int>;  // ascending, 1-based

inline std::string subset_label(const Subset& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

enum class SpaceKind { Torus, SphereCircle };

struct SpaceKTheory {
    SpaceKind kind = SpaceKind::Torus;
    int dim = 0;  // torus dimension n, or sphere dimension d
    // Subset bases are only populated for tori; labels always are.
    std::vector<Subset> k0_subsets, k1_subsets;
    std::vector<std::string> k0_labels, k1_labels;

    std::size_t k0_rank() const { return k0_labels.size(); }
    std::size_t k1_rank() const { return k1_labels.size(); }

    bool operator==(const SpaceKTheory& o) const {
        return kind == o.kind && dim == o.dim && k0_subsets == o.k0_subsets &&
               k1_subsets == o.k1_subsets && k0_labels == o.k0_labels &&
               k1_labels == o.k1_labels;
    }
};

/// Action on K-theory: square matrices in the bases above (columns are images
/// of basis elements).  degree1 carries the H^1 action when one exists.
struct InducedMap {
    IntMatrix on_k0, on_k1;
    std::optional<IntMatrix> degree1;
};

namespace detail {

inline void enumerate_subsets(int n, std::vector<Subset>& even, std::vector<Subset>& odd) {
    for (int k = 0; k <= n; ++k) {
        // k-subsets of {1..n} in lexicographic order.
        Subset cur(k);
        std::function<void(int, int)> rec = [&](int start, int depth) {
            if (depth == k) {
                (k % 2 == 0 ? even : odd).push_back(cur);
                return;
            }
            for (int v = start; v <= n - (k - depth) + 1; ++v) {
                cur[depth] = v;
                rec(v + 1, depth + 1);
            }
        };
        rec(1, 0);
    }
}

}  // namespace detail

/// K-theory of the n-torus in the subset basis (empty set first).
inline SpaceKTheory torus_ktheory(int n) {
    require(n >= 1, "torus_ktheory: n must be >= 1");
    SpaceKTheory kt;
    kt.kind = SpaceKind::Torus;
    kt.dim = n;
    detail::enumerate_subsets(n, kt.k0_subsets, kt.k1_subsets);
    for (const Subset& s : kt.k0_subsets) kt.k0_labels.push_back(subset_label(s));
    for (const Subset& s : kt.k1_subsets) kt.k1_labels.push_back(subset_label(s));
    return kt;
}

/// Extend a degree-1 action to a subset basis: entry (T, S) = det A[T, S].
inline IntMatrix exterior_extension(const IntMatrix& a, const std::vector<Subset>& basis) {
    require(a.rows() == a.cols(), "exterior_extension: matrix not square");
    IntMatrix out(basis.size(), basis.size());
    for (std::size_t s = 0; s < basis.size(); ++s) {
        for (std::size_t t = 0; t < basis.size(); ++t) {
            const Subset& src = basis[s];
            const Subset& dst = basis[t];
            if (src.size() != dst.size()) continue;  // graded by subset size
            const std::size_t k = src.size();
            IntMatrix minor(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    minor(i, j) = a(dst[i] - 1, src[j] - 1);
            out(t, s) = det(minor);
        }
    }
    return out;
}

/// Unit upper-triangular degree-1 matrix of an affine skew product.
inline IntMatrix furstenberg_degree1(const AffineFurstenbergTorus& spec) {
    const int n = spec.dim;
    IntMatrix a = IntMatrix::identity(n);
    for (int j = 0; j + 1 < n; ++j) a(j, j + 1) = spec.exponents[j];
    return a;
}

/// Induced action on torus K-theory.
inline InducedMap furstenberg_induced_map(const AffineFurstenbergTorus& spec) {
    spec.validate();
    SpaceKTheory kt = torus_ktheory(spec.dim);
    IntMatrix a = furstenberg_degree1(spec);
    InducedMap m;
    m.on_k0 = exterior_extension(a, kt.k0_subsets);
    m.on_k1 = exterior_extension(a, kt.k1_subsets);
    m.degree1 = a;
    check_internal(boost::multiprecision::abs(det(m.on_k0)) == 1 &&
                       boost::multiprecision::abs(det(m.on_k1)) == 1,
                   "furstenberg_induced_map: extension lost unimodularity");
    return m;
}

/// K-theory of S^d x S^1 together with the (identity) induced map.
/// Basis positions: index 0 of K^0 is the class of the trivial bundle, index
/// 0 of K^1 is the circle-coordinate class [z] - both conventions shared with
/// the torus basis so downstream code treats all spaces uniformly.
inline std::pair<SpaceKTheory, InducedMap> sphere_circle_ktheory(const SphereTimesCircle& spec) {
    spec.validate();
    SpaceKTheory kt;
    kt.kind = SpaceKind::SphereCircle;
    kt.dim = spec.sphere_dim;
    if (spec.sphere_dim == 2) {
        kt.k0_labels = {"[1]x[1]", "[beta]x[1]"};
        kt.k1_labels = {"[1]x[z]", "[beta]x[z]"};
    } else {
        kt.k0_labels = {"[1]x[1]", "[gamma]x[z]"};
        kt.k1_labels = {"[1]x[z]", "[gamma]x[1]"};
    }
    InducedMap m;
    m.on_k0 = IntMatrix::identity(2);
    m.on_k1 = IntMatrix::identity(2);
    return {kt, m};
}

/// Dispatcher: space K-theory plus induced map for any supported spec.
inline std::pair<SpaceKTheory, InducedMap> space_and_map(const TransformationSpec& spec) {
    if (const auto* t = std::get_if<AffineFurstenbergTorus>(&spec)) {
        t->validate();
        return {torus_ktheory(t->dim), furstenberg_induced_map(*t)};
    }
    const auto& s = std::get<SphereTimesCircle>(spec);
    return sphere_circle_ktheory(s);
}

}  // namespace elk

#endif  // ELK_KTHEORY_HPP
