#pragma once

// Comparison layer: GL(n,Z)-similarity invariants of unipotent matrices,
// flip-aware conjugacy verdicts, and isomorphism of computed invariants.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <elk/crossed.hpp>

namespace elk {

// --------------------------------------------------------------------------
// Similarity invariants of a = 1 + c with c nilpotent

/// Invariants of the GL(n,Z)-similarity class of a square unimodular matrix
/// `a`, computed from c = a - 1.  Two matrices conjugate over GL(n,Z) have
/// equal invariants; the converse can fail, so these only certify
/// *non*-similarity.
struct SimilarityInvariants {
    /// Invariant factors (full Smith diagonal, zeros included) of c^k for
    /// k = 1..n.
    std::vector<std::vector<Int>> power_factors;
    /// Index of the sublattice c(ker c^2) inside ker c, when finite.  This
    /// sees the off-diagonal scale that the Smith chains of the powers miss.
    std::optional<Int> ladder_index;
    /// Largest k >= 1 with c^k != 0; 0 when a = 1; absent when c^n != 0
    /// (a is not unipotent).
    std::optional<int> nilpotency_degree;

    bool operator==(const SimilarityInvariants& o) const {
        return power_factors == o.power_factors && ladder_index == o.ladder_index &&
               nilpotency_degree == o.nilpotency_degree;
    }
    bool operator!=(const SimilarityInvariants& o) const { return !(*this == o); }
};

namespace detail {

inline std::string factor_list(const std::vector<Int>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ")";
    return os.str();
}

inline std::string opt_index(const std::optional<Int>& x) {
    return x ? x->str() : std::string("infinite");
}

inline std::string opt_degree(const std::optional<int>& x) {
    return x ? std::to_string(*x) : std::string("none");
}

}  // namespace detail

/// Human sentence naming the first invariant that separates x from y; empty
/// string when all invariants agree.
inline std::string describe_difference(const SimilarityInvariants& x,
                                       const SimilarityInvariants& y) {
    if (x.power_factors.size() != y.power_factors.size())
        return "matrix dimensions differ: " + std::to_string(x.power_factors.size()) + " vs " +
               std::to_string(y.power_factors.size());
    for (std::size_t k = 0; k < x.power_factors.size(); ++k)
        if (x.power_factors[k] != y.power_factors[k])
            return "invariant factors of (a - 1)^" + std::to_string(k + 1) +
                   " differ: " + detail::factor_list(x.power_factors[k]) + " vs " +
                   detail::factor_list(y.power_factors[k]);
    if (x.ladder_index != y.ladder_index)
        return "kernel ladder index [ker c : c ker c^2] differs: " +
               detail::opt_index(x.ladder_index) + " vs " + detail::opt_index(y.ladder_index);
    if (x.nilpotency_degree != y.nilpotency_degree)
        return "nilpotency degree differs: " + detail::opt_degree(x.nilpotency_degree) + " vs " +
               detail::opt_degree(y.nilpotency_degree);
    return "";
}

/// Compute the similarity invariants of a unimodular matrix.
inline SimilarityInvariants unipotent_invariants(const IntMatrix& a) {
    require(a.rows() == a.cols(), "unipotent_invariants: matrix not square");
    require(a.rows() >= 1, "unipotent_invariants: empty matrix");
    require(is_unimodular(a), "unipotent_invariants: matrix not unimodular");
    const std::size_t n = a.rows();
    const IntMatrix c = a - IntMatrix::identity(n);

    SimilarityInvariants inv;
    IntMatrix power = c;
    int last_nonzero = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        inv.power_factors.push_back(snf(power).diagonal());
        if (!power.is_zero()) last_nonzero = static_cast<int>(k);
        if (k < n) power = power * c;
    }
    // A nilpotent n x n matrix has c^n = 0, so c^n != 0 means not unipotent.
    if (c.is_zero())
        inv.nilpotency_degree = 0;
    else if (last_nonzero < static_cast<int>(n))
        inv.nilpotency_degree = last_nonzero;

    // c maps ker c^2 into ker c; the index of the image refines the Smith
    // data.  kernel_basis results are saturated, so integral solves below
    // cannot fail.
    IntMatrix k1 = kernel_basis(c);
    IntMatrix k2 = kernel_basis(c * c);
    IntMatrix image = c * k2;
    if (k1.cols() == 0) {
        check_internal(image.is_zero(), "unipotent_invariants: c(ker c^2) escapes ker c");
        inv.ladder_index = 1;
    } else {
        inv.ladder_index = lattice_index(k1, image);
    }
    return inv;
}

// --------------------------------------------------------------------------
// Flip-aware conjugacy verdicts

/// Outcome of comparing two induced matrices up to GL(n,Z)-similarity with
/// the flip (matrix inverse) allowed.
struct ConjugacyVerdict {
    enum class Kind {
        Distinct,            ///< invariants separate a1 from both a2 and a2^{-1}
        PossiblyConjugate,   ///< an explicit unimodular intertwiner was found
        Unknown              ///< invariants agree but no witness found in bound
    };
    Kind kind = Kind::Unknown;
    std::string detail;
    std::optional<IntMatrix> witness;  ///< P with P a1 P^{-1} = target
    bool witness_flips = false;        ///< target was a2^{-1} rather than a2
};

inline std::string to_string(ConjugacyVerdict::Kind k) {
    switch (k) {
        case ConjugacyVerdict::Kind::Distinct: return "distinct";
        case ConjugacyVerdict::Kind::PossiblyConjugate: return "possibly conjugate";
        case ConjugacyVerdict::Kind::Unknown: return "unknown";
    }
    return "unknown";
}

namespace detail {

struct IntertwinerSearch {
    std::optional<IntMatrix> witness;
    bool truncated = false;
};

/// Bounded search for unimodular P with P a = b P.  The solution lattice of
/// the linear constraint is computed exactly; integer combinations of its
/// basis with coefficients in [-bound, bound] are then scanned for |det| = 1.
inline IntertwinerSearch find_intertwiner(const IntMatrix& a, const IntMatrix& b, long bound,
                                          long long budget = 2000000) {
    const std::size_t n = a.rows();
    require(bound >= 1, "find_intertwiner: bound must be >= 1");
    IntertwinerSearch out;
    if (a == b) {
        out.witness = IntMatrix::identity(n);
        return out;
    }
    // Row-major vectorization: entry (i,j) of the equation P a - b P = 0 is a
    // linear form in P(k,l) with coefficient [k=i] a(l,j) - [l=j] b(i,k).
    IntMatrix sylvester(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Int coeff = 0;
                    if (k == i) coeff += a(l, j);
                    if (l == j) coeff -= b(i, k);
                    sylvester(i * n + j, k * n + l) = coeff;
                }
    IntMatrix basis = kernel_basis(sylvester);
    const std::size_t r = basis.cols();
    if (r == 0) return out;

    // Coefficient values in the order 0, 1, -1, 2, -2, ... so small witnesses
    // are found first; sign symmetry halved by forcing the first nonzero
    // coefficient positive.
    std::vector<long> values{0};
    for (long v = 1; v <= bound; ++v) {
        values.push_back(v);
        values.push_back(-v);
    }
    std::vector<std::size_t> idx(r, 0);
    long long tried = 0;
    while (true) {
        bool skip = false;
        for (std::size_t i = 0; i < r; ++i) {
            if (idx[i] == 0) continue;
            if (values[idx[i]] < 0) skip = true;
            break;
        }
        bool all_zero = true;
        for (std::size_t i = 0; i < r; ++i)
            if (idx[i] != 0) all_zero = false;
        if (!skip && !all_zero) {
            if (++tried > budget) {
                out.truncated = true;
                return out;
            }
            IntMatrix p(n, n);
            for (std::size_t i = 0; i < r; ++i) {
                if (idx[i] == 0) continue;
                Int t = values[idx[i]];
                for (std::size_t row = 0; row < n; ++row)
                    for (std::size_t col = 0; col < n; ++col)
                        p(row, col) += t * basis(row * n + col, i);
            }
            Int d = det(p);
            if (d == 1 || d == -1) {
                check_internal(p * a == b * p, "find_intertwiner: candidate fails equation");
                out.witness = p;
                return out;
            }
        }
        // Odometer step.
        std::size_t pos = 0;
        while (pos < r && ++idx[pos] == values.size()) idx[pos++] = 0;
        if (pos == r) break;
    }
    return out;
}

}  // namespace detail

/// Decide whether a1 can be GL(n,Z)-conjugate to a2 or to a2^{-1}.
/// `Distinct` certifies it cannot (so the underlying systems are not flip
/// conjugate); `PossiblyConjugate` exhibits an explicit intertwiner;
/// `Unknown` is an honest failure of both directions within the bound.
inline ConjugacyVerdict flip_conjugacy_verdict(const IntMatrix& a1, const IntMatrix& a2,
                                               long search_bound = 5) {
    require(a1.rows() == a1.cols() && a2.rows() == a2.cols(),
            "flip_conjugacy_verdict: matrices must be square");
    ConjugacyVerdict v;
    if (a1.rows() != a2.rows()) {
        v.kind = ConjugacyVerdict::Kind::Distinct;
        v.detail = "matrix sizes differ: " + std::to_string(a1.rows()) + " vs " +
                   std::to_string(a2.rows());
        return v;
    }
    SimilarityInvariants i1 = unipotent_invariants(a1);
    SimilarityInvariants i2 = unipotent_invariants(a2);
    IntMatrix a2_inv = unimodular_inverse(a2);
    SimilarityInvariants i2f = unipotent_invariants(a2_inv);

    std::string sep_direct = describe_difference(i1, i2);
    std::string sep_flip = describe_difference(i1, i2f);
    if (!sep_direct.empty() && !sep_flip.empty()) {
        v.kind = ConjugacyVerdict::Kind::Distinct;
        v.detail = "vs the map: " + sep_direct + "; vs its inverse: " + sep_flip;
        return v;
    }

    bool truncated = false;
    if (sep_direct.empty()) {
        auto s = detail::find_intertwiner(a1, a2, search_bound);
        truncated = truncated || s.truncated;
        if (s.witness) {
            v.kind = ConjugacyVerdict::Kind::PossiblyConjugate;
            v.witness = s.witness;
            v.witness_flips = false;
            v.detail = "unimodular intertwiner found (P a1 = a2 P)";
            return v;
        }
    }
    if (sep_flip.empty()) {
        auto s = detail::find_intertwiner(a1, a2_inv, search_bound);
        truncated = truncated || s.truncated;
        if (s.witness) {
            v.kind = ConjugacyVerdict::Kind::PossiblyConjugate;
            v.witness = s.witness;
            v.witness_flips = true;
            v.detail = "unimodular intertwiner onto the inverse found (P a1 = a2^{-1} P)";
            return v;
        }
    }
    v.kind = ConjugacyVerdict::Kind::Unknown;
    v.detail = "similarity invariants do not separate";
    if (!sep_direct.empty()) v.detail += " from the inverse";
    if (!sep_flip.empty()) v.detail += " from the map";
    v.detail += "; no unimodular intertwiner with kernel coefficients bounded by " +
                std::to_string(search_bound);
    if (truncated) v.detail += " (search truncated)";
    return v;
}

// --------------------------------------------------------------------------
// Isomorphism of computed invariants

/// Outcome of comparing two computed invariants.  `Isomorphic` carries
/// explicit unit-preserving, trace-compatible coordinate maps on the
/// generator lists; `NotIsomorphic` names the separating datum; `Undecided`
/// is reserved for symbolically incomparable inputs (distinct rotation
/// symbols) and for exotic trace lattices the constructor does not handle.
struct CompareVerdict {
    enum class Kind { Isomorphic, NotIsomorphic, Undecided };
    Kind kind = Kind::Undecided;
    std::string reason;
    std::optional<IntMatrix> k0_map;  ///< on K_0 generator coordinates
    std::optional<IntMatrix> k1_map;  ///< on K_1 generator coordinates
};

inline std::string to_string(CompareVerdict::Kind k) {
    switch (k) {
        case CompareVerdict::Kind::Isomorphic: return "isomorphic";
        case CompareVerdict::Kind::NotIsomorphic: return "not isomorphic";
        case CompareVerdict::Kind::Undecided: return "undecided";
    }
    return "undecided";
}

namespace detail {

/// Extended Euclid: returns g = gcd(a, b) >= 0 with u a + v b = g.
inline Int gcd_ext(const Int& a, const Int& b, Int& u, Int& v) {
    if (b == 0) {
        u = a >= 0 ? 1 : -1;
        v = 0;
        return a >= 0 ? a : Int(-a);
    }
    Int u1, v1;
    Int g = gcd_ext(b, a % b, u1, v1);
    u = v1;
    v = u1 - (a / b) * v1;
    return g;
}

/// Common-denominator integer matrix of trace coefficient columns (a_i, b_i)
/// for the free K_0 generators, scaled by d.
inline IntMatrix trace_columns(const std::vector<TraceValue>& trace, const Int& d) {
    IntMatrix m(2, trace.size());
    for (std::size_t j = 0; j < trace.size(); ++j) {
        Rat a = trace[j].a * d;
        Rat b = trace[j].b * d;
        check_internal(boost::multiprecision::denominator(a) == 1 &&
                           boost::multiprecision::denominator(b) == 1,
                       "trace_columns: denominator not cleared");
        m(0, j) = boost::multiprecision::numerator(a);
        m(1, j) = boost::multiprecision::numerator(b);
    }
    return m;
}

inline std::string trace_lattice_string(const IntMatrix& hnf_cols, const Int& d,
                                        const ThetaSymbol& th) {
    if (hnf_cols.cols() == 0) return "{0}";
    std::string s = "generated by";
    for (std::size_t j = 0; j < hnf_cols.cols(); ++j) {
        TraceValue t{Rat(hnf_cols(0, j), d), Rat(hnf_cols(1, j), d), th};
        s += std::string(j ? "," : "") + " " + t.to_string();
    }
    return s;
}

/// Basis of Z^r adapted to the trace pairing: columns are preimages of the
/// lattice basis `lat` (2 x s) under `phi` (2 x r), followed by a kernel
/// basis of phi.  The first lattice column must be the unit trace and the
/// unit preimage is forced to be e_0.
inline std::optional<IntMatrix> adapted_basis(const IntMatrix& phi, const IntMatrix& lat) {
    const std::size_t r = phi.cols(), s = lat.cols();
    IntMatrix sections(r, s);
    for (std::size_t t = 0; t < s; ++t) {
        std::optional<IntMatrix> c;
        if (t == 0) {
            c = IntMatrix(r, 1);
            (*c)(0, 0) = 1;  // unit generator is coordinate 0
            check_internal(phi * *c == lat.col(0), "adapted_basis: unit trace mismatch");
        } else {
            c = solve_integer(phi, lat.col(t));
            if (!c) return std::nullopt;
        }
        for (std::size_t i = 0; i < r; ++i) sections(i, t) = (*c)(i, 0);
    }
    IntMatrix full = sections.hcat(kernel_basis(phi));
    if (full.rows() != full.cols() || !is_unimodular(full)) return std::nullopt;
    return full;
}

}  // namespace detail

/// Compare two computed invariants.  Groups, rotation symbol, and the trace
/// image are checked first; when they match, an explicit unimodular K_0 map
/// preserving the unit and intertwining the trace functionals is built from
/// bases adapted to the trace pairing.
inline CompareVerdict elliott_compare(const ElliottInvariant& x, const ElliottInvariant& y) {
    CompareVerdict v;
    if (x.theta.label == y.theta.label && (x.theta.lo != y.theta.lo || x.theta.hi != y.theta.hi))
        throw std::invalid_argument(
            "elliott_compare: rotation symbol '" + x.theta.label +
            "' carries different enclosures in the two invariants");
    for (const auto* inv : {&x, &y})
        require(!inv->trace.empty() && inv->trace[0].a == 1 && inv->trace[0].b == 0,
                "elliott_compare: first trace entry must be the unit trace 1");

    if (x.k0 != y.k0) {
        v.kind = CompareVerdict::Kind::NotIsomorphic;
        v.reason = "K_0 groups differ: " + x.k0.to_string() + " vs " + y.k0.to_string();
        return v;
    }
    if (x.k1 != y.k1) {
        v.kind = CompareVerdict::Kind::NotIsomorphic;
        v.reason = "K_1 groups differ: " + x.k1.to_string() + " vs " + y.k1.to_string();
        return v;
    }
    if (x.theta.label != y.theta.label) {
        v.kind = CompareVerdict::Kind::Undecided;
        v.reason = "rotation symbols differ (" + x.theta.label + " vs " + y.theta.label +
                   "); trace data cannot be compared symbolically";
        return v;
    }

    // Trace images as lattices in Z*1 + Z*theta, over a common denominator.
    Int d = 1;
    for (const auto* inv : {&x, &y})
        for (const TraceValue& t : inv->trace) {
            d = boost::multiprecision::lcm(d, boost::multiprecision::denominator(t.a));
            d = boost::multiprecision::lcm(d, boost::multiprecision::denominator(t.b));
        }
    IntMatrix phi_x = detail::trace_columns(x.trace, d);
    IntMatrix phi_y = detail::trace_columns(y.trace, d);
    IntMatrix lat_x = hnf_columns(phi_x);
    IntMatrix lat_y = hnf_columns(phi_y);
    if (lat_x != lat_y) {
        v.kind = CompareVerdict::Kind::NotIsomorphic;
        v.reason = "trace images differ: " + detail::trace_lattice_string(lat_x, d, x.theta) +
                   " vs " + detail::trace_lattice_string(lat_y, d, y.theta);
        return v;
    }

    // Rebase the lattice so its first basis vector is the unit trace (d, 0);
    // this needs the unit to be primitive in the image, which holds whenever
    // the unit generator has trace 1.
    const std::size_t s = lat_x.cols();
    IntMatrix unit_col(2, 1);
    unit_col(0, 0) = d;
    std::optional<IntMatrix> lat;
    auto yv = solve_integer(lat_x, unit_col);
    if (yv && s == 1) {
        Int k = (*yv)(0, 0);
        if (k == 1 || k == -1) lat = lat_x * k;
    } else if (yv && s == 2) {  // extend the primitive column to GL_2(Z)
        Int y0 = (*yv)(0, 0), y1 = (*yv)(1, 0);
        Int u, w;
        Int g = detail::gcd_ext(y0, y1, u, w);
        if (g == 1) {
            IntMatrix ext(2, 2);
            ext(0, 0) = y0;
            ext(1, 0) = y1;
            ext(0, 1) = -w;
            ext(1, 1) = u;
            lat = lat_x * ext;
        }
    }
    if (!lat) {
        v.kind = CompareVerdict::Kind::Undecided;
        v.reason = "unit trace is not a primitive vector of the trace image; "
                   "no adapted generator map constructed";
        return v;
    }

    auto bx = detail::adapted_basis(phi_x, *lat);
    auto by = detail::adapted_basis(phi_y, *lat);
    if (!bx || !by) {
        v.kind = CompareVerdict::Kind::Undecided;
        v.reason = "trace pairing admits no adapted unimodular basis";
        return v;
    }
    IntMatrix w_free = *by * unimodular_inverse(*bx);
    check_internal(is_unimodular(w_free), "elliott_compare: free map not unimodular");
    check_internal(phi_y * w_free == phi_x, "elliott_compare: trace not intertwined");
    for (std::size_t i = 0; i < w_free.rows(); ++i)
        check_internal(w_free(i, 0) == (i == 0 ? 1 : 0), "elliott_compare: unit not preserved");

    // Full generator maps: identity on the torsion tail (equal groups give
    // identical ordered torsion moduli), identity on K_1 coordinates.
    const std::size_t r = x.trace.size();
    const std::size_t g0 = x.k0_generators.size();
    check_internal(g0 == y.k0_generators.size(), "elliott_compare: generator counts diverge");
    IntMatrix w0 = IntMatrix::identity(g0);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) w0(i, j) = w_free(i, j);
    v.kind = CompareVerdict::Kind::Isomorphic;
    v.reason = "unit-preserving, trace-compatible isomorphism constructed";
    v.k0_map = w0;
    v.k1_map = IntMatrix::identity(x.k1_generators.size());
    return v;
}

// --------------------------------------------------------------------------
// Families

/// The 3-torus family attached to distinct primes p_1, ..., p_r: member k
/// (0 <= k <= r) has exponents (m_k, n_k) with m_k = p_1...p_k the prefix
/// product and n_k = p_{k+1}...p_r the suffix product.  All r + 1 members
/// share K-theory (torsion Z/(p_1...p_r)) and trace data, while the strictly
/// increasing kernel ladder indices m_k separate every pair up to flip.
inline std::vector<AffineFurstenbergTorus> family_from_primes(const std::vector<Int>& primes,
                                                              const ThetaSymbol& theta) {
    if (primes.empty())
        throw std::invalid_argument("family_from_primes: need at least one prime");
    for (const Int& p : primes) {
        if (p < 2) throw std::invalid_argument("family_from_primes: " + p.str() + " is not prime");
        for (Int q = 2; q * q <= p; ++q)
            if (p % q == 0)
                throw std::invalid_argument("family_from_primes: " + p.str() + " is not prime");
    }
    for (std::size_t i = 0; i < primes.size(); ++i)
        for (std::size_t j = i + 1; j < primes.size(); ++j)
            if (primes[i] == primes[j])
                throw std::invalid_argument("family_from_primes: primes must be distinct (" +
                                            primes[i].str() + " repeats)");
    std::vector<AffineFurstenbergTorus> members;
    Int prefix = 1, suffix = 1;
    for (const Int& p : primes) suffix *= p;
    for (std::size_t k = 0; k <= primes.size(); ++k) {
        members.push_back(AffineFurstenbergTorus{3, {prefix, suffix}, theta, false});
        if (k < primes.size()) {
            prefix *= primes[k];
            suffix /= primes[k];
        }
    }
    return members;
}

}  // namespace elk
