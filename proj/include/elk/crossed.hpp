#pragma once
#ifndef ELK_CROSSED_HPP
#define ELK_CROSSED_HPP

// K-theory of the crossed product C*-algebra of a supported transformation,
// assembled from the split Pimsner-Voiculescu sequences:
//
//   K_0  =  coker(id - h* on K^0)  (+)  ker(id - h* on K^1)
//   K_1  =  coker(id - h* on K^1)  (+)  ker(id - h* on K^0)
//
// together with the image of the unique trace on K_0.  The trace of a
// cokernel class is the coefficient of the trivial-bundle class; the trace of
// a kernel lift is the rotation number of the fixed odd class, an exact
// element of Z + Z*theta represented symbolically.  All arithmetic is exact;
// theta is only ever touched through its rational enclosure.

#include <elk/ktheory.hpp>
#include <elk/zlinalg.hpp>

#include <optional>
#include <string>
#include <vector>

namespace elk {

// --------------------------------------------------------------------------
// Trace values: exact elements a + b*theta of Z + Z*theta (a, b rational to
// keep the ring closed under the few divisions reports need).

struct TraceValue {
    Rat a, b;
    ThetaSymbol theta;

    static TraceValue zero(const ThetaSymbol& th) { return {Rat(0), Rat(0), th}; }
    static TraceValue one(const ThetaSymbol& th) { return {Rat(1), Rat(0), th}; }

    bool is_zero() const { return a == 0 && b == 0; }

    TraceValue operator+(const TraceValue& o) const {
        require(theta.label == o.theta.label, "trace arithmetic: theta labels differ");
        return {a + o.a, b + o.b, theta};
    }
    TraceValue operator-(const TraceValue& o) const {
        require(theta.label == o.theta.label, "trace arithmetic: theta labels differ");
        return {a - o.a, b - o.b, theta};
    }
    TraceValue scaled(const Int& k) const { return {a * Rat(k), b * Rat(k), theta}; }

    /// Structural equality of the symbolic value (same label, same
    /// coefficients); used when matching trace lists.
    bool same_value(const TraceValue& o) const {
        return theta.label == o.theta.label && a == o.a && b == o.b;
    }

    std::string to_string() const {
        if (b == 0) return rat_to_string(a);
        std::string bt;
        if (b == 1)
            bt = theta.label;
        else if (b == -1)
            bt = "-" + theta.label;
        else
            bt = rat_to_string(b) + "*" + theta.label;
        if (a == 0) return bt;
        if (b > 0) return rat_to_string(a) + " + " + (b == 1 ? theta.label : rat_to_string(b) + "*" + theta.label);
        Rat nb = -b;
        return rat_to_string(a) + " - " + (nb == 1 ? theta.label : rat_to_string(nb) + "*" + theta.label);
    }
};

enum class Sign { Negative, Zero, Positive, NeedTighterTheta };

inline const char* to_string(Sign s) {
    switch (s) {
        case Sign::Negative: return "negative";
        case Sign::Zero: return "zero";
        case Sign::Positive: return "positive";
        default: return "need tighter theta";
    }
}

/// Exact sign of a + b*theta over the open enclosure (lo, hi).  Zero occurs
/// only at a = b = 0 (theta is irrational); an enclosure too coarse to
/// decide reports NeedTighterTheta instead of guessing.
inline Sign sign_of(const TraceValue& v) {
    if (v.a == 0 && v.b == 0) return Sign::Zero;
    if (v.b == 0) return v.a > 0 ? Sign::Positive : Sign::Negative;
    Rat at_lo = v.a + v.b * v.theta.lo;
    Rat at_hi = v.a + v.b * v.theta.hi;
    Rat low = v.b > 0 ? at_lo : at_hi;   // infimum over the open interval
    Rat high = v.b > 0 ? at_hi : at_lo;  // supremum
    if (low >= 0) return Sign::Positive;
    if (high <= 0) return Sign::Negative;
    return Sign::NeedTighterTheta;
}

// --------------------------------------------------------------------------
// Crossed-product K-theory

struct K0Generator {
    enum class Kind { CokerImage, KernelLift };
    Kind kind = Kind::CokerImage;
    std::string name;
    /// Column vector: coordinates in the space K^0 basis for CokerImage, in
    /// the space K^1 basis for KernelLift (and with parities swapped for the
    /// K_1 generator list).
    IntMatrix witness;
    Int order = 0;  // 0 = infinite
    bool unit = false;
};

struct CrossedKTheory {
    SpaceKTheory space;
    InducedMap hstar;
    FgAbGroup k0, k1;
    std::vector<K0Generator> k0_generators, k1_generators;
    // Assembly data (coordinates for membership/trace computations).
    Cokernel coker_even, coker_odd;  // coker(id - h*) on K^0 / K^1
    IntMatrix fixed_odd, fixed_even;  // kernel bases of id - h* on K^1 / K^0
};

namespace detail {

inline IntMatrix unit_vector(std::size_t n, std::size_t i) {
    IntMatrix v(n, 1);
    v(i, 0) = 1;
    return v;
}

struct SideAssembly {
    std::vector<K0Generator> generators;
    FgAbGroup group;
};

/// Assemble one parity of the crossed product: cokernel classes of `m_coker`
/// plus kernel lifts of `m_kernel`.  When `normalize_unit` is set the free
/// cokernel basis is rotated so that generator 0 is exactly the class of
/// basis element 0 (the unit) and every other free generator has vanishing
/// unit coefficient; this is what makes the trace functional land on
/// (1, 0, ..., 0).
inline SideAssembly assemble_side(const Cokernel& ck, const IntMatrix& kernel,
                                  bool normalize_unit, const char* coker_prefix,
                                  const char* lift_prefix, const char* torsion_prefix) {
    SideAssembly out;
    const std::size_t n = ck.transform.rows();
    const std::size_t rho = ck.free_rows.size();

    // Classes of the standard basis vectors, for name-matching generators
    // back to space K-theory classes.
    std::vector<Cokernel::Coords> basis_classes;
    for (std::size_t p = 0; p < n; ++p) basis_classes.push_back(ck.coords(unit_vector(n, p)));

    auto torsion_zero = [](const Cokernel::Coords& c) {
        for (const Int& t : c.torsion_part)
            if (t != 0) return false;
        return true;
    };

    // Free coker generators: columns of free-part coordinates (rho x rho).
    IntMatrix basis(rho, rho);
    if (normalize_unit && rho > 0) {
        check_internal(n > 0, "assemble_side: empty basis with unit normalization");
        Cokernel::Coords unit = basis_classes[0];
        check_internal(torsion_zero(unit),
                       "assemble_side: unit class has torsion components");
        // Trace row on free coordinates: unit coefficient of each generator.
        IntMatrix tau(1, rho);
        for (std::size_t i = 0; i < rho; ++i) tau(0, i) = ck.generators(0, ck.free_rows[i]);
        IntMatrix ucoords(rho, 1);
        for (std::size_t i = 0; i < rho; ++i) ucoords(i, 0) = unit.free_part[i];
        check_internal((tau * ucoords)(0, 0) == 1,
                       "assemble_side: unit class does not have trace 1");
        IntMatrix w = kernel_basis(tau);  // rho x (rho-1), saturated
        for (std::size_t i = 0; i < rho; ++i) {
            basis(i, 0) = ucoords(i, 0);
            for (std::size_t j = 0; j + 1 < rho; ++j) basis(i, j + 1) = w(i, j);
        }
        check_internal(boost::multiprecision::abs(det(basis)) == 1,
                       "assemble_side: normalized free basis not unimodular");
    } else {
        basis = IntMatrix::identity(rho);
    }

    // Lift each free-coordinate column to an honest vector in the space
    // basis via the cokernel generators.
    for (std::size_t j = 0; j < rho; ++j) {
        IntMatrix witness(n, 1);
        if (normalize_unit && j == 0) {
            witness = unit_vector(n, 0);  // the unit generator is [1] itself
        } else {
            for (std::size_t i = 0; i < rho; ++i)
                if (basis(i, j) != 0)
                    witness = witness + basis(i, j) * ck.generators.col(ck.free_rows[i]);
        }
        K0Generator g;
        g.kind = K0Generator::Kind::CokerImage;
        g.order = 0;
        g.unit = normalize_unit && j == 0;
        g.witness = witness;
        // Name by matching the class of a space basis element, else synthetic.
        std::string name;
        for (std::size_t p = 0; p < n && name.empty(); ++p) {
            if (!torsion_zero(basis_classes[p])) continue;
            bool plus = true, minus = true;
            for (std::size_t i = 0; i < rho; ++i) {
                plus = plus && basis_classes[p].free_part[i] == basis(i, j);
                minus = minus && basis_classes[p].free_part[i] == -basis(i, j);
            }
            if (plus)
                name = coker_prefix + std::to_string(p + 1);
            else if (minus && !g.unit) {
                // Flip the generator so the matched class appears with +1.
                for (std::size_t i = 0; i < rho; ++i) basis(i, j) = -basis(i, j);
                g.witness = -g.witness;
                name = coker_prefix + std::to_string(p + 1);
            }
        }
        g.name = name.empty() ? std::string("w") + std::to_string(j + 1) : name;
        out.generators.push_back(std::move(g));
    }

    // Kernel lifts, in canonical (Hermite) column order.
    for (std::size_t j = 0; j < kernel.cols(); ++j) {
        K0Generator g;
        g.kind = K0Generator::Kind::KernelLift;
        g.order = 0;
        g.witness = kernel.col(j);
        std::size_t pivot = 0;
        while (pivot < kernel.rows() && g.witness(pivot, 0) == 0) ++pivot;
        check_internal(pivot < kernel.rows(), "assemble_side: zero kernel column");
        g.name = lift_prefix + std::to_string(pivot + 1);
        out.generators.push_back(std::move(g));
    }

    // Torsion generators, in invariant-factor order.
    std::size_t synth = 0;
    for (std::size_t idx = 0; idx < ck.torsion_rows.size(); ++idx) {
        std::size_t row = ck.torsion_rows[idx];
        K0Generator g;
        g.kind = K0Generator::Kind::CokerImage;
        g.order = ck.moduli[row];
        g.witness = ck.generators.col(row);
        std::string name;
        for (std::size_t p = 0; p < n && name.empty(); ++p) {
            const auto& c = basis_classes[p];
            bool free_zero = true;
            for (const Int& f : c.free_part) free_zero = free_zero && f == 0;
            if (!free_zero) continue;
            bool match = true;
            for (std::size_t t = 0; t < c.torsion_part.size(); ++t)
                match = match && c.torsion_part[t] == (t == idx ? 1 : 0);
            if (match) name = coker_prefix + std::to_string(p + 1);
        }
        g.name = name.empty() ? torsion_prefix + std::to_string(++synth) : name;
        out.generators.push_back(std::move(g));
    }

    std::vector<Int> factors;
    for (std::size_t row : ck.torsion_rows) factors.push_back(ck.moduli[row]);
    out.group = FgAbGroup(rho + kernel.cols(), std::move(factors));
    return out;
}

}  // namespace detail

/// Assemble both K-groups of the crossed product from the split sequences.
inline CrossedKTheory pv_assemble(const SpaceKTheory& kt, const InducedMap& hstar) {
    require(hstar.on_k0.rows() == kt.k0_rank() && hstar.on_k0.cols() == kt.k0_rank(),
            "pv_assemble: K^0 action has wrong shape");
    require(hstar.on_k1.rows() == kt.k1_rank() && hstar.on_k1.cols() == kt.k1_rank(),
            "pv_assemble: K^1 action has wrong shape");
    IntMatrix m0 = IntMatrix::identity(kt.k0_rank()) - hstar.on_k0;
    IntMatrix m1 = IntMatrix::identity(kt.k1_rank()) - hstar.on_k1;
    // The trace functional below needs the unit class fixed; this holds for
    // every graded action extending a degree-1 map.
    for (std::size_t j = 0; j < m0.cols(); ++j)
        check_internal(m0(0, j) == 0, "pv_assemble: induced map does not fix the unit row");

    CrossedKTheory ck;
    ck.space = kt;
    ck.hstar = hstar;
    ck.coker_even = cokernel(m0);
    ck.coker_odd = cokernel(m1);
    ck.fixed_odd = kernel_basis(m1);
    ck.fixed_even = kernel_basis(m0);

    auto even = detail::assemble_side(ck.coker_even, ck.fixed_odd, true, "eta", "nu", "t");
    ck.k0 = even.group;
    ck.k0_generators = std::move(even.generators);
    auto odd = detail::assemble_side(ck.coker_odd, ck.fixed_even, false, "gamma", "mu", "s");
    ck.k1 = odd.group;
    ck.k1_generators = std::move(odd.generators);

    check_internal(ck.k0.rank == ck.coker_even.group.rank + ck.fixed_odd.cols() &&
                       ck.k1.rank == ck.coker_odd.group.rank + ck.fixed_even.cols(),
                   "pv_assemble: rank bookkeeping broken");
    return ck;
}

// --------------------------------------------------------------------------
// Rotation numbers

/// Rotation number of a fixed odd class, as the representative of c*theta in
/// [0, 1) (c = coefficient of the circle-coordinate class).  The class must
/// be fixed by the induced map; the enclosure must be tight enough to pin
/// the integer part of c*theta.
inline TraceValue rotation_number(const IntMatrix& odd_class, const TransformationSpec& spec) {
    validate_spec(spec);
    auto [kt, hstar] = space_and_map(spec);
    require(odd_class.cols() == 1 && odd_class.rows() == kt.k1_rank(),
            "rotation_number: class has wrong shape");
    if (hstar.on_k1 * odd_class != odd_class)
        throw std::invalid_argument("rotation_number: class is not fixed by the induced map");
    const ThetaSymbol& th = theta_of(spec);
    Int c = odd_class(0, 0);
    if (c == 0) return TraceValue::zero(th);
    Rat clo = Rat(c) * th.lo, chi = Rat(c) * th.hi;
    Rat inf = c > 0 ? clo : chi;
    Rat sup = c > 0 ? chi : clo;
    Int k = floor_rat(inf);
    if (!(sup <= Rat(k) + 1))
        throw std::invalid_argument(
            "rotation_number: theta enclosure too wide to pin the representative of " +
            c.str() + "*" + th.label + " in [0,1); need hi - lo < 1/" +
            Int(boost::multiprecision::abs(c)).str());
    return TraceValue{Rat(-k), Rat(c), th};
}

// --------------------------------------------------------------------------
// Elliott invariant

/// Canonically ordered Elliott data: ordered K_0 with the trace pairing and
/// distinguished unit, plus K_1.  The order on K_0 is determined by the
/// trace: x > 0 iff trace(x) > 0 (strict-trace cone), which is complete for
/// every space in the supported catalog because the trace range is dense
/// whenever a kernel lift is present.
struct ElliottInvariant {
    FgAbGroup k0, k1;
    ThetaSymbol theta;
    std::vector<K0Generator> k0_generators;  // unit first, then free, then torsion
    std::vector<K0Generator> k1_generators;
    std::vector<TraceValue> trace;  // one per free K_0 generator, unit first
    bool extrapolated = false;      // torus dimension beyond the published range

    /// Mathematical equality of invariants (names and witnesses are
    /// presentation, not structure).
    bool operator==(const ElliottInvariant& o) const {
        if (!(k0 == o.k0 && k1 == o.k1 && theta == o.theta)) return false;
        if (trace.size() != o.trace.size()) return false;
        for (std::size_t i = 0; i < trace.size(); ++i)
            if (!trace[i].same_value(o.trace[i])) return false;
        return true;
    }
    bool operator!=(const ElliottInvariant& o) const { return !(*this == o); }
};

/// Attach the trace pairing to an assembled crossed product.
inline ElliottInvariant trace_functional(const CrossedKTheory& ck, const TransformationSpec& spec) {
    validate_spec(spec);
    const ThetaSymbol& th = theta_of(spec);
    {
        auto [kt, hstar] = space_and_map(spec);
        require(kt == ck.space && hstar.on_k0 == ck.hstar.on_k0 && hstar.on_k1 == ck.hstar.on_k1,
                "trace_functional: crossed product was not assembled from this spec");
    }
    ElliottInvariant inv;
    inv.k0 = ck.k0;
    inv.k1 = ck.k1;
    inv.theta = th;
    inv.k0_generators = ck.k0_generators;
    inv.k1_generators = ck.k1_generators;
    if (const auto* t = std::get_if<AffineFurstenbergTorus>(&spec)) inv.extrapolated = t->dim >= 4;
    for (const K0Generator& g : ck.k0_generators) {
        if (g.order != 0) continue;  // torsion maps to 0
        if (g.kind == K0Generator::Kind::CokerImage) {
            // Coefficient of the trivial-bundle class; exact integer.
            inv.trace.push_back(TraceValue{Rat(g.witness(0, 0)), Rat(0), th});
        } else {
            inv.trace.push_back(rotation_number(g.witness, spec));
        }
    }
    check_internal(!inv.trace.empty() && inv.trace[0].a == 1 && inv.trace[0].b == 0,
                   "trace_functional: unit does not have trace 1");
    return inv;
}

/// Trace range dense in R iff some generator carries an irrational trace.
inline bool dense_range(const ElliottInvariant& inv) {
    for (const TraceValue& t : inv.trace)
        if (t.b != 0) return true;
    return false;
}

/// Full pipeline: spec -> space K-theory -> crossed product -> invariant.
inline ElliottInvariant elliott(const TransformationSpec& spec) {
    validate_spec(spec);
    auto [kt, hstar] = space_and_map(spec);
    CrossedKTheory ck = pv_assemble(kt, hstar);
    return trace_functional(ck, spec);
}

}  // namespace elk

#endif  // ELK_CROSSED_HPP
