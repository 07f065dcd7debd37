#pragma once

// Report rendering: deterministic human text and structured JSON documents
// for the invariant, compare, family, and rouhani commands.  All numbers are
// exact (integers/rationals as strings in JSON); very large integers from the
// tower construction are displayed in the exact symbolic form 2^e + c.

#include <string>
#include <vector>

#include <elk/classify.hpp>
#include <elk/rouhani.hpp>
#include <elk/specdoc.hpp>

namespace elk {

constexpr int kSchemaVersion = 1;

// --------------------------------------------------------------------------
// Display helpers

inline std::string space_name(const TransformationSpec& spec) {
    if (const auto* t = std::get_if<AffineFurstenbergTorus>(&spec))
        return "T^" + std::to_string(t->dim);
    return "S^" + std::to_string(std::get<SphereTimesCircle>(spec).sphere_dim) + " x S^1";
}

inline std::string theta_summary(const ThetaSymbol& th) {
    return th.label + " in (" + rat_to_string(th.lo) + ", " + rat_to_string(th.hi) + ")";
}

inline std::string spec_summary(const TransformationSpec& spec) {
    std::string s = space_name(spec);
    if (const auto* t = std::get_if<AffineFurstenbergTorus>(&spec)) {
        s += ", exponents (";
        for (std::size_t i = 0; i < t->exponents.size(); ++i)
            s += (i ? ", " : "") + t->exponents[i].str();
        s += ")";
        if (t->cocycle_perturbed) s += ", cocycle perturbed";
    }
    return s + ", " + theta_summary(theta_of(spec));
}

/// Exact display of a nonnegative integer; values with more than 40 digits
/// that are a power of two plus a small offset print as "2^e + c".
inline std::string int_display(const Int& v) {
    std::string plain = v.str();
    if (plain.size() <= 40 || v < 0) return plain;
    unsigned e = boost::multiprecision::msb(v);
    Int rem = v - (Int(1) << e);
    std::string tail = rem.str();
    if (tail.size() > 40) return plain;
    if (rem == 0) return "2^" + std::to_string(e);
    return "2^" + std::to_string(e) + " + " + tail;
}

/// Exact display of the partial rotation number: terms 2^-nu_k with small
/// nu_k are accumulated into one rational, larger ones stay symbolic.
inline std::string rouhani_theta_display(const RouhaniParameters& p) {
    Rat head(0);
    std::string tail;
    for (std::size_t k = 0; k + 1 < p.nu.size(); ++k) {  // nu_1 .. nu_K
        const Int& nu = p.nu[k];
        if (nu <= 130)
            head += Rat(Int(1), Int(1) << nu.convert_to<unsigned>());
        else
            tail += " + 2^-" + nu.str();
    }
    return rat_to_string(head) + tail;
}

// --------------------------------------------------------------------------
// Flip-conjugacy section of a comparison

/// Whether the flip obstruction applies, and its verdict when it does.  The
/// obstruction compares induced matrices on first cohomology, which only
/// makes sense for homeomorphic candidate spaces; otherwise conjugacy is
/// already excluded by the spaces and we report that without computing.
struct FlipComparison {
    bool applicable = false;
    std::string note;  ///< when not applicable: why conjugacy is excluded
    ConjugacyVerdict verdict;
};

inline FlipComparison flip_comparison(const TransformationSpec& a, const TransformationSpec& b,
                                      long search_bound = 5) {
    FlipComparison fc;
    const auto* ta = std::get_if<AffineFurstenbergTorus>(&a);
    const auto* tb = std::get_if<AffineFurstenbergTorus>(&b);
    const auto* sa = std::get_if<SphereTimesCircle>(&a);
    const auto* sb = std::get_if<SphereTimesCircle>(&b);
    if (ta && tb && ta->dim == tb->dim) {
        fc.applicable = true;
        fc.verdict =
            flip_conjugacy_verdict(furstenberg_degree1(*ta), furstenberg_degree1(*tb),
                                   search_bound);
        return fc;
    }
    if (sa && sb && sa->sphere_dim == sb->sphere_dim) {
        // Rotation-like maps act trivially on K^1; the obstruction is vacuous.
        fc.applicable = true;
        fc.verdict = flip_conjugacy_verdict(IntMatrix::identity(2), IntMatrix::identity(2),
                                            search_bound);
        fc.verdict.detail = "induced maps on odd K-theory are both trivial; " + fc.verdict.detail;
        return fc;
    }
    std::string reason = (ta && tb) || (sa && sb) ? "dimension" : "space";
    fc.note = "excluded by " + reason + ": " + space_name(a) + " and " + space_name(b) +
              " are not homeomorphic (reported, not computed)";
    return fc;
}

// --------------------------------------------------------------------------
// JSON building blocks

inline Json group_json(const FgAbGroup& g) {
    Json j;
    j["rank"] = g.rank;
    Json fs = Json::array();
    for (const Int& f : g.factors) fs.push_back(f.str());
    j["factors"] = fs;
    j["display"] = g.to_string();
    return j;
}

inline Json theta_json(const ThetaSymbol& th) {
    Json j;
    j["label"] = th.label;
    auto lo = rat_to_decimal(th.lo), hi = rat_to_decimal(th.hi);
    check_internal(lo && hi, "theta_json: endpoints are not decimal rationals");
    j["interval"] = Json::array({*lo, *hi});
    return j;
}

inline Json trace_json(const TraceValue& t) {
    Json j;
    j["integer_part"] = rat_to_string(t.a);
    j["theta_coefficient"] = rat_to_string(t.b);
    j["display"] = t.to_string();
    return j;
}

inline Json matrix_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

inline Json generators_json(const std::vector<K0Generator>& gens,
                            const std::vector<TraceValue>* trace) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        Json g;
        g["name"] = gens[i].name;
        g["order"] = gens[i].order.str();
        g["unit"] = gens[i].unit;
        if (trace && i < trace->size()) g["trace"] = trace_json((*trace)[i]);
        arr.push_back(g);
    }
    return arr;
}

// --------------------------------------------------------------------------
// invariant command

inline constexpr const char* kPositivityStatement =
    "a nonzero K0 class x is positive iff trace(x) > 0 (order determined by the trace)";

inline Json invariant_json(const TransformationSpec& spec, const ElliottInvariant& inv) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "invariant";
    j["spec"] = spec_to_json(spec);
    j["k0"] = group_json(inv.k0);
    j["k1"] = group_json(inv.k1);
    j["theta"] = theta_json(inv.theta);
    j["k0_generators"] = generators_json(inv.k0_generators, &inv.trace);
    j["k1_generators"] = generators_json(inv.k1_generators, nullptr);
    std::string unit;
    for (const auto& g : inv.k0_generators)
        if (g.unit) unit = g.name;
    j["unit"] = unit;
    j["dense_range"] = dense_range(inv);
    j["extrapolated"] = inv.extrapolated;
    j["positivity"] = kPositivityStatement;
    return j;
}

inline std::string invariant_text(const TransformationSpec& spec, const ElliottInvariant& inv) {
    std::ostringstream os;
    os << "spec: " << spec_summary(spec) << "\n";
    os << "K0 = " << inv.k0.to_string() << "\n";
    os << "K1 = " << inv.k1.to_string() << "\n";
    std::string unit;
    for (const auto& g : inv.k0_generators)
        if (g.unit) unit = g.name;
    os << "unit: " << unit << "\n";
    os << "dense range: " << (dense_range(inv) ? "yes" : "no") << " (trace image Z + Z*"
       << inv.theta.label << ", " << inv.theta.label << " irrational)\n";
    os << "positivity: " << kPositivityStatement << "\n";
    if (inv.extrapolated)
        os << "note: torus dimension beyond the worked low-dimensional cases; "
              "computed by the same exterior-algebra rules\n";
    os << "K0 generators (name: trace):\n";
    for (std::size_t i = 0; i < inv.k0_generators.size(); ++i) {
        const auto& g = inv.k0_generators[i];
        os << "  " << g.name << ": ";
        if (i < inv.trace.size())
            os << inv.trace[i].to_string() << (g.unit ? " (unit)" : "");
        else
            os << "torsion, order " << g.order.str();
        os << "\n";
    }
    os << "K1 generators:\n";
    for (const auto& g : inv.k1_generators) {
        os << "  " << g.name;
        if (g.order != 0) os << ": torsion, order " << g.order.str();
        os << "\n";
    }
    return os.str();
}

// --------------------------------------------------------------------------
// compare command

inline std::string headline_for(const CompareVerdict& cv, const FlipComparison& fc) {
    if (cv.kind == CompareVerdict::Kind::Isomorphic) {
        if (fc.applicable && fc.verdict.kind == ConjugacyVerdict::Kind::Distinct)
            return "isomorphic C*-algebras, not flip conjugate";
        if (!fc.applicable)
            return "isomorphic C*-algebras, not flip conjugate (underlying spaces differ)";
        if (fc.verdict.kind == ConjugacyVerdict::Kind::PossiblyConjugate)
            return "isomorphic C*-algebras; flip conjugacy not obstructed";
        return "isomorphic C*-algebras; flip conjugacy undecided";
    }
    if (cv.kind == CompareVerdict::Kind::NotIsomorphic) return "non-isomorphic C*-algebras";
    return "isomorphism undecided";
}

inline Json compare_json(const TransformationSpec& a, const TransformationSpec& b,
                         const CompareVerdict& cv, const FlipComparison& fc) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "compare";
    j["spec_a"] = spec_to_json(a);
    j["spec_b"] = spec_to_json(b);
    Json je;
    je["verdict"] = to_string(cv.kind);
    je["reason"] = cv.reason;
    je["k0_map"] = cv.k0_map ? matrix_json(*cv.k0_map) : Json(nullptr);
    je["k1_map"] = cv.k1_map ? matrix_json(*cv.k1_map) : Json(nullptr);
    j["elliott"] = je;
    Json jf;
    jf["applicable"] = fc.applicable;
    if (fc.applicable) {
        jf["verdict"] = to_string(fc.verdict.kind);
        jf["detail"] = fc.verdict.detail;
        jf["witness"] = fc.verdict.witness ? matrix_json(*fc.verdict.witness) : Json(nullptr);
        jf["witness_flips"] = fc.verdict.witness_flips;
    } else {
        jf["note"] = fc.note;
    }
    j["flip"] = jf;
    j["headline"] = headline_for(cv, fc);
    return j;
}

inline std::string verdict_caps(CompareVerdict::Kind k) {
    switch (k) {
        case CompareVerdict::Kind::Isomorphic: return "ISOMORPHIC";
        case CompareVerdict::Kind::NotIsomorphic: return "NOT ISOMORPHIC";
        case CompareVerdict::Kind::Undecided: return "UNDECIDED";
    }
    return "UNDECIDED";
}

inline std::string verdict_caps(ConjugacyVerdict::Kind k) {
    switch (k) {
        case ConjugacyVerdict::Kind::Distinct: return "DISTINCT";
        case ConjugacyVerdict::Kind::PossiblyConjugate: return "POSSIBLY CONJUGATE";
        case ConjugacyVerdict::Kind::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

inline std::string compare_text(const TransformationSpec& a, const TransformationSpec& b,
                                const CompareVerdict& cv, const FlipComparison& fc) {
    std::ostringstream os;
    os << "spec A: " << spec_summary(a) << "\n";
    os << "spec B: " << spec_summary(b) << "\n";
    os << "\nElliott: " << verdict_caps(cv.kind) << "\n";
    if (!cv.reason.empty()) os << "  " << cv.reason << "\n";
    if (cv.k0_map) {
        os << "  K0 witness (A-generator images in B-coordinates): "
           << cv.k0_map->to_string() << "\n";
        os << "  K1 witness: " << cv.k1_map->to_string() << "\n";
    }
    os << "\nFlip-conjugacy: ";
    if (fc.applicable) {
        os << verdict_caps(fc.verdict.kind) << "\n";
        os << "  " << fc.verdict.detail << "\n";
        if (fc.verdict.witness)
            os << "  intertwiner" << (fc.verdict.witness_flips ? " (onto the inverse)" : "")
               << ": " << fc.verdict.witness->to_string() << "\n";
    } else {
        os << "EXCLUDED\n  " << fc.note << "\n";
    }
    os << "\nheadline: " << headline_for(cv, fc) << "\n";
    return os.str();
}

// --------------------------------------------------------------------------
// family command

struct FamilyResult {
    std::vector<AffineFurstenbergTorus> members;
    std::vector<ElliottInvariant> invariants;
    // pair (i, j), i < j, row-major order
    std::vector<CompareVerdict> elliott_verdicts;
    std::vector<ConjugacyVerdict> flip_verdicts;
    bool all_pairs_isomorphic_and_distinct = true;
};

inline FamilyResult run_family(const std::vector<Int>& primes, const ThetaSymbol& theta,
                               long search_bound = 5) {
    FamilyResult fr;
    fr.members = family_from_primes(primes, theta);
    for (const auto& m : fr.members) fr.invariants.push_back(elliott(TransformationSpec(m)));
    for (std::size_t i = 0; i < fr.members.size(); ++i)
        for (std::size_t j = i + 1; j < fr.members.size(); ++j) {
            fr.elliott_verdicts.push_back(elliott_compare(fr.invariants[i], fr.invariants[j]));
            fr.flip_verdicts.push_back(flip_conjugacy_verdict(
                furstenberg_degree1(fr.members[i]), furstenberg_degree1(fr.members[j]),
                search_bound));
            if (fr.elliott_verdicts.back().kind != CompareVerdict::Kind::Isomorphic ||
                fr.flip_verdicts.back().kind != ConjugacyVerdict::Kind::Distinct)
                fr.all_pairs_isomorphic_and_distinct = false;
        }
    return fr;
}

namespace detail {

inline std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
    // index of (i, j), i < j, in row-major upper-triangular order
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

}  // namespace detail

inline Json family_json(const std::vector<Int>& primes, const FamilyResult& fr) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "family";
    Json ps = Json::array();
    for (const Int& p : primes) ps.push_back(p.str());
    j["primes"] = ps;
    Json ms = Json::array();
    for (const auto& m : fr.members) ms.push_back(spec_to_json(TransformationSpec(m)));
    j["members"] = ms;
    j["k0"] = group_json(fr.invariants.at(0).k0);
    const std::size_t n = fr.members.size();
    Json matrix = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < n; ++k) {
            if (i == k) {
                row.push_back("-");
                continue;
            }
            std::size_t idx = detail::pair_index(std::min(i, k), std::max(i, k), n);
            row.push_back(verdict_caps(fr.elliott_verdicts[idx].kind) + " / " +
                          verdict_caps(fr.flip_verdicts[idx].kind));
        }
        matrix.push_back(row);
    }
    j["verdict_matrix"] = matrix;
    Json pairs = Json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i + 1; k < n; ++k) {
            std::size_t idx = detail::pair_index(i, k, n);
            Json p;
            p["i"] = i;
            p["j"] = k;
            p["elliott"] = to_string(fr.elliott_verdicts[idx].kind);
            p["flip"] = to_string(fr.flip_verdicts[idx].kind);
            p["flip_detail"] = fr.flip_verdicts[idx].detail;
            pairs.push_back(p);
        }
    j["pairs"] = pairs;
    j["all_pairs_isomorphic_and_distinct"] = fr.all_pairs_isomorphic_and_distinct;
    return j;
}

inline std::string family_text(const std::vector<Int>& primes, const FamilyResult& fr) {
    std::ostringstream os;
    os << "family from primes (";
    for (std::size_t i = 0; i < primes.size(); ++i) os << (i ? ", " : "") << primes[i].str();
    os << "): " << fr.members.size() << " members\n";
    for (std::size_t i = 0; i < fr.members.size(); ++i)
        os << "  member " << i << ": " << spec_summary(TransformationSpec(fr.members[i]))
           << "\n";
    os << "common K0 = " << fr.invariants.at(0).k0.to_string() << "\n";
    os << "verdict matrix (Elliott / flip-conjugacy):\n";
    const std::size_t n = fr.members.size();
    for (std::size_t i = 0; i < n; ++i) {
        os << "  member " << i << ":";
        for (std::size_t k = 0; k < n; ++k) {
            if (i == k) {
                os << "  -";
                continue;
            }
            std::size_t idx = detail::pair_index(std::min(i, k), std::max(i, k), n);
            os << "  " << verdict_caps(fr.elliott_verdicts[idx].kind) << "/"
               << verdict_caps(fr.flip_verdicts[idx].kind);
        }
        os << "\n";
    }
    os << "all off-diagonal pairs isomorphic and not flip conjugate: "
       << (fr.all_pairs_isomorphic_and_distinct ? "yes" : "NO") << "\n";
    return os.str();
}

// --------------------------------------------------------------------------
// rouhani command

inline Json rouhani_json(const RouhaniParameters& p) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "rouhani";
    j["depth"] = p.depth;
    Json nu = Json::array(), nn = Json::array();
    for (const Int& v : p.nu) nu.push_back(int_display(v));
    for (const Int& v : p.n) nn.push_back(int_display(v));
    j["nu"] = nu;
    j["n"] = nn;
    j["theta_partial"] = rouhani_theta_display(p);
    j["beta_bound_certified"] = p.beta_bound_certified;
    j["derivative_orders"] = p.derivative_orders;
    j["derivative_terms"] = p.derivative_terms;
    Json finals = Json::array();
    for (const auto& partial : p.derivative_partials)
        finals.push_back(rat_to_string(partial.back()));
    j["derivative_final_partials"] = finals;
    return j;
}

inline std::string rouhani_text(const RouhaniParameters& p) {
    std::ostringstream os;
    os << "tower depth " << p.depth << "\n";
    os << "nu = (";
    for (std::size_t i = 0; i < p.nu.size(); ++i) os << (i ? ", " : "") << int_display(p.nu[i]);
    os << ")\nn = (";
    for (std::size_t i = 0; i < p.n.size(); ++i) os << (i ? ", " : "") << int_display(p.n[i]);
    os << ")\n";
    os << "theta_" << p.depth << " = " << rouhani_theta_display(p) << "\n";
    os << "beta bound certified: " << (p.beta_bound_certified ? "yes" : "NO") << "\n";
    os << "derivative series partial sums (order m: S_m(" << p.derivative_terms << ")):\n";
    for (std::size_t m = 0; m < p.derivative_partials.size(); ++m)
        os << "  m=" << m << ": " << rat_to_string(p.derivative_partials[m].back()) << "\n";
    return os.str();
}

// --------------------------------------------------------------------------
// Schema validation (used by tests and as a final internal check)

inline void validate_report(const Json& j) {
    auto need = [&](const Json& obj, const char* key) -> const Json& {
        auto it = obj.find(key);
        if (it == obj.end())
            throw std::invalid_argument("report: missing field '" + std::string(key) + "'");
        return *it;
    };
    if (need(j, "schema_version").get<int>() != kSchemaVersion)
        throw std::invalid_argument("report: unknown schema_version");
    std::string cmd = need(j, "command").get<std::string>();
    auto check_group = [&](const Json& g) {
        if (!need(g, "rank").is_number_integer() || !need(g, "factors").is_array() ||
            !need(g, "display").is_string())
            throw std::invalid_argument("report: malformed group object");
    };
    if (cmd == "invariant") {
        check_group(need(j, "k0"));
        check_group(need(j, "k1"));
        if (!need(j, "k0_generators").is_array() || !need(j, "k1_generators").is_array())
            throw std::invalid_argument("report: malformed generator lists");
        need(j, "spec");
        need(j, "theta");
        need(j, "unit");
        if (!need(j, "dense_range").is_boolean() || !need(j, "extrapolated").is_boolean())
            throw std::invalid_argument("report: malformed flags");
        need(j, "positivity");
    } else if (cmd == "compare") {
        need(j, "spec_a");
        need(j, "spec_b");
        const Json& e = need(j, "elliott");
        need(e, "verdict");
        const Json& f = need(j, "flip");
        if (!need(f, "applicable").is_boolean())
            throw std::invalid_argument("report: malformed flip section");
        if (f["applicable"].get<bool>())
            need(f, "verdict");
        else
            need(f, "note");
        need(j, "headline");
    } else if (cmd == "family") {
        need(j, "primes");
        if (!need(j, "members").is_array() || !need(j, "verdict_matrix").is_array() ||
            !need(j, "pairs").is_array())
            throw std::invalid_argument("report: malformed family section");
        if (!need(j, "all_pairs_isomorphic_and_distinct").is_boolean())
            throw std::invalid_argument("report: malformed family verdict flag");
    } else if (cmd == "rouhani") {
        if (!need(j, "depth").is_number_integer() || !need(j, "nu").is_array() ||
            !need(j, "n").is_array())
            throw std::invalid_argument("report: malformed rouhani section");
        need(j, "theta_partial");
        if (!need(j, "beta_bound_certified").is_boolean())
            throw std::invalid_argument("report: malformed rouhani certificate flag");
    } else if (cmd == "paper_examples") {
        const Json& results = need(j, "results");
        if (!results.is_array())
            throw std::invalid_argument("report: malformed example batch results");
        for (const Json& r : results) {
            need(r, "name");
            if (!need(r, "pass").is_boolean())
                throw std::invalid_argument("report: malformed example batch entry");
        }
        if (!need(j, "all_pass").is_boolean())
            throw std::invalid_argument("report: malformed example batch flag");
    } else {
        throw std::invalid_argument("report: unknown command '" + cmd + "'");
    }
}

}  // namespace elk
