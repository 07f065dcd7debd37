#pragma once

// Spec documents: strict JSON descriptions of a single transformation.
// Every violation of the schema throws std::invalid_argument (input error);
// schema-valid documents naming a space outside the catalog throw
// unsupported_space.  Decimal interval endpoints are parsed exactly as
// rationals, never through floating point.

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include <elk/ktheory.hpp>
#include <elk/rational.hpp>

namespace elk {

using Json = nlohmann::ordered_json;

namespace detail {

inline void reject_unknown_fields(const Json& obj, const std::set<std::string>& allowed,
                                  const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw std::invalid_argument("spec: unknown field '" + it.key() + "' in " + where);
}

inline const Json& field(const Json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw std::invalid_argument("spec: missing field '" + std::string(key) + "' in " + where);
    return *it;
}

inline std::string string_field(const Json& obj, const char* key, const std::string& where) {
    const Json& v = field(obj, key, where);
    if (!v.is_string())
        throw std::invalid_argument("spec: field '" + std::string(key) + "' must be a string");
    return v.get<std::string>();
}

inline long long int_field(const Json& obj, const char* key, const std::string& where) {
    const Json& v = field(obj, key, where);
    if (!v.is_number_integer())
        throw std::invalid_argument("spec: field '" + std::string(key) + "' must be an integer");
    return v.get<long long>();
}

inline ThetaSymbol parse_theta(const Json& obj) {
    if (!obj.is_object())
        throw std::invalid_argument("spec: field 'theta' must be an object");
    reject_unknown_fields(obj, {"label", "interval"}, "theta");
    ThetaSymbol th;
    th.label = string_field(obj, "label", "theta");
    const Json& iv = field(obj, "interval", "theta");
    if (!iv.is_array() || iv.size() != 2 || !iv[0].is_string() || !iv[1].is_string())
        throw std::invalid_argument(
            "spec: theta.interval must be an array of two decimal strings");
    th.lo = parse_decimal(iv[0].get<std::string>());
    th.hi = parse_decimal(iv[1].get<std::string>());
    th.validate();
    return th;
}

}  // namespace detail

/// Parse one transformation spec from a JSON document (strict schema).
inline TransformationSpec parse_spec_document(const Json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("spec: document must be a JSON object");
    detail::reject_unknown_fields(
        doc, {"space", "dimension", "exponents", "theta", "cocycle_perturbed"}, "spec");
    std::string space = detail::string_field(doc, "space", "spec");
    long long dim = detail::int_field(doc, "dimension", "spec");
    ThetaSymbol theta = detail::parse_theta(detail::field(doc, "theta", "spec"));

    if (space == "torus") {
        if (dim < 1)
            throw std::invalid_argument("spec: dimension must be >= 1 (got " +
                                        std::to_string(dim) + ")");
        AffineFurstenbergTorus t;
        t.dim = static_cast<int>(dim);
        t.theta = theta;
        const Json& exps = detail::field(doc, "exponents", "spec");
        if (!exps.is_array())
            throw std::invalid_argument("spec: field 'exponents' must be an array of integers");
        for (const Json& e : exps) {
            if (!e.is_number_integer())
                throw std::invalid_argument("spec: exponents entries must be integers");
            t.exponents.push_back(Int(e.get<long long>()));
        }
        if (doc.contains("cocycle_perturbed")) {
            const Json& cp = doc["cocycle_perturbed"];
            if (!cp.is_boolean())
                throw std::invalid_argument("spec: field 'cocycle_perturbed' must be a boolean");
            t.cocycle_perturbed = cp.get<bool>();
        }
        if (static_cast<long long>(t.exponents.size()) != dim - 1)
            throw std::invalid_argument("spec: torus of dimension " + std::to_string(dim) +
                                        " needs exactly " + std::to_string(dim - 1) +
                                        " exponents (got " +
                                        std::to_string(t.exponents.size()) + ")");
        t.validate();
        return t;
    }
    if (space == "sphere_circle") {
        if (doc.contains("exponents"))
            throw std::invalid_argument("spec: field 'exponents' only applies to torus specs");
        if (doc.contains("cocycle_perturbed"))
            throw std::invalid_argument(
                "spec: field 'cocycle_perturbed' only applies to torus specs");
        SphereTimesCircle s;
        s.sphere_dim = static_cast<int>(dim);
        s.theta = theta;
        s.validate();
        return s;
    }
    throw unsupported_space("spec: space '" + space + "' is not in the catalog "
                            "(supported: torus, sphere_circle)");
}

/// Parse a spec from raw document text.
inline TransformationSpec parse_spec_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("spec: document is not valid JSON: ") + e.what());
    }
    return parse_spec_document(doc);
}

/// Load a spec from a file path.
inline TransformationSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("spec: cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec_text(buf.str());
}

/// Canonical JSON echo of a parsed spec (re-parses to an equal spec).
inline Json spec_to_json(const TransformationSpec& spec) {
    Json j;
    const ThetaSymbol& th = theta_of(spec);
    if (const auto* t = std::get_if<AffineFurstenbergTorus>(&spec)) {
        j["space"] = "torus";
        j["dimension"] = t->dim;
        Json exps = Json::array();
        for (const Int& e : t->exponents) exps.push_back(e.convert_to<long long>());
        j["exponents"] = exps;
    } else {
        const auto& s = std::get<SphereTimesCircle>(spec);
        j["space"] = "sphere_circle";
        j["dimension"] = s.sphere_dim;
    }
    Json jt;
    jt["label"] = th.label;
    auto lo = rat_to_decimal(th.lo), hi = rat_to_decimal(th.hi);
    check_internal(lo && hi, "spec_to_json: theta endpoints are not decimal rationals");
    jt["interval"] = Json::array({*lo, *hi});
    j["theta"] = jt;
    if (const auto* t = std::get_if<AffineFurstenbergTorus>(&spec))
        j["cocycle_perturbed"] = t->cocycle_perturbed;
    return j;
}

}  // namespace elk
