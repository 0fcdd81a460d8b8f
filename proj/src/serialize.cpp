#include "pendmel/serialize.hpp"

#include "pendmel/errors.hpp"

#include <fstream>
#include <sstream>

namespace pendmel {

Json poly_to_json(const RationalPoly& p)
{
    Json out = Json::array();
    for (const auto& c : p.coeffs())
        out.push_back(to_string(c));
    return out;
}

Rational rational_from_json(const Json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(Integer(std::to_string(j.get<long long>())));
    if (j.is_number())
        return exact_rational(j.get<double>());
    throw ArgumentError("expected a number or a rational string, got " + j.dump());
}

RationalPoly poly_from_json(const Json& j)
{
    if (!j.is_array())
        throw ArgumentError("polynomial coefficients must be an array");
    std::vector<Rational> coeffs;
    for (const auto& c : j)
        coeffs.push_back(rational_from_json(c));
    return RationalPoly(std::move(coeffs));
}

namespace {

const Json& require(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ArgumentError(std::string("missing field '") + key + "'");
    return j.at(key);
}

Json rational_array(const std::vector<Rational>& v)
{
    Json out = Json::array();
    for (const auto& c : v)
        out.push_back(to_string(c));
    return out;
}

std::vector<Rational> rationals_from_json(const Json& j)
{
    if (!j.is_array())
        throw ArgumentError("Fourier coefficients must be an array");
    std::vector<Rational> out;
    for (const auto& c : j)
        out.push_back(rational_from_json(c));
    return out;
}

std::string_view to_string(BoundKind kind)
{
    switch (kind) {
    case BoundKind::Finite: return "finite";
    case BoundKind::Center: return "center";
    case BoundKind::NotApplicable: return "not_applicable";
    }
    return "?";
}

BoundKind parse_bound_kind(const std::string& name)
{
    if (name == "finite")
        return BoundKind::Finite;
    if (name == "center")
        return BoundKind::Center;
    if (name == "not_applicable")
        return BoundKind::NotApplicable;
    throw ArgumentError("unknown bound kind '" + name + "'");
}

}  // namespace

Json to_json(const EllipticForm& f)
{
    return Json{{"schema", schema_version},
                {"kind", "elliptic_form"},
                {"region", std::string(to_string(f.region))},
                {"z", poly_to_json(f.z)},
                {"p", poly_to_json(f.p)},
                {"q", poly_to_json(f.q)},
                {"sqrt_h", f.sqrt_h},
                {"scalars", {{"z", std::string(to_string(f.z_scalar))}, {"ke", std::string(to_string(f.ke_scalar))}}},
                {"denom_power", f.denom_power}};
}

EllipticForm form_from_json(const Json& j)
{
    EllipticForm f;
    f.region = parse_region(require(j, "region").get<std::string>());
    f.z = poly_from_json(require(j, "z"));
    f.p = poly_from_json(require(j, "p"));
    f.q = poly_from_json(require(j, "q"));
    f.sqrt_h = require(j, "sqrt_h").get<bool>();
    const Json& scalars = require(j, "scalars");
    f.z_scalar = parse_scalar(require(scalars, "z").get<std::string>());
    f.ke_scalar = parse_scalar(require(scalars, "ke").get<std::string>());
    f.denom_power = j.value("denom_power", 0);
    return f;
}

Json to_json(const Perturbation& p)
{
    Json terms = Json::array();
    for (const auto& [s, q] : p.terms) {
        if (q.is_zero())
            continue;
        terms.push_back({{"s", s}, {"sin", rational_array(q.sin)}, {"cos", rational_array(q.cos)}});
    }
    return Json{{"schema", schema_version}, {"terms", terms}};
}

Perturbation perturbation_from_json(const Json& j)
{
    const Json& terms = require(j, "terms");
    if (!terms.is_array())
        throw ArgumentError("'terms' must be an array");
    Perturbation p;
    for (const auto& t : terms) {
        const Json& s = require(t, "s");
        if (!s.is_number_integer() || s.get<long long>() < 0)
            throw ArgumentError("'s' must be a nonnegative integer");
        FourierPoly q;
        if (t.contains("sin"))
            q.sin = rationals_from_json(t.at("sin"));
        if (t.contains("cos"))
            q.cos = rationals_from_json(t.at("cos"));
        p.add(static_cast<int>(s.get<long long>()), FourierPoly{} + q);
    }
    return p;
}

Perturbation read_perturbation_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ArgumentError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw ArgumentError("'" + path + "' is not valid JSON: " + e.what());
    }
    return perturbation_from_json(j);
}

Json to_json(const Bound& b)
{
    return Json{{"kind", std::string(to_string(b.kind))}, {"value", b.value}, {"source", b.source}};
}

Bound bound_from_json(const Json& j)
{
    return {parse_bound_kind(require(j, "kind").get<std::string>()), require(j, "value").get<int>(),
            require(j, "source").get<std::string>()};
}

Json to_json(const ZeroReport& r)
{
    Json zeros = Json::array();
    for (const auto& z : r.zeros)
        zeros.push_back({{"h", z.h}, {"multiplicity", z.multiplicity}});
    return Json{{"schema", schema_version},
                {"kind", "zero_report"},
                {"region", std::string(to_string(r.region))},
                {"zeros", zeros},
                {"count", r.count},
                {"simple_count", r.simple_count},
                {"bound", r.bound ? to_json(*r.bound) : Json(nullptr)},
                {"h_min", r.h_min},
                {"h_max", r.h_max},
                {"grid", r.grid},
                {"tolerance", r.tolerance}};
}

ZeroReport zero_report_from_json(const Json& j)
{
    ZeroReport r;
    r.region = parse_region(require(j, "region").get<std::string>());
    for (const auto& z : require(j, "zeros"))
        r.zeros.push_back({require(z, "h").get<double>(), require(z, "multiplicity").get<int>()});
    r.count = require(j, "count").get<int>();
    r.simple_count = require(j, "simple_count").get<int>();
    if (const Json& b = require(j, "bound"); !b.is_null())
        r.bound = bound_from_json(b);
    r.h_min = require(j, "h_min").get<double>();
    r.h_max = require(j, "h_max").get<double>();
    r.grid = require(j, "grid").get<int>();
    r.tolerance = require(j, "tolerance").get<double>();
    return r;
}

Json to_json(const Configuration& c)
{
    return Json{{"schema", schema_version},
                {"kind", "configuration"},
                {"label", c.label()},
                {"c_minus", c.minus},
                {"c_zero", c.zero},
                {"c_plus", c.plus},
                {"bounds",
                 {{"rotary_minus", to_json(c.bound_minus)},
                  {"oscillatory", to_json(c.bound_zero)},
                  {"rotary_plus", to_json(c.bound_plus)}}}};
}

Json to_json(const Certificate& c)
{
    Json orders = Json::array();
    for (const auto& w : c.orders) {
        orders.push_back({{"order", w.order},
                          {"numerator", poly_to_json(w.numerator)},
                          {"numerator_text", w.numerator.to_string("u")},
                          {"sin_power", w.sin_power},
                          {"factors_at_minus_one", w.factors_at_minus_one},
                          {"factors_at_plus_one", w.factors_at_plus_one},
                          {"roots_in_interval", w.roots_in_interval},
                          {"sign", w.sign}});
    }
    return Json{{"schema", schema_version},
                {"kind", "ect_certificate"},
                {"status", std::string(to_string(c.status))},
                {"functions", c.functions},
                {"v", c.v},
                {"side_condition", c.side_condition},
                {"first_failure", c.first_failure},
                {"message", c.message},
                {"orders", orders}};
}

Json to_json(const SweepResult& s)
{
    Json realized = Json::array();
    for (const auto& [label, count] : s.realized)
        realized.push_back({{"label", label}, {"points", count}});
    Json max_bounds = Json::object();
    if (!s.points.empty()) {
        const Configuration& c = s.points.front().configuration;
        max_bounds = {{"rotary_minus", to_json(c.bound_minus)},
                      {"oscillatory", to_json(c.bound_zero)},
                      {"rotary_plus", to_json(c.bound_plus)}};
    }
    return Json{{"schema", schema_version},
                {"kind", "configuration_sweep"},
                {"preset", s.preset},
                {"structure", s.structure},
                {"points", s.points.size()},
                {"realized", realized},
                {"bounds_at_first_point", max_bounds}};
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

}  // namespace pendmel
