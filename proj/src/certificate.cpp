#include <json.hpp>

#include <stdexcept>

#include "trigcert/verify.hpp"

namespace trigcert {

namespace {

using nlohmann::json;

json poly_to_json(const Poly& p) {
    json a = json::array();
    for (const Rational& c : p.coeffs()) a.push_back(c.str());
    return a;
}

Poly poly_from_json(const json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j) coeffs.push_back(Rational::from_string(c.get<std::string>()));
    return Poly(std::move(coeffs));
}

json interval_to_json(const Interval& iv) {
    json j;
    j["lo"] = iv.lo ? json(iv.lo->str()) : json(nullptr);
    j["hi"] = iv.hi ? json(iv.hi->str()) : json(nullptr);
    j["lo_closed"] = iv.lo_closed;
    j["hi_closed"] = iv.hi_closed;
    j["exact"] = iv.exact;
    return j;
}

Interval interval_from_json(const json& j) {
    Interval iv;
    if (!j.at("lo").is_null()) iv.lo = Rational::from_string(j.at("lo").get<std::string>());
    if (!j.at("hi").is_null()) iv.hi = Rational::from_string(j.at("hi").get<std::string>());
    iv.lo_closed = j.at("lo_closed").get<bool>();
    iv.hi_closed = j.at("hi_closed").get<bool>();
    iv.exact = j.at("exact").get<bool>();
    return iv;
}

json endpoint_to_json(const EndpointSign& e) {
    json j;
    j["infinite"] = e.infinite;
    j["inf_dir"] = e.inf_dir;
    j["point"] = e.point.str();
    j["value"] = e.value.str();
    j["sign"] = e.sign;
    return j;
}

EndpointSign endpoint_from_json(const json& j) {
    EndpointSign e;
    e.infinite = j.at("infinite").get<bool>();
    e.inf_dir = j.at("inf_dir").get<int>();
    e.point = Rational::from_string(j.at("point").get<std::string>());
    e.value = Rational::from_string(j.at("value").get<std::string>());
    e.sign = j.at("sign").get<int>();
    return e;
}

json record_to_json(const SignCheckRecord& r) {
    json j;
    j["domain"] = r.domain;
    j["negated"] = r.negated;
    j["poly"] = poly_to_json(r.poly);
    j["interval"] = interval_to_json(r.iv);
    j["poly_is_zero"] = r.poly_is_zero;
    j["sf_constant"] = r.sf_constant.str();
    json factors = json::array();
    for (const auto& f : r.sf_factors)
        factors.push_back({{"factor", poly_to_json(f.factor)}, {"multiplicity", f.multiplicity}});
    j["sf_factors"] = factors;
    j["odd"] = poly_to_json(r.odd);
    json chain = json::array();
    for (const Poly& p : r.chain) chain.push_back(poly_to_json(p));
    j["chain"] = chain;
    j["var_lo"] = r.var_lo;
    j["var_hi"] = r.var_hi;
    j["interior_roots"] = r.interior_roots;
    j["lo_sign"] = endpoint_to_json(r.lo_sign);
    j["hi_sign"] = endpoint_to_json(r.hi_sign);
    j["sample"] = r.sample.str();
    j["sample_value"] = r.sample_value.str();
    j["passed"] = r.passed;
    return j;
}

SignCheckRecord record_from_json(const json& j) {
    SignCheckRecord r;
    r.domain = j.at("domain").get<std::string>();
    r.negated = j.at("negated").get<bool>();
    r.poly = poly_from_json(j.at("poly"));
    r.iv = interval_from_json(j.at("interval"));
    r.poly_is_zero = j.at("poly_is_zero").get<bool>();
    r.sf_constant = Rational::from_string(j.at("sf_constant").get<std::string>());
    for (const auto& f : j.at("sf_factors"))
        r.sf_factors.push_back(
            {poly_from_json(f.at("factor")), f.at("multiplicity").get<int>()});
    r.odd = poly_from_json(j.at("odd"));
    for (const auto& p : j.at("chain")) r.chain.push_back(poly_from_json(p));
    r.var_lo = j.at("var_lo").get<int>();
    r.var_hi = j.at("var_hi").get<int>();
    r.interior_roots = j.at("interior_roots").get<int>();
    r.lo_sign = endpoint_from_json(j.at("lo_sign"));
    r.hi_sign = endpoint_from_json(j.at("hi_sign"));
    r.sample = Rational::from_string(j.at("sample").get<std::string>());
    r.sample_value = Rational::from_string(j.at("sample_value").get<std::string>());
    r.passed = j.at("passed").get<bool>();
    return r;
}

Outcome outcome_from_name(const std::string& name) {
    if (name == "Nonnegative") return Outcome::Nonnegative;
    if (name == "Violated") return Outcome::Violated;
    if (name == "InconclusiveBoundary") return Outcome::InconclusiveBoundary;
    throw std::invalid_argument("unknown outcome '" + name + "'");
}

}  // namespace

std::string certificate_to_json(const Certificate& c) {
    json j;
    j["schema"] = c.schema;
    j["pipeline"] = c.pipeline;
    j["expression"] = c.expression;
    j["interval"] = c.interval;
    j["reduced"] = poly_to_json(c.reduced);
    j["reduced_var"] = c.reduced_var;
    j["denom_scalar"] = c.denom_scalar.get_str();
    j["denom_power"] = c.denom_power;
    j["has_pi_value"] = c.has_pi_value;
    j["pi_value"] = c.pi_value.str();
    json checks = json::array();
    for (const auto& r : c.checks) checks.push_back(record_to_json(r));
    j["checks"] = checks;
    j["outcome"] = outcome_name(c.outcome);
    if (c.witness) {
        j["witness"] = {{"t", c.witness->t.str()},
                        {"x_approx", c.witness->x_approx},
                        {"value", c.witness->value.str()}};
    } else {
        j["witness"] = nullptr;
    }
    return j.dump();
}

Certificate certificate_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("certificate is not valid JSON: ") + e.what());
    }
    try {
        Certificate c;
        c.schema = j.at("schema").get<std::string>();
        c.pipeline = j.at("pipeline").get<std::string>();
        c.expression = j.at("expression").get<std::string>();
        c.interval = j.at("interval").get<std::string>();
        c.reduced = poly_from_json(j.at("reduced"));
        c.reduced_var = j.at("reduced_var").get<std::string>();
        c.denom_scalar = mpz_class(j.at("denom_scalar").get<std::string>(), 10);
        c.denom_power = j.at("denom_power").get<int>();
        c.has_pi_value = j.at("has_pi_value").get<bool>();
        c.pi_value = Rational::from_string(j.at("pi_value").get<std::string>());
        for (const auto& r : j.at("checks")) c.checks.push_back(record_from_json(r));
        c.outcome = outcome_from_name(j.at("outcome").get<std::string>());
        if (!j.at("witness").is_null()) {
            const auto& w = j.at("witness");
            c.witness = Witness{Rational::from_string(w.at("t").get<std::string>()),
                                w.at("x_approx").get<std::string>(),
                                Rational::from_string(w.at("value").get<std::string>())};
        }
        return c;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
    }
}

}  // namespace trigcert
