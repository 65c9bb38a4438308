#include "affpow/json_io.hpp"

namespace affpow {

namespace {

Json rational_to_json(const Rational& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p())
        return Json(q.get_num().get_si());
    return Json(format_rational(q));
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw JsonFormatError("expected a rational (integer or \"p/q\" string)");
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
    if (s.is_rational()) return rational_to_json(s.rat());
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(format_rational(c));
    return Json{{"k", s.field()->conductor()}, {"coeffs", coeffs}};
}

Scalar scalar_from_json(const Json& j, const FieldPtr& field) {
    if (j.is_object()) {
        if (!j.contains("k") || !j.contains("coeffs"))
            throw JsonFormatError("cyclotomic scalar needs \"k\" and \"coeffs\"");
        FieldPtr f = CycloField::get(j.at("k").get<unsigned long>());
        if (field && field->conductor() != f->conductor())
            throw JsonFormatError("scalar conductor does not match the family field");
        std::vector<Rational> coeffs;
        for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
        return Scalar::in_field(f, std::move(coeffs));
    }
    Rational q = rational_from_json(j);
    if (field) return Scalar::in_field(field, {std::move(q)});
    return Scalar(std::move(q));
}

Json poly_to_json(const Poly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(scalar_to_json(c));
    return coeffs;
}

Poly poly_from_json(const Json& j, const FieldPtr& field) {
    if (!j.is_array()) throw JsonFormatError("polynomial must be a coefficient array");
    std::vector<Scalar> coeffs;
    for (const auto& c : j) coeffs.push_back(scalar_from_json(c, field));
    return Poly(std::move(coeffs));
}

namespace {

FieldPtr family_field(const Json& j) {
    if (!j.contains("field")) return nullptr;
    const Json& f = j.at("field");
    if (f.is_string()) {
        if (f.get<std::string>() != "rational")
            throw JsonFormatError("unknown field tag: " + f.get<std::string>());
        return nullptr;
    }
    if (f.is_object() && f.contains("cyclotomic"))
        return CycloField::get(f.at("cyclotomic").get<unsigned long>());
    throw JsonFormatError("field must be \"rational\" or {\"cyclotomic\": k}");
}

Json field_tag(const Family& f) {
    for (const auto& t : f.terms())
        if (!t.shift.is_rational()) return Json{{"cyclotomic", t.shift.field()->conductor()}};
    return Json("rational");
}

}  // namespace

Json family_to_json(const Family& f) {
    Json terms = Json::array();
    for (const auto& t : f.terms())
        terms.push_back(Json{{"shift", scalar_to_json(t.shift)}, {"exponent", t.exponent}});
    return Json{{"field", field_tag(f)}, {"terms", terms}};
}

Family family_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("terms"))
        throw JsonFormatError("family needs a \"terms\" array");
    FieldPtr field = family_field(j);
    std::vector<ShiftedPower> terms;
    for (const auto& t : j.at("terms")) {
        if (!t.contains("shift") || !t.contains("exponent"))
            throw JsonFormatError("family term needs \"shift\" and \"exponent\"");
        terms.push_back(
            {scalar_from_json(t.at("shift"), field), t.at("exponent").get<unsigned long>()});
    }
    return Family(std::move(terms));
}

Json sde_to_json(const Sde& e) {
    Json coeffs = Json::array();
    for (const auto& p : e.coefficients) coeffs.push_back(poly_to_json(p));
    return Json{{"t", e.params.t}, {"k", e.order()}, {"l", e.params.l}, {"coefficients", coeffs}};
}

Sde sde_from_json(const Json& j, const FieldPtr& field) {
    for (const char* key : {"t", "k", "l", "coefficients"})
        if (!j.contains(key)) throw JsonFormatError(std::string("sde needs \"") + key + "\"");
    Sde e;
    e.params.t = j.at("t").get<unsigned long>();
    e.params.k = j.at("k").get<unsigned long>();
    e.params.l = j.at("l").get<unsigned long>();
    for (const auto& p : j.at("coefficients")) e.coefficients.push_back(poly_from_json(p, field));
    if (e.coefficients.empty() || e.coefficients.back().is_zero())
        throw JsonFormatError("sde requires a nonzero leading coefficient");
    if (e.order() != e.params.k) throw JsonFormatError("sde order does not match \"k\"");
    return e;
}

Json certificate_to_json(const DependenceCertificate& c) {
    Json coeffs = Json::array();
    for (const auto& a : c.coefficients) coeffs.push_back(scalar_to_json(a));
    Json j = family_to_json(c.family);
    j["coefficients"] = coeffs;
    j["target"] = poly_to_json(c.target);
    return j;
}

DependenceCertificate certificate_from_json(const Json& j) {
    Family fam = family_from_json(j);
    if (!j.contains("coefficients") || !j.contains("target"))
        throw JsonFormatError("certificate needs \"coefficients\" and \"target\"");
    FieldPtr field;
    for (const auto& t : fam.terms())
        if (!t.shift.is_rational()) field = t.shift.field();
    std::vector<Scalar> coeffs;
    for (const auto& c : j.at("coefficients")) coeffs.push_back(scalar_from_json(c, field));
    DependenceCertificate cert{std::move(fam), std::move(coeffs),
                               poly_from_json(j.at("target"), field)};
    if (!cert.verify()) throw JsonFormatError("certificate failed exact re-verification");
    return cert;
}

Json waring_report_to_json(const WaringCertificate& c, std::optional<double> residual) {
    Json j{{"rank", c.rank},
           {"certificate_poly", poly_to_json(c.kernel_poly)},
           {"squarefree", c.squarefree},
           {"real_roots_numeric", c.real_roots_numeric},
           {"root_at_infinity", c.root_at_infinity}};
    if (residual) j["residual"] = *residual;
    return j;
}

Json monte_carlo_report_to_json(const MonteCarloReport& r) {
    return Json{{"s", r.s},         {"set_size", r.set_size}, {"trials", r.trials},
                {"seed", r.seed},   {"frequency", r.frequency}, {"bound", r.bound},
                {"sigma", r.sigma}, {"pass", r.pass}};
}

Json sweep_report_to_json(const SweepReport& r) {
    return Json{{"s", r.s},
                {"set_size", r.set_size},
                {"trials", r.trials},
                {"seed", r.seed},
                {"sequences", r.sequences},
                {"frequency", r.frequency},
                {"bound", r.bound},
                {"vacuous", r.vacuous},
                {"pass", r.pass}};
}

Json probe_report_to_json(const ProbeReport& r) {
    Json counterexamples = Json::array();
    for (const auto& c : r.counterexamples) counterexamples.push_back(certificate_to_json(c));
    return Json{{"description", r.description},
                {"families_checked", r.families_checked},
                {"counterexamples", counterexamples}};
}

}  // namespace affpow
