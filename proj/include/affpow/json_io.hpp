#ifndef AFFPOW_JSON_IO_HPP
#define AFFPOW_JSON_IO_HPP

#include <optional>

#include <json.hpp>

#include "affpow/construct.hpp"
#include "affpow/polya.hpp"
#include "affpow/sde.hpp"
#include "affpow/waring.hpp"

namespace affpow {

using Json = nlohmann::json;

struct JsonFormatError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Rational: "p/q" string, or a bare integer when it fits. Cyclotomic:
// {"k": conductor, "coeffs": [rational strings]} meaning sum coeffs[j] xi^j.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const FieldPtr& field = nullptr);

Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j, const FieldPtr& field = nullptr);

// {"field": "rational" | {"cyclotomic": k}, "terms": [{"shift":, "exponent":}]}
Json family_to_json(const Family& f);
Family family_from_json(const Json& j);

// {"t":, "k":, "l":, "coefficients": [[scalar, ...] low-to-high per P_i]}
Json sde_to_json(const Sde& e);
Sde sde_from_json(const Json& j, const FieldPtr& field = nullptr);

Json certificate_to_json(const DependenceCertificate& c);
DependenceCertificate certificate_from_json(const Json& j);

Json waring_report_to_json(const WaringCertificate& c, std::optional<double> residual);
Json monte_carlo_report_to_json(const MonteCarloReport& r);
Json sweep_report_to_json(const SweepReport& r);
Json probe_report_to_json(const ProbeReport& r);

}  // namespace affpow

#endif
