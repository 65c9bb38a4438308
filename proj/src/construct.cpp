#include "affpow/construct.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "affpow/rng.hpp"

namespace affpow {

bool DependenceCertificate::verify() const {
    if (coefficients.size() != family.size()) return false;
    Poly acc;
    for (std::size_t i = 0; i < family.size(); ++i)
        acc += Poly::constant(coefficients[i]) * family[i].expand();
    return acc == target;
}

namespace {

Scalar rational_pow(const Rational& mu, unsigned long i) {
    Rational r(1);
    for (unsigned long j = 0; j < i; ++j) r *= mu;
    return Scalar(r);
}

}  // namespace

DependenceCertificate unity_identity(unsigned long k, unsigned long d, const Rational& mu) {
    if (k < 1) throw std::domain_error("unity_identity needs k >= 1");
    if (mu == 0) throw std::domain_error("unity_identity needs mu != 0");
    FieldPtr field = CycloField::get(k);
    Scalar xi = Scalar::generator(field);

    std::vector<ShiftedPower> terms;
    std::vector<Scalar> coeffs;
    Scalar xi_j(Rational(1));
    for (unsigned long j = 1; j <= k; ++j) {
        xi_j = xi_j * xi;
        terms.push_back({-(xi_j * Scalar(mu)), d});  // (x + xi^j mu)^d
        coeffs.push_back(xi_j);
    }

    Poly rhs;
    for (unsigned long i = 0; i <= d; ++i) {
        if ((i + 1) % k != 0) continue;  // i = -1 mod k
        Scalar c = Scalar(Rational(static_cast<long>(k)) *
                          Rational(binomial(Int(static_cast<long>(d)), i))) *
                   rational_pow(mu, i);
        rhs += Poly::monomial(d - i, c);
    }

    Poly lhs;
    for (std::size_t j = 0; j < terms.size(); ++j)
        lhs += Poly::constant(coeffs[j]) * terms[j].expand();
    if (lhs != rhs) throw std::logic_error("root-of-unity identity failed to verify");

    return DependenceCertificate{Family(std::move(terms)), std::move(coeffs), std::move(rhs)};
}

Family unity_dependence_family(unsigned long k, unsigned long d, const Rational& mu) {
    if (k < 2) throw std::domain_error("unity_dependence_family needs k >= 2");
    if (mu == 0) throw std::domain_error("unity_dependence_family needs mu != 0");
    FieldPtr field = CycloField::get(k);
    Scalar xi = Scalar::generator(field);
    std::vector<ShiftedPower> terms;
    Scalar xi_j(Rational(1));
    for (unsigned long j = 1; j <= k; ++j) {
        xi_j = xi_j * xi;
        terms.push_back({-(xi_j * Scalar(mu)), d});
    }
    for (unsigned long i = 0; i <= d; ++i)
        if ((i + 1) % k == 0)
            terms.push_back({Scalar::in_field(field, {Rational(0)}), d - i});
    return Family(std::move(terms));
}

std::pair<Family, std::size_t> lowdim_family(unsigned long d) {
    if (d % 4 != 2) throw std::domain_error("lowdim_family needs d = 2 (mod 4)");
    std::vector<ShiftedPower> terms;
    for (unsigned long i = 1; i < d; i += 2) terms.push_back({Scalar(0), i});
    for (unsigned long i = (d + 2) / 2; i <= d; ++i) {
        if (i % 2 != 0) continue;
        terms.push_back({Scalar(-1), i});  // (x+1)^i
        terms.push_back({Scalar(1), i});   // (x-1)^i
    }
    return {Family(std::move(terms)), (3 * d + 2) / 4};
}

bool pairing_identity_check(unsigned long d, unsigned long i) {
    if (i % 2 != 0 || i < (d + 2) / 2 || i > d)
        throw std::domain_error("need i even with (d+2)/2 <= i <= d");
    Poly lhs = expand_shifted_power(Scalar(-1), i) - expand_shifted_power(Scalar(1), i);
    Poly rhs;
    for (unsigned long j = 1; j < i; j += 2)
        rhs += Poly::monomial(j, Scalar(Rational(2 * binomial(Int(static_cast<long>(i)), j))));
    return lhs == rhs;
}

namespace {

Scalar small_cyclo_shift(const FieldPtr& field, DeterministicRng& rng) {
    // c0 + c1 xi with c0, c1 in {-2..2}
    std::vector<Rational> c(2, Rational(0));
    c[0] = Rational(static_cast<long>(rng.below(5)) - 2);
    if (field->degree() > 1) c[1] = Rational(static_cast<long>(rng.below(5)) - 2);
    return Scalar::in_field(field, std::move(c));
}

std::optional<DependenceCertificate> dependence_certificate(const Family& f) {
    auto kernels = dependence_coefficients(f);
    if (kernels.empty()) return std::nullopt;
    return DependenceCertificate{f, kernels.front(), Poly()};
}

}  // namespace

ProbeReport conjecture_probe(ProbeKind kind, const ProbeParams& params) {
    ProbeReport rep;
    FieldPtr field = CycloField::get(params.conductor);
    std::ostringstream desc;
    unsigned long floor_e = params.min_exponent
                                ? params.min_exponent
                                : static_cast<unsigned long>(
                                      std::max<long>(1, 2 * static_cast<long>(params.s) - 4));
    if (kind == ProbeKind::BigExp) {
        desc << "bigexp probe: s=" << params.s << ", shifts c0+c1*xi_" << params.conductor
             << " with c in {-2..2}, exponents in [" << floor_e << ","
             << floor_e + params.exponent_span << "], samples=" << params.samples
             << ", seed=" << params.seed;
        for (std::size_t trial = 0; trial < params.samples; ++trial) {
            DeterministicRng rng(params.seed, trial);
            std::vector<ShiftedPower> terms;
            for (std::size_t i = 0; i < params.s; ++i)
                terms.push_back({small_cyclo_shift(field, rng),
                                 floor_e + rng.below(params.exponent_span + 1)});
            bool distinct = true;
            for (std::size_t i = 0; i < terms.size() && distinct; ++i)
                for (std::size_t j = i + 1; j < terms.size(); ++j)
                    if (terms[i] == terms[j]) {
                        distinct = false;
                        break;
                    }
            if (!distinct) continue;
            Family f(std::move(terms));
            ++rep.families_checked;
            if (auto cert = dependence_certificate(f)) rep.counterexamples.push_back(*cert);
        }
    } else {
        desc << "gmk probe: s=" << params.s << ", d=" << params.d << ", shifts c0+c1*xi_"
             << params.conductor << " with c in {-2..2}, samples=" << params.samples
             << ", seed=" << params.seed;
        for (std::size_t trial = 0; trial < params.samples; ++trial) {
            DeterministicRng rng(params.seed, trial);
            std::vector<ShiftedPower> terms;
            for (std::size_t i = 0; i < params.s; ++i)
                terms.push_back({small_cyclo_shift(field, rng), 1 + rng.below(params.d)});
            bool distinct = true;
            for (std::size_t i = 0; i < terms.size() && distinct; ++i)
                for (std::size_t j = i + 1; j < terms.size(); ++j)
                    if (terms[i] == terms[j]) {
                        distinct = false;
                        break;
                    }
            if (!distinct) continue;
            Family f(terms);
            if (!is_independent(f)) continue;
            terms.push_back({Scalar::in_field(field, {Rational(-1)}), params.d + 1});
            terms.push_back({Scalar::in_field(field, {Rational(0)}), params.d + 1});
            Family augmented(std::move(terms));
            ++rep.families_checked;
            if (auto cert = dependence_certificate(augmented))
                rep.counterexamples.push_back(*cert);
        }
    }
    rep.description = desc.str();
    return rep;
}

}  // namespace affpow
