#ifndef AFFPOW_CYCLO_HPP
#define AFFPOW_CYCLO_HPP

#include <memory>
#include <stdexcept>
#include <vector>

#include "affpow/rational.hpp"

namespace affpow {

struct FieldMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DivisionByZeroError : std::domain_error {
    using std::domain_error::domain_error;
};

// The cyclotomic field Q(xi_k), elements represented modulo Phi_k.
// Instances are interned per conductor; compare fields by conductor.
class CycloField {
public:
    static std::shared_ptr<const CycloField> get(unsigned long conductor);

    unsigned long conductor() const { return conductor_; }
    unsigned long degree() const { return static_cast<unsigned long>(modulus_.size()) - 1; }
    // Phi_k, monic, coefficients low-to-high.
    const std::vector<Rational>& modulus() const { return modulus_; }

private:
    CycloField(unsigned long k, std::vector<Rational> modulus)
        : conductor_(k), modulus_(std::move(modulus)) {}
    unsigned long conductor_;
    std::vector<Rational> modulus_;
};

using FieldPtr = std::shared_ptr<const CycloField>;

// Coefficients of Phi_k over Q, low-to-high, computed by exact division of
// x^k - 1 by the product of the lower-order cyclotomic polynomials.
std::vector<Rational> cyclotomic_coeffs(unsigned long k);

// Exact field element: a rational, or an element of Q(xi_k) as a coefficient
// vector of length phi(k) on the basis 1, xi, ..., xi^{phi(k)-1}.
// Rationals embed canonically into any cyclotomic field; arithmetic between
// two cyclotomic elements of different conductors throws FieldMismatchError.
class Scalar {
public:
    Scalar() : coeffs_(1, Rational(0)) {}
    Scalar(Rational q) : coeffs_{std::move(q)} {}
    Scalar(const Int& n) : coeffs_{Rational(n)} {}
    Scalar(long n) : coeffs_{Rational(n)} {}
    Scalar(int n) : coeffs_{Rational(n)} {}

    // Element sum coeffs[j] * xi^j; coeffs may be any length <= conductor,
    // reduced modulo Phi_k on construction.
    static Scalar in_field(const FieldPtr& field, std::vector<Rational> coeffs);
    // The canonical generator xi of Q(xi_k).
    static Scalar generator(const FieldPtr& field);

    bool is_rational() const { return field_ == nullptr; }
    const Rational& rat() const;
    // Length phi(k) for cyclotomic elements, 1 for rationals.
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const FieldPtr& field() const { return field_; }

    bool is_zero() const;

    Scalar operator-() const;
    Scalar inverse() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    std::size_t bit_size() const;

private:
    FieldPtr field_;  // nullptr: plain rational
    std::vector<Rational> coeffs_;
};

}  // namespace affpow

#endif
