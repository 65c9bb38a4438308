#ifndef AFFPOW_POLY_HPP
#define AFFPOW_POLY_HPP

#include <initializer_list>
#include <utility>
#include <vector>

#include "affpow/cyclo.hpp"

namespace affpow {

struct InexactDivisionError : std::domain_error {
    using std::domain_error::domain_error;
};

// Dense univariate polynomial; coefficient index = degree, no trailing
// zeros. The zero polynomial has an empty coefficient list and degree
// kMinusInfinity.
class Poly {
public:
    static constexpr long kMinusInfinity = -1;

    Poly() = default;
    explicit Poly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    Poly(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { normalize(); }

    static Poly constant(Scalar c) { return Poly({std::move(c)}); }
    static Poly monomial(unsigned long degree, Scalar c = Scalar(1));

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    // Coefficient of x^i, zero beyond the degree.
    Scalar coeff(unsigned long i) const;
    const Scalar& leading() const;

    Scalar eval(const Scalar& point) const;  // Horner
    Poly derivative(unsigned long order = 1) const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Scalar& c, const Poly& p);
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }

private:
    void normalize();
    std::vector<Scalar> coeffs_;
};

// Quotient and remainder over the coefficient field; divisor nonzero.
std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);

// Throws InexactDivisionError when the remainder is nonzero.
Poly exact_divide(const Poly& num, const Poly& den);

// Monic gcd over the coefficient field; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

// Dense expansion of (x - a)^e via binomial coefficients.
Poly expand_shifted_power(const Scalar& a, unsigned long e);

// Phi_k over Q as a Poly.
Poly cyclotomic_polynomial(unsigned long k);

bool divides(const Poly& divisor, const Poly& multiple);

}  // namespace affpow

#endif
