#include "affpow/poly.hpp"

namespace affpow {

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::monomial(unsigned long degree, Scalar c) {
    std::vector<Scalar> v(degree + 1, Scalar(0));
    v[degree] = std::move(c);
    return Poly(std::move(v));
}

Scalar Poly::coeff(unsigned long i) const {
    if (i >= coeffs_.size()) return Scalar(0);
    return coeffs_[i];
}

const Scalar& Poly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Scalar Poly::eval(const Scalar& point) const {
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * point + *it;
    return acc;
}

Poly Poly::derivative(unsigned long order) const {
    std::vector<Scalar> cur = coeffs_;
    for (unsigned long k = 0; k < order; ++k) {
        if (cur.empty()) break;
        std::vector<Scalar> next;
        next.reserve(cur.size() > 0 ? cur.size() - 1 : 0);
        for (std::size_t i = 1; i < cur.size(); ++i)
            next.push_back(Scalar(static_cast<long>(i)) * cur[i]);
        cur = std::move(next);
    }
    return Poly(std::move(cur));
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Scalar> r = a.coeffs_;
    if (b.coeffs_.size() > r.size()) r.resize(b.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
    return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Scalar> r(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(r));
}

Poly operator*(const Scalar& c, const Poly& p) {
    std::vector<Scalar> r = p.coeffs_;
    for (auto& x : r) x = c * x;
    return Poly(std::move(r));
}

std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    std::vector<Scalar> rem = num.coeffs();
    const auto& d = den.coeffs();
    Scalar lead_inv = den.leading().inverse();
    std::vector<Scalar> quot;
    if (rem.size() >= d.size()) quot.assign(rem.size() - d.size() + 1, Scalar(0));
    while (rem.size() >= d.size()) {
        Scalar c = rem.back() * lead_inv;
        std::size_t shift = rem.size() - d.size();
        quot[shift] = c;
        for (std::size_t i = 0; i < d.size(); ++i) rem[shift + i] -= c * d[i];
        while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
        if (rem.empty()) break;
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_divide(const Poly& num, const Poly& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw InexactDivisionError("inexact polynomial division");
    return q;
}

bool divides(const Poly& divisor, const Poly& multiple) {
    if (divisor.is_zero()) return multiple.is_zero();
    return divmod(multiple, divisor).second.is_zero();
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Poly r2 = divmod(r0, r1).second;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    if (r0.is_zero()) return r0;
    return r0.leading().inverse() * r0;
}

Poly expand_shifted_power(const Scalar& a, unsigned long e) {
    // (x - a)^e = sum_i binom(e, i) (-a)^{e-i} x^i
    std::vector<Scalar> c(e + 1, Scalar(0));
    Scalar neg_a = -a;
    Scalar pow(1);  // (-a)^{e-i}, built from the top down
    for (unsigned long i = e + 1; i-- > 0;) {
        c[i] = Scalar(Rational(binomial(Int(static_cast<long>(e)), i))) * pow;
        pow = pow * neg_a;
    }
    return Poly(std::move(c));
}

Poly cyclotomic_polynomial(unsigned long k) {
    auto rc = cyclotomic_coeffs(k);
    std::vector<Scalar> c;
    c.reserve(rc.size());
    for (auto& q : rc) c.emplace_back(std::move(q));
    return Poly(std::move(c));
}

}  // namespace affpow
