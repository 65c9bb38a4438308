#include "affpow/cyclo.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <utility>

namespace affpow {

namespace {

// Dense polynomial helpers over Q, coefficients low-to-high, used only for
// the modulus arithmetic inside the field. Public polynomial arithmetic
// lives in poly.hpp.
using RVec = std::vector<Rational>;

void trim(RVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

RVec mul(const RVec& a, const RVec& b) {
    if (a.empty() || b.empty()) return {};
    RVec r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

// Division with remainder by a monic divisor.
std::pair<RVec, RVec> divrem(RVec num, const RVec& den) {
    RVec quot;
    if (num.size() >= den.size()) quot.assign(num.size() - den.size() + 1, Rational(0));
    while (num.size() >= den.size()) {
        Rational c = num.back();
        std::size_t shift = num.size() - den.size();
        quot[shift] = c;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        num.pop_back();
        trim(num);
        if (num.empty()) break;
    }
    trim(quot);
    return {std::move(quot), std::move(num)};
}

RVec reduce(RVec v, const RVec& modulus) {
    trim(v);
    if (v.size() >= modulus.size()) v = divrem(std::move(v), modulus).second;
    return v;
}

// Extended Euclid over Q[x]: returns u with u*a = gcd (mod m), gcd constant
// when a is invertible modulo m.
RVec inverse_mod(const RVec& a, const RVec& m) {
    RVec r0 = m, r1 = a;
    RVec u0 = {}, u1 = {Rational(1)};
    while (!r1.empty()) {
        // make r1 monic-divisible step: general divrem needs monic divisor,
        // so scale manually
        Rational lead = r1.back();
        RVec r1m = r1;
        for (auto& c : r1m) c /= lead;
        auto [q, rem] = divrem(r0, r1m);
        for (auto& c : q) c /= lead;
        // r0 - q*r1 = rem
        RVec u2 = u0;
        RVec qu = mul(q, u1);
        u2.resize(std::max(u2.size(), qu.size()), Rational(0));
        for (std::size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
        trim(u2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.size() != 1) throw DivisionByZeroError("element not invertible modulo Phi_k");
    for (auto& c : u0) c /= r0[0];
    return u0;
}

}  // namespace

std::vector<Rational> cyclotomic_coeffs(unsigned long k) {
    if (k == 0) throw std::domain_error("cyclotomic polynomial needs k >= 1");
    static std::map<unsigned long, RVec> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(k); it != cache.end()) return it->second;

    std::function<RVec(unsigned long)> phi = [&](unsigned long n) -> RVec {
        if (auto it = cache.find(n); it != cache.end()) return it->second;
        RVec num(n + 1, Rational(0));  // x^n - 1
        num[0] = -1;
        num[n] = 1;
        for (unsigned long d = 1; d < n; ++d) {
            if (n % d != 0) continue;
            auto [q, r] = divrem(std::move(num), phi(d));
            if (!r.empty()) throw std::logic_error("cyclotomic division not exact");
            num = std::move(q);
        }
        cache[n] = num;
        return num;
    };
    return phi(k);
}

FieldPtr CycloField::get(unsigned long conductor) {
    static std::map<unsigned long, FieldPtr> cache;
    static std::mutex mu;
    auto modulus = cyclotomic_coeffs(conductor);
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[conductor];
    if (!slot) slot = FieldPtr(new CycloField(conductor, std::move(modulus)));
    return slot;
}

Scalar Scalar::in_field(const FieldPtr& field, std::vector<Rational> coeffs) {
    if (!field) throw std::invalid_argument("null field");
    Scalar s;
    s.field_ = field;
    s.coeffs_ = reduce(std::move(coeffs), field->modulus());
    s.coeffs_.resize(field->degree(), Rational(0));
    return s;
}

Scalar Scalar::generator(const FieldPtr& field) {
    std::vector<Rational> c(2, Rational(0));
    c[1] = 1;
    return in_field(field, std::move(c));
}

const Rational& Scalar::rat() const {
    if (!is_rational()) throw FieldMismatchError("scalar is not rational");
    return coeffs_[0];
}

bool Scalar::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

namespace {

// Lifts both operands into a common field; throws on conductor mismatch.
FieldPtr common_field(const Scalar& a, const Scalar& b) {
    if (a.field() && b.field()) {
        if (a.field()->conductor() != b.field()->conductor())
            throw FieldMismatchError("scalars from different cyclotomic fields");
        return a.field();
    }
    return a.field() ? a.field() : b.field();
}

std::vector<Rational> embedded(const Scalar& s, const FieldPtr& field) {
    if (s.field()) return s.coeffs();
    std::vector<Rational> c(field->degree(), Rational(0));
    c[0] = s.rat();
    return c;
}

}  // namespace

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    FieldPtr f = common_field(a, b);
    if (!f) return Scalar(a.rat() + b.rat());
    auto ca = embedded(a, f);
    auto cb = embedded(b, f);
    for (std::size_t i = 0; i < ca.size(); ++i) ca[i] += cb[i];
    return Scalar::in_field(f, std::move(ca));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    FieldPtr f = common_field(a, b);
    if (!f) return Scalar(a.rat() * b.rat());
    RVec prod = mul(embedded(a, f), embedded(b, f));
    return Scalar::in_field(f, std::move(prod));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero");
    if (is_rational()) return Scalar(Rational(1) / rat());
    RVec rep = coeffs_;
    trim(rep);
    return in_field(field_, inverse_mod(rep, field_->modulus()));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
    FieldPtr f = common_field(a, b);
    if (!f) return a.rat() == b.rat();
    return embedded(a, f) == embedded(b, f);
}

std::size_t Scalar::bit_size() const {
    std::size_t total = 0;
    for (const auto& c : coeffs_) total += affpow::bit_size(c);
    return total;
}

}  // namespace affpow
