#include "affpow/rational.hpp"

namespace affpow {

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Int(text));
        }
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational: " + text);
    }
}

std::string format_rational(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int binomial(const Int& n, unsigned long k) {
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

Int falling_factorial(const Int& x, unsigned long i) {
    Int r = 1;
    for (unsigned long j = 0; j < i; ++j) r *= x - static_cast<long>(j);
    return r;
}

unsigned long totient(unsigned long n) {
    unsigned long result = n;
    unsigned long m = n;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::size_t bit_size(const Rational& q) {
    return mpz_sizeinbase(q.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
}

}  // namespace affpow
