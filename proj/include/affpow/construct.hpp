#ifndef AFFPOW_CONSTRUCT_HPP
#define AFFPOW_CONSTRUCT_HPP

#include <cstdint>
#include <string>

#include "affpow/family.hpp"

namespace affpow {

// A family together with coefficients whose combination hits a target
// polynomial; verified exactly at construction.
struct DependenceCertificate {
    Family family;
    std::vector<Scalar> coefficients;
    Poly target;

    // sum coefficients_i * expand(term_i) == target
    bool verify() const;
};

// The root-of-unity identity
//   sum_{j=1..k} xi^j (x + xi^j mu)^d
//     = sum_{i = -1 mod k, 0<=i<=d} k binom(d,i) mu^i x^{d-i}
// over Q(xi_k); throws when the two sides differ.
DependenceCertificate unity_identity(unsigned long k, unsigned long d, const Rational& mu);

// {(x + xi^j mu)^d : j=1..k} plus the monomials x^{d-i}, i = -1 mod k; the
// family is dependent while its exponent profile passes the real-case
// independence test.
Family unity_dependence_family(unsigned long k, unsigned long d, const Rational& mu);

// Odd monomials below d plus high even powers of (x+1), (x-1); d = 2 mod 4.
// Dimension is (3d+2)/4, returned as the expected value.
std::pair<Family, std::size_t> lowdim_family(unsigned long d);

// (x+1)^i - (x-1)^i = sum_{j<i odd} 2 binom(i,j) x^j, verified exactly.
bool pairing_identity_check(unsigned long d, unsigned long i);

enum class ProbeKind { BigExp, Gmk };

struct ProbeParams {
    std::size_t s = 3;
    unsigned long conductor = 4;     // cyclotomic shift field for the search
    unsigned long min_exponent = 0;  // big-exp regime floor; 0 = derive 2s-4
    unsigned long exponent_span = 2; // exponents in [floor, floor+span]
    unsigned long d = 4;             // gmk degree cap
    std::uint64_t seed = 1;
    std::size_t samples = 200;
};

struct ProbeReport {
    std::string description;  // search-space summary, reproducible for a seed
    std::size_t families_checked = 0;
    std::vector<DependenceCertificate> counterexamples;
    bool counterexample_found() const { return !counterexamples.empty(); }
};

// Seeded search for counterexamples to the independence conjectures; reports
// evidence, never proof.
ProbeReport conjecture_probe(ProbeKind kind, const ProbeParams& params);

}  // namespace affpow

#endif
