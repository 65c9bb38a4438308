#ifndef AFFPOW_SDE_HPP
#define AFFPOW_SDE_HPP

#include <optional>

#include "affpow/family.hpp"

namespace affpow {

struct SdeParams {
    unsigned long t = 0;
    unsigned long k = 0;  // order bound
    unsigned long l = 0;  // shift
};

// sum_{i=0}^{k} P_i f^{(i)} = 0 with deg P_i <= i+l for i < t and <= l for
// t <= i <= k; the stored order is effective (P_k nonzero).
struct Sde {
    SdeParams params;
    std::vector<Poly> coefficients;  // P_0..P_k

    unsigned long order() const { return static_cast<unsigned long>(coefficients.size()) - 1; }
    const Poly& coefficient(unsigned long i) const { return coefficients.at(i); }
};

// s(l+k+1) < (k+1)(l+1) + t(t-1)/2, exact over integers.
bool feasible(std::size_t s, const SdeParams& p);

// The linear system of the lambda_{i,j} unknowns: columns ordered i
// ascending then j ascending; rows grouped by family index, monomial degree
// ascending.
Matrix build_system(const Family& f, const SdeParams& p);

// First canonical kernel vector assembled into an equation; trailing zero
// coefficients trimmed so the effective order k' <= k has P_{k'} != 0.
// nullopt when the kernel is trivial.
std::optional<Sde> find_sde(const Family& f, const SdeParams& p);

// t = s, k = l = ceil((1 + sqrt(2)/2) s); always feasible, so an equation
// always exists.
Sde find_small_sde(const Family& f);

// The order bound used by find_small_sde.
unsigned long small_sde_order_bound(std::size_t s);

// Exact check that sum P_i f^{(i)} is the zero polynomial.
bool verify_sde(const Sde& e, const Poly& f);

// prod (x - a_i) divides P_k (with multiplicity for repeated nodes);
// requires every exponent >= order and every term annihilated.
bool check_root_divisibility(const Sde& e, const Family& f);

// For m = 0..n-1, (x-a)^{n-m} divides P_{k-m}; exps strictly decreasing
// with n <= k and min(exps) >= k-n+1, all powers annihilated.
bool check_multiplicity_ladder(const Sde& e, const Scalar& node,
                               const std::vector<unsigned long>& exps);

// For each term i, j = max{p in I : p <= e_i} with I = {i : P_i != 0};
// requires P_0 != 0. Verifies (x - a_i) | P_j along the way.
std::vector<unsigned long> coefficient_root_cover(const Sde& e, const Family& f);

}  // namespace affpow

#endif
