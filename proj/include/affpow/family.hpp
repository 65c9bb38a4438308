#ifndef AFFPOW_FAMILY_HPP
#define AFFPOW_FAMILY_HPP

#include <vector>

#include "affpow/linalg.hpp"
#include "affpow/poly.hpp"

namespace affpow {

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ShiftedPower {
    Scalar shift;
    unsigned long exponent = 0;

    Poly expand() const { return expand_shifted_power(shift, exponent); }
    friend bool operator==(const ShiftedPower& a, const ShiftedPower& b) {
        return a.exponent == b.exponent && a.shift == b.shift;
    }
};

// Ordered list of shifted powers with pairwise-distinct (shift, exponent)
// pairs.
class Family {
public:
    explicit Family(std::vector<ShiftedPower> terms);

    const std::vector<ShiftedPower>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    const ShiftedPower& operator[](std::size_t i) const { return terms_[i]; }
    unsigned long max_exponent() const;
    bool all_rational_shifts() const;
    std::vector<unsigned long> exponents() const;

    // s x (maxdeg+1) matrix; row i = dense coefficients of term i.
    Matrix coefficient_matrix() const;

private:
    std::vector<ShiftedPower> terms_;
};

// Non-increasing exponent sequence with its counting functions.
class PolyaSequence {
public:
    // Stores the sequence in non-increasing canonical order.
    explicit PolyaSequence(std::vector<unsigned long> exponents);

    std::size_t size() const { return exps_.size(); }
    const std::vector<unsigned long>& exponents() const { return exps_; }
    unsigned long max_exponent() const { return exps_.empty() ? 0 : exps_.front(); }
    // n_i = |{j : e_j < i}|
    std::size_t count_below(unsigned long i) const;
    // m_i = |{j : e_j = i-1}|, i >= 1
    std::size_t multiplicity(unsigned long i) const;

    friend bool operator==(const PolyaSequence& a, const PolyaSequence& b) {
        return a.exps_ == b.exps_;
    }

private:
    std::vector<unsigned long> exps_;
};

// Maximal interval [min, max] of consecutive exponents present at one node.
struct OddSequenceRecord {
    Scalar node;
    unsigned long min = 0;
    unsigned long max = 0;
    unsigned long parity = 0;  // (max - min + 1) mod 2
};

// n_i <= i for all i >= 1; necessary for linear independence.
bool polya_check(const PolyaSequence& e);

// n_1 <= 1 and n_j + n_{j+1} <= j+1 for j = 1..d; over the reals this
// implies independence.
bool gmk_condition(const PolyaSequence& e);

// Union of the towers {(x-a_i)^{e_i}, ..., (x-a_i)^d}; duplicate nodes are
// rejected.
Family jordan_family(unsigned long d, const std::vector<std::pair<Scalar, unsigned long>>& towers);
// sum (d+1-e_i) <= d+1
bool jordan_condition(unsigned long d,
                      const std::vector<std::pair<Scalar, unsigned long>>& towers);

std::size_t dimension(const Family& f);
bool is_independent(const Family& f);

// Determinant of the s x s derivative matrix (f_j^{(i)}); zero iff the
// family is dependent.
Poly wronskian(const Family& f);

// Basis of the left kernel of the coefficient matrix (the alpha_i of a
// dependence relation); empty iff independent.
std::vector<Vector> dependence_coefficients(const Family& f);

// Greedy left-to-right scan keeping terms that increase the rank.
Family max_independent_subfamily(const Family& f);

// All maximal per-node exponent intervals of odd length, sorted by min.
std::vector<OddSequenceRecord> odd_sequences(const Family& f);

// Polya condition holds and every odd sequence reaches max(e_i); over the
// reals this implies independence.
bool atkinson_sharma_condition(const Family& f);

// Independent subfamily of size >= floor(s/2)+1; rational shifts and the
// Polya condition required.
Family real_halfplus_witness(const Family& f);

// Independent subfamily of size >= ceil(sqrt(s)); Polya condition required.
Family sqrt_witness(const Family& f);

// The floor((s+4)/3) largest-exponent terms; rational shifts and the Polya
// condition required. Independence re-verified by rank.
Family real_top_exponent_witness(const Family& f);

struct BigExponentReport {
    std::size_t s = 0;
    unsigned long min_exponent = 0;
    bool real_rule = false;          // e_i >= max(1, 2s-4), independence over R
    bool complex_rule = false;       // e_i >= s(s-1)/2, independence over C
    bool min_exponent_ge_s = false;  // dim > (2-sqrt(2))s applies
    // Exact integer dimension lower bound implied by the strongest
    // applicable condition (s when a full-independence rule fires,
    // floor((1+a-sqrt(a^2+1))s)+1 from the min-exponent ratio otherwise,
    // 1 as a trivial fallback).
    std::size_t dim_lower_bound = 1;
};

BigExponentReport big_exponent_conditions(const Family& f);

// Largest integer T with T <= (1 + a - sqrt(a^2+1)) * p, decided by exact
// rational comparisons (radical isolated and squared, sign-checked).
long big_exponent_threshold(const Rational& alpha, unsigned long p);

}  // namespace affpow

#endif
