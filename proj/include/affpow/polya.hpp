#ifndef AFFPOW_POLYA_HPP
#define AFFPOW_POLYA_HPP

#include <cstdint>

#include "affpow/family.hpp"

namespace affpow {

// Multiplicity tuple (m_1, ..., m_d), m_i = |{j : e_j = i-1}|, under the
// lattice-path condition sum_{i<=j} m_i <= j.
struct MultTuple {
    std::vector<unsigned long> m;

    std::size_t total() const;
    // The non-increasing exponent sequence this tuple encodes.
    PolyaSequence to_sequence() const;
};

struct ExperimentConfig {
    std::size_t s = 0;
    std::size_t set_size = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    unsigned long conductor = 0;  // 0: rational shifts; k: draw from Q(xi_k)
};

// binom(s+d, s) (d+1-s) / (d+1), the ballot number |P_{s,d}|.
Int count_polya(std::size_t s, unsigned long d);

// Every lattice-path-valid tuple, lexicographic on (m_1, ..., m_d).
std::vector<MultTuple> enumerate_polya(std::size_t s, unsigned long d);

// Drop the smallest exponent and decrement the rest; stays Polya.
PolyaSequence project_sequence(const PolyaSequence& e);

// Replace exponents above floor(s^2/2)-2 by distinct values from
// {floor(s^2/2)-s, ..., floor(s^2/2)-2}; stays Polya.
PolyaSequence clamp_sequence(const PolyaSequence& e, std::size_t s);

// max(e_i) < s^2/2 - 1 for a dependent family, decided exactly.
bool dependent_max_exponent_bound(const Family& f);

// binom(s + floor(s^2/2) - 1, s) (s-1)(s-2).
Int f_bound(std::size_t s);

struct MonteCarloReport {
    std::size_t s = 0, set_size = 0, trials = 0;
    std::uint64_t seed = 0;
    double frequency = 0;
    double bound = 0;   // 1 - s(s-1)/|S|
    double sigma = 0;   // binomial standard error at the bound probability
    bool pass = false;  // frequency >= bound - 3 sigma
};

MonteCarloReport monte_carlo_independence(const PolyaSequence& e, const ExperimentConfig& cfg);

struct SweepReport {
    std::size_t s = 0, set_size = 0, trials = 0;
    std::uint64_t seed = 0;
    std::size_t sequences = 0;  // |P'_s|
    double frequency = 0;       // empirical probability of the conjunction event
    double bound = 0;           // 1 - f(s)/|S|
    bool vacuous = false;       // f(s) >= |S|
    bool pass = false;
};

// Checks, per sampled shift tuple, independence for every sequence in P'_s.
SweepReport genericity_sweep(std::size_t s, const ExperimentConfig& cfg);

}  // namespace affpow

#endif
