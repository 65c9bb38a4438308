#include "affpow/polya.hpp"

#include <algorithm>
#include <cmath>

#include "affpow/rng.hpp"

namespace affpow {

std::size_t MultTuple::total() const {
    std::size_t s = 0;
    for (auto v : m) s += v;
    return s;
}

PolyaSequence MultTuple::to_sequence() const {
    std::vector<unsigned long> exps;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (unsigned long c = 0; c < m[i]; ++c) exps.push_back(static_cast<unsigned long>(i));
    return PolyaSequence(std::move(exps));
}

Int count_polya(std::size_t s, unsigned long d) {
    if (s < 1 || s > d) throw std::domain_error("count_polya needs 1 <= s <= d");
    Int n = binomial(Int(static_cast<long>(s + d)), s);
    return n * static_cast<long>(d + 1 - s) / static_cast<long>(d + 1);
}

std::vector<MultTuple> enumerate_polya(std::size_t s, unsigned long d) {
    if (s < 1 || s > d) throw std::domain_error("enumerate_polya needs 1 <= s <= d");
    std::vector<MultTuple> out;
    std::vector<unsigned long> m(d, 0);
    // lexicographic depth-first fill of m_1..m_d
    auto rec = [&](auto&& self, std::size_t pos, std::size_t used) -> void {
        if (pos == d) {
            if (used == s) out.push_back({m});
            return;
        }
        unsigned long cap = static_cast<unsigned long>(pos + 1 - used);  // prefix condition
        cap = std::min<unsigned long>(cap, static_cast<unsigned long>(s - used));
        for (unsigned long v = 0; v <= cap; ++v) {
            m[pos] = v;
            self(self, pos + 1, used + v);
        }
        m[pos] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

PolyaSequence project_sequence(const PolyaSequence& e) {
    if (e.size() < 2) throw PreconditionError("project_sequence needs s+1 >= 2 exponents");
    if (!polya_check(e)) throw PreconditionError("project_sequence needs the Polya condition");
    const auto& exps = e.exponents();  // non-increasing; last is the smallest
    std::vector<unsigned long> out;
    out.reserve(exps.size() - 1);
    for (std::size_t i = 0; i + 1 < exps.size(); ++i) {
        if (exps[i] == 0) throw PreconditionError("cannot decrement exponent 0");
        out.push_back(exps[i] - 1);
    }
    return PolyaSequence(std::move(out));
}

PolyaSequence clamp_sequence(const PolyaSequence& e, std::size_t s) {
    if (s < 2 || e.size() != s) throw PreconditionError("clamp_sequence needs s = |e| >= 2");
    if (!polya_check(e)) throw PreconditionError("clamp_sequence needs the Polya condition");
    unsigned long half = static_cast<unsigned long>(s * s / 2);
    unsigned long ceiling = half - 2;
    unsigned long low = half - static_cast<unsigned long>(s);
    std::vector<unsigned long> kept, clamped_out;
    for (auto v : e.exponents()) {
        if (v <= ceiling)
            kept.push_back(v);
        else
            clamped_out.push_back(v);
    }
    // distinct interval values for the clamped exponents, taken from the top
    // downward; repeats against kept exponents are fine (shifts differ at the
    // family level)
    // s = 2 leaves no usable interval (the projection lemma needs s >= 3)
    unsigned long capacity = s >= 3 ? ceiling - low + 1 : 0;
    if (clamped_out.size() > capacity) throw PreconditionError("clamp interval exhausted");
    std::vector<unsigned long> slots;
    for (unsigned long v = ceiling; slots.size() < clamped_out.size(); --v) slots.push_back(v);
    std::vector<unsigned long> result = kept;
    result.insert(result.end(), slots.begin(), slots.end());
    PolyaSequence out(std::move(result));
    if (!polya_check(out)) throw std::logic_error("clamped sequence lost the Polya condition");
    return out;
}

bool dependent_max_exponent_bound(const Family& f) {
    if (is_independent(f))
        throw PreconditionError("dependent_max_exponent_bound needs a dependent family");
    Int s(static_cast<long>(f.size()));
    Int max_e(static_cast<long>(f.max_exponent()));
    return 2 * max_e < s * s - 2;
}

Int f_bound(std::size_t s) {
    if (s < 2) throw std::domain_error("f_bound needs s >= 2");
    unsigned long half = static_cast<unsigned long>(s * s / 2);
    Int b = binomial(Int(static_cast<long>(s + half - 1)), s);
    return b * static_cast<long>(s - 1) * static_cast<long>(s - 2);
}

namespace {

// Shifts drawn uniformly from {0, ..., set_size-1}, embedded into the
// configured field. A draw with a repeated (shift, exponent) pair counts as
// a dependent outcome (the multiset is dependent).
bool independent_draw(const PolyaSequence& e, const ExperimentConfig& cfg,
                      DeterministicRng& rng) {
    FieldPtr field = cfg.conductor ? CycloField::get(cfg.conductor) : nullptr;
    std::vector<ShiftedPower> terms;
    for (std::size_t i = 0; i < e.size(); ++i) {
        Rational v(static_cast<long>(rng.below(cfg.set_size)));
        Scalar shift = field ? Scalar::in_field(field, {v}) : Scalar(v);
        terms.push_back({std::move(shift), e.exponents()[i]});
    }
    for (std::size_t i = 0; i < terms.size(); ++i)
        for (std::size_t j = i + 1; j < terms.size(); ++j)
            if (terms[i] == terms[j]) return false;
    return is_independent(Family(std::move(terms)));
}

}  // namespace

MonteCarloReport monte_carlo_independence(const PolyaSequence& e, const ExperimentConfig& cfg) {
    if (cfg.trials < 1 || cfg.set_size < 1) throw std::domain_error("invalid experiment config");
    std::size_t s = e.size();
    std::size_t hits = 0;
    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
        DeterministicRng rng(cfg.seed, trial);
        if (independent_draw(e, cfg, rng)) ++hits;
    }
    MonteCarloReport rep;
    rep.s = s;
    rep.set_size = cfg.set_size;
    rep.trials = cfg.trials;
    rep.seed = cfg.seed;
    rep.frequency = static_cast<double>(hits) / static_cast<double>(cfg.trials);
    rep.bound = 1.0 - static_cast<double>(s * (s - 1)) / static_cast<double>(cfg.set_size);
    double b = std::clamp(rep.bound, 0.0, 1.0);
    rep.sigma = std::sqrt(b * (1.0 - b) / static_cast<double>(cfg.trials));
    rep.pass = rep.frequency >= rep.bound - 3.0 * rep.sigma;
    return rep;
}

SweepReport genericity_sweep(std::size_t s, const ExperimentConfig& cfg) {
    if (s < 2) throw std::domain_error("genericity_sweep needs s >= 2");
    unsigned long d = static_cast<unsigned long>(s * s / 2) - 1;
    std::vector<PolyaSequence> sequences;
    if (s <= d) {
        Int count = count_polya(s, d);
        if (count > 100000)
            throw std::domain_error("P'_s too large to enumerate: " + count.get_str());
        for (const auto& m : enumerate_polya(s, d)) sequences.push_back(m.to_sequence());
    }
    FieldPtr field = cfg.conductor ? CycloField::get(cfg.conductor) : nullptr;
    std::size_t hits = 0;
    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
        DeterministicRng rng(cfg.seed, trial);
        std::vector<Scalar> shifts;
        for (std::size_t i = 0; i < s; ++i) {
            Rational v(static_cast<long>(rng.below(cfg.set_size)));
            shifts.push_back(field ? Scalar::in_field(field, {v}) : Scalar(v));
        }
        bool all_independent = true;
        for (const auto& e : sequences) {
            std::vector<ShiftedPower> terms;
            bool collision = false;
            for (std::size_t i = 0; i < s; ++i) terms.push_back({shifts[i], e.exponents()[i]});
            for (std::size_t i = 0; i < s && !collision; ++i)
                for (std::size_t j = i + 1; j < s; ++j)
                    if (terms[i] == terms[j]) {
                        collision = true;
                        break;
                    }
            if (collision || !is_independent(Family(std::move(terms)))) {
                all_independent = false;
                break;
            }
        }
        if (all_independent) ++hits;
    }
    SweepReport rep;
    rep.s = s;
    rep.set_size = cfg.set_size;
    rep.trials = cfg.trials;
    rep.seed = cfg.seed;
    rep.sequences = sequences.size();
    rep.frequency = static_cast<double>(hits) / static_cast<double>(cfg.trials);
    Rational fb(f_bound(s));
    rep.vacuous = fb >= static_cast<long>(cfg.set_size);
    rep.bound = 1.0 - fb.get_d() / static_cast<double>(cfg.set_size);
    rep.pass = rep.vacuous || rep.frequency >= rep.bound;
    return rep;
}

}  // namespace affpow
