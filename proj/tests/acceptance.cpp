// Acceptance checks, one pass/fail line each. Exit code = number of failures.
#include <algorithm>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "affpow/construct.hpp"
#include "affpow/json_io.hpp"
#include "affpow/polya.hpp"
#include "affpow/rng.hpp"
#include "affpow/sde.hpp"
#include "affpow/waring.hpp"

using namespace affpow;

namespace {

int failures = 0;

void report(int number, const std::string& label, bool ok) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", number, label.c_str());
    if (!ok) ++failures;
}

Family random_family(DeterministicRng& rng, std::size_t s, unsigned long min_exp,
                     unsigned long span, const FieldPtr& field) {
    std::vector<ShiftedPower> terms;
    while (terms.size() < s) {
        Rational v(static_cast<long>(rng.below(3 * s + 2)));
        Scalar shift = field ? Scalar::in_field(field, {v}) : Scalar(v);
        if (field && rng.below(2) == 1) {
            std::vector<Rational> c{v, Rational(static_cast<long>(rng.below(3)) + 1)};
            shift = Scalar::in_field(field, std::move(c));
        }
        ShiftedPower t{std::move(shift), min_exp + rng.below(span + 1)};
        if (std::find(terms.begin(), terms.end(), t) == terms.end()) terms.push_back(std::move(t));
    }
    return Family(std::move(terms));
}

bool criterion1() {
    Family f({{Scalar(-1), 2}, {Scalar(1), 2}, {Scalar(0), 1}});
    if (dimension(f) != 2) return false;
    auto kernels = dependence_coefficients(f);
    if (kernels.size() != 1) return false;
    const Scalar& scale = kernels[0][0];
    return kernels[0][1] == Scalar(-1) * scale && kernels[0][2] == Scalar(-4) * scale;
}

bool criterion2() {
    for (unsigned long k = 1; k <= 6; ++k)
        for (unsigned long d = 1; d <= 20; ++d)
            for (const Rational& mu : {Rational(1), Rational(1, 2), Rational(-2)})
                if (!unity_identity(k, d, mu).verify()) return false;
    return true;
}

bool criterion3() {
    for (unsigned long k : {2ul, 3ul, 4ul}) {
        Family f = unity_dependence_family(k, k * k, Rational(1));
        if (dimension(f) >= f.size()) return false;
        if (!polya_check(PolyaSequence(f.exponents()))) return false;
        // the GMK inequalities need n_d = k <= d+1-2k, which holds from k = 3 on
        if (k >= 3 && !gmk_condition(PolyaSequence(f.exponents()))) return false;
    }
    return true;
}

bool criterion4() {
    for (int set = 0; set < 20; ++set) {
        DeterministicRng rng(400 + set, 0);
        unsigned long d = 1 + rng.below(10);
        std::vector<ShiftedPower> terms;
        while (terms.size() < d + 1) {
            ShiftedPower t{Scalar(static_cast<long>(rng.below(4 * d + 5))), d};
            if (std::find(terms.begin(), terms.end(), t) == terms.end())
                terms.push_back(std::move(t));
        }
        if (dimension(Family(std::move(terms))) != d + 1) return false;
    }
    return true;
}

bool criterion5() {
    std::vector<Scalar> nodes{Scalar(0), Scalar(1), Scalar(2)};
    for (unsigned long d = 1; d <= 6; ++d)
        for (std::size_t count = 1; count <= 3; ++count) {
            std::vector<unsigned long> e(count, 1);
            while (true) {
                unsigned long deficit = 0;
                for (auto v : e) deficit += d + 1 - v;
                if (deficit <= d + 1) {
                    std::vector<std::pair<Scalar, unsigned long>> towers;
                    for (std::size_t i = 0; i < count; ++i) towers.push_back({nodes[i], e[i]});
                    if (!jordan_condition(d, towers)) return false;
                    if (!is_independent(jordan_family(d, towers))) return false;
                }
                std::size_t pos = 0;
                while (pos < count && e[pos] == d) e[pos++] = 1;
                if (pos == count) break;
                ++e[pos];
            }
        }
    return true;
}

bool criterion6() {
    FieldPtr gauss = CycloField::get(4);
    int checked = 0;
    for (int iter = 0; checked < 50; ++iter) {
        if (iter > 400) return false;
        DeterministicRng rng(600 + iter, 0);
        std::size_t s = 1 + rng.below(5);
        unsigned long min_exp = std::max<unsigned long>(
            small_sde_order_bound(s), static_cast<unsigned long>(s * (s - 1) / 2));
        FieldPtr field = iter % 2 ? gauss : nullptr;
        Family f = random_family(rng, s, min_exp, 2, field);
        if (!is_independent(f)) continue;
        Sde e = find_small_sde(f);
        if (e.order() < s) return false;
        for (unsigned long i = 0; i < e.coefficients.size(); ++i) {
            long cap = static_cast<long>(i < e.params.t ? i + e.params.l : e.params.l);
            if (e.coefficients[i].degree() > cap) return false;
        }
        for (const auto& term : f.terms())
            if (!verify_sde(e, term.expand())) return false;
        if (!check_root_divisibility(e, f)) return false;
        ++checked;
    }
    return true;
}

bool criterion7() {
    for (std::size_t s : {2ul, 3ul, 4ul}) {
        unsigned long e = static_cast<unsigned long>(s) + 3;
        std::vector<ShiftedPower> terms;
        for (std::size_t i = 0; i < s; ++i) terms.push_back({Scalar(static_cast<long>(i)), e});
        Family f(std::move(terms));
        if (!is_independent(f)) return false;
        for (unsigned long t = 0; t <= s; ++t)
            for (unsigned long k = s; k <= e; ++k)
                if (find_sde(f, {t, k, static_cast<unsigned long>(s) - 1}).has_value())
                    return false;
    }
    return true;
}

bool criterion8() {
    for (unsigned long d = 1; d <= 6; ++d) {
        auto cert = waring_rank(h_polynomial(d));
        if (cert.rank != d + 1 || !cert.squarefree || cert.root_at_infinity) return false;
    }
    for (unsigned long d = 1; d <= 5; ++d) {
        Poly h_even = expand_shifted_power(Scalar(-1), 2 * d + 1) - Poly::monomial(2 * d + 1);
        if (waring_rank(h_even).rank != d + 1) return false;
    }
    for (unsigned long d = 0; d <= 6; ++d)
        if (!legendre_kernel_identity(d)) return false;
    for (unsigned long d = 0; d <= 4; ++d)
        if (real_decomposition_residual(d) > 1e-8) return false;
    return true;
}

bool criterion9() {
    for (unsigned long d = 1; d <= 8; ++d)
        for (std::size_t s = 1; s <= d; ++s)
            if (count_polya(s, d) != static_cast<long>(enumerate_polya(s, d).size())) return false;
    for (std::size_t s = 1; s <= 10; ++s) {
        Int catalan = binomial(Int(static_cast<long>(2 * s)), s) / static_cast<long>(s + 1);
        if (count_polya(s, static_cast<unsigned long>(s)) != catalan) return false;
    }
    return true;
}

bool criterion10() {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        ExperimentConfig cfg{3, 100, 2000, seed, 0};
        auto rep = monte_carlo_independence(PolyaSequence({2, 2, 0}), cfg);
        if (rep.frequency < rep.bound - 3.0 * rep.sigma) return false;
    }
    return true;
}

bool criterion11() {
    for (std::size_t s = 2; s <= 6; ++s) {
        unsigned long half = static_cast<unsigned long>(s);  // enumerate P_{s,s}
        for (const auto& tuple : enumerate_polya(s, half)) {
            PolyaSequence e = tuple.to_sequence();
            for (int set = 0; set < 20; ++set) {
                DeterministicRng rng(1100 + 37 * static_cast<std::uint64_t>(s) + set, 0);
                std::vector<ShiftedPower> terms;
                bool ok = true;
                for (std::size_t i = 0; i < s && ok; ++i) {
                    ShiftedPower t{Scalar(static_cast<long>(rng.below(4 * s))), e.exponents()[i]};
                    if (std::find(terms.begin(), terms.end(), t) != terms.end()) ok = false;
                    terms.push_back(std::move(t));
                }
                if (!ok) continue;  // collided draw, not a valid family
                Family f(std::move(terms));
                Family sq = sqrt_witness(f);
                std::size_t root = 1;
                while (root * root < s) ++root;
                if (sq.size() < root || !is_independent(sq)) return false;
                Family hp = real_halfplus_witness(f);
                if (hp.size() < s / 2 + 1 || !is_independent(hp)) return false;
            }
        }
    }
    return true;
}

bool criterion12() {
    for (unsigned long d : {2ul, 6ul, 10ul, 14ul}) {
        auto [f, expected] = lowdim_family(d);
        if (dimension(f) != expected || expected != (3 * d + 2) / 4) return false;
    }
    return true;
}

bool criterion13() {
    FieldPtr gauss = CycloField::get(4);
    int checked = 0;
    for (int iter = 0; checked < 20; ++iter) {
        if (iter > 200) return false;
        DeterministicRng rng(1300 + iter, 0);
        std::size_t s = 2 + rng.below(5);
        Family f = random_family(rng, s, static_cast<unsigned long>(s), 2, gauss);
        long threshold = big_exponent_threshold(Rational(1), static_cast<unsigned long>(s));
        if (static_cast<long>(dimension(f)) < threshold + 1) return false;
        auto rep = big_exponent_conditions(f);
        if (!rep.min_exponent_ge_s) return false;
        if (rep.dim_lower_bound < static_cast<std::size_t>(threshold + 1)) return false;
        ++checked;
    }
    return true;
}

bool probe_determinism() {
    ProbeParams params;
    params.s = 3;
    params.conductor = 4;
    params.samples = 80;
    params.seed = 2024;
    auto a = conjecture_probe(ProbeKind::BigExp, params);
    auto b = conjecture_probe(ProbeKind::BigExp, params);
    if (probe_report_to_json(a) != probe_report_to_json(b)) return false;
    auto c = conjecture_probe(ProbeKind::Gmk, params);
    auto d = conjecture_probe(ProbeKind::Gmk, params);
    return probe_report_to_json(c) == probe_report_to_json(d);
}

}  // namespace

int main() {
    report(1, "introductory dependence identity", criterion1());
    report(2, "root-of-unity identity grid", criterion2());
    report(3, "GMK profile passes while dependent over Q(xi_k)", criterion3());
    report(4, "equal-exponent families form a basis", criterion4());
    report(5, "Jordan tower configurations are independent", criterion5());
    report(6, "small SDE existence and root structure", criterion6());
    report(7, "shift l = s-1 admits no equation", criterion7());
    report(8, "Waring rank of the H family with Legendre certificates", criterion8());
    report(9, "ballot counting against enumeration and Catalan numbers", criterion9());
    report(10, "Monte Carlo genericity bound across seeds", criterion10());
    report(11, "sqrt and half-plus dimension witnesses", criterion11());
    report(12, "low-dimension family formula", criterion12());
    report(13, "complex dimension bound by exact threshold", criterion13());
    bool det = probe_determinism();
    std::printf("%s probe determinism: identical reports for a fixed seed\n",
                det ? "PASS" : "FAIL");
    if (!det) ++failures;
    return failures;
}
