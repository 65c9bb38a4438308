#include "affpow/family.hpp"

#include <algorithm>
#include <map>

namespace affpow {

Family::Family(std::vector<ShiftedPower> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw std::invalid_argument("family must have at least one term");
    for (std::size_t i = 0; i < terms_.size(); ++i)
        for (std::size_t j = i + 1; j < terms_.size(); ++j)
            if (terms_[i] == terms_[j])
                throw std::invalid_argument("family terms must be pairwise distinct");
}

unsigned long Family::max_exponent() const {
    unsigned long d = 0;
    for (const auto& t : terms_) d = std::max(d, t.exponent);
    return d;
}

bool Family::all_rational_shifts() const {
    for (const auto& t : terms_)
        if (!t.shift.is_rational()) return false;
    return true;
}

std::vector<unsigned long> Family::exponents() const {
    std::vector<unsigned long> e;
    e.reserve(terms_.size());
    for (const auto& t : terms_) e.push_back(t.exponent);
    return e;
}

Matrix Family::coefficient_matrix() const {
    std::size_t cols = max_exponent() + 1;
    Matrix m(terms_.size(), cols);
    for (std::size_t r = 0; r < terms_.size(); ++r) {
        Poly p = terms_[r].expand();
        for (std::size_t c = 0; c < p.coeffs().size(); ++c) m.at(r, c) = p.coeffs()[c];
    }
    return m;
}

PolyaSequence::PolyaSequence(std::vector<unsigned long> exponents) : exps_(std::move(exponents)) {
    std::sort(exps_.begin(), exps_.end(), std::greater<>());
}

std::size_t PolyaSequence::count_below(unsigned long i) const {
    std::size_t n = 0;
    for (auto e : exps_)
        if (e < i) ++n;
    return n;
}

std::size_t PolyaSequence::multiplicity(unsigned long i) const {
    if (i == 0) return 0;
    std::size_t n = 0;
    for (auto e : exps_)
        if (e == i - 1) ++n;
    return n;
}

bool polya_check(const PolyaSequence& e) {
    // n_i is constant (= s) past d+1, so checking up to d+1 covers all i.
    unsigned long d = e.max_exponent();
    for (unsigned long i = 1; i <= d + 1; ++i)
        if (e.count_below(i) > i) return false;
    return true;
}

bool gmk_condition(const PolyaSequence& e) {
    if (e.count_below(1) > 1) return false;
    unsigned long d = e.max_exponent();
    for (unsigned long j = 1; j <= d; ++j)
        if (e.count_below(j) + e.count_below(j + 1) > j + 1) return false;
    return true;
}

Family jordan_family(unsigned long d,
                     const std::vector<std::pair<Scalar, unsigned long>>& towers) {
    for (std::size_t i = 0; i < towers.size(); ++i)
        for (std::size_t j = i + 1; j < towers.size(); ++j)
            if (towers[i].first == towers[j].first)
                throw PreconditionError("duplicate node in jordan towers");
    std::vector<ShiftedPower> terms;
    for (const auto& [a, e] : towers) {
        if (e < 1 || e > d) throw PreconditionError("tower base exponent outside 1..d");
        for (unsigned long k = e; k <= d; ++k) terms.push_back({a, k});
    }
    return Family(std::move(terms));
}

bool jordan_condition(unsigned long d,
                      const std::vector<std::pair<Scalar, unsigned long>>& towers) {
    Int total = 0;
    for (const auto& [a, e] : towers) total += Int(static_cast<long>(d + 1 - e));
    return total <= Int(static_cast<long>(d + 1));
}

std::size_t dimension(const Family& f) { return rank(f.coefficient_matrix()); }

bool is_independent(const Family& f) { return dimension(f) == f.size(); }

namespace {

// Fraction-free determinant over the polynomial ring (exact division by the
// previous pivot).
Poly poly_det(std::vector<std::vector<Poly>> m) {
    std::size_t n = m.size();
    if (n == 0) return Poly::constant(Scalar(1));
    Poly prev = Poly::constant(Scalar(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = n;
        for (std::size_t r = k; r < n; ++r)
            if (!m[r][k].is_zero()) {
                piv = r;
                break;
            }
        if (piv == n) return Poly();
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (std::size_t r = k + 1; r < n; ++r)
            for (std::size_t c = k + 1; c < n; ++c)
                m[r][c] = exact_divide(m[k][k] * m[r][c] - m[r][k] * m[k][c], prev);
        prev = m[k][k];
    }
    Poly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

}  // namespace

Poly wronskian(const Family& f) {
    std::size_t s = f.size();
    std::vector<std::vector<Poly>> m(s, std::vector<Poly>(s));
    for (std::size_t j = 0; j < s; ++j) {
        Poly p = f[j].expand();
        for (std::size_t i = 0; i < s; ++i) m[i][j] = p.derivative(i);
    }
    return poly_det(std::move(m));
}

std::vector<Vector> dependence_coefficients(const Family& f) {
    return nullspace(f.coefficient_matrix().transpose());
}

Family max_independent_subfamily(const Family& f) {
    std::vector<ShiftedPower> kept;
    std::size_t cols = f.max_exponent() + 1;
    std::vector<Scalar> rows;
    std::size_t cur_rank = 0;
    for (const auto& t : f.terms()) {
        std::vector<Scalar> candidate = rows;
        Poly p = t.expand();
        for (std::size_t c = 0; c < cols; ++c) candidate.push_back(p.coeff(c));
        Matrix m(kept.size() + 1, cols, candidate);
        std::size_t r = rank(m);
        if (r > cur_rank) {
            kept.push_back(t);
            rows = std::move(candidate);
            cur_rank = r;
        }
    }
    return Family(std::move(kept));
}

namespace {

struct NodeExponents {
    Scalar node;
    std::vector<unsigned long> exps;  // sorted ascending
};

std::vector<NodeExponents> group_by_node(const Family& f) {
    std::vector<NodeExponents> groups;
    for (const auto& t : f.terms()) {
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const NodeExponents& g) { return g.node == t.shift; });
        if (it == groups.end()) {
            groups.push_back({t.shift, {t.exponent}});
        } else {
            it->exps.push_back(t.exponent);
        }
    }
    for (auto& g : groups) std::sort(g.exps.begin(), g.exps.end());
    return groups;
}

std::vector<OddSequenceRecord> all_sequences(const Family& f) {
    std::vector<OddSequenceRecord> records;
    for (const auto& g : group_by_node(f)) {
        std::size_t i = 0;
        while (i < g.exps.size()) {
            std::size_t j = i;
            while (j + 1 < g.exps.size() && g.exps[j + 1] == g.exps[j] + 1) ++j;
            OddSequenceRecord rec;
            rec.node = g.node;
            rec.min = g.exps[i];
            rec.max = g.exps[j];
            rec.parity = (rec.max - rec.min + 1) % 2;
            records.push_back(rec);
            i = j + 1;
        }
    }
    std::stable_sort(records.begin(), records.end(),
                     [](const OddSequenceRecord& a, const OddSequenceRecord& b) {
                         return a.min < b.min;
                     });
    return records;
}

}  // namespace

std::vector<OddSequenceRecord> odd_sequences(const Family& f) {
    std::vector<OddSequenceRecord> odd;
    for (auto& rec : all_sequences(f))
        if (rec.parity == 1) odd.push_back(rec);
    return odd;
}

bool atkinson_sharma_condition(const Family& f) {
    if (!polya_check(PolyaSequence(f.exponents()))) return false;
    unsigned long d = f.max_exponent();
    for (const auto& rec : odd_sequences(f))
        if (rec.max != d) return false;
    return true;
}

namespace {

Family drop_terms(const Family& f, const std::vector<ShiftedPower>& removed) {
    std::vector<ShiftedPower> kept;
    for (const auto& t : f.terms()) {
        bool out = std::any_of(removed.begin(), removed.end(),
                               [&](const ShiftedPower& r) { return r == t; });
        if (!out) kept.push_back(t);
    }
    return Family(std::move(kept));
}

Family halfplus_impl(const Family& f) {
    std::size_t s = f.size();
    if (s <= 2) return f;  // two distinct shifted powers are always independent
    unsigned long d = f.max_exponent();
    std::size_t top_count = 0;
    std::size_t top_index = 0;
    for (std::size_t i = 0; i < s; ++i)
        if (f[i].exponent == d) {
            ++top_count;
            top_index = i;
        }
    if (top_count == 1) {
        // dim<F> = dim<F minus top> + 1; recurse and re-add the top term.
        Family rest = drop_terms(f, {f[top_index]});
        Family w = halfplus_impl(rest);
        std::vector<ShiftedPower> terms = w.terms();
        terms.push_back(f[top_index]);
        return Family(std::move(terms));
    }
    std::vector<ShiftedPower> removed;
    std::vector<OddSequenceRecord> shorts;
    for (const auto& rec : odd_sequences(f))
        if (rec.max != d) shorts.push_back(rec);
    std::size_t take = (shorts.size() + 1) / 2;
    for (std::size_t i = 0; i < take; ++i)
        removed.push_back({shorts[i].node, shorts[i].min});
    return drop_terms(f, removed);
}

}  // namespace

Family real_halfplus_witness(const Family& f) {
    if (!f.all_rational_shifts())
        throw PreconditionError("real_halfplus_witness needs rational shifts");
    if (!polya_check(PolyaSequence(f.exponents())))
        throw PreconditionError("real_halfplus_witness needs the Polya condition");
    Family w = halfplus_impl(f);
    if (!is_independent(w))
        throw std::logic_error("halfplus witness failed the rank verification");
    return w;
}

Family sqrt_witness(const Family& f) {
    if (!polya_check(PolyaSequence(f.exponents())))
        throw PreconditionError("sqrt_witness needs the Polya condition");
    std::size_t s = f.size();
    std::size_t c = 0;
    while (c * c < s) ++c;  // ceil(sqrt(s))
    // partition by exponent, preserving input order inside a class
    std::map<unsigned long, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < s; ++i) classes[f[i].exponent].push_back(i);
    const std::vector<std::size_t>* largest = nullptr;
    for (const auto& [e, idx] : classes)
        if (!largest || idx.size() > largest->size()) largest = &idx;
    std::vector<ShiftedPower> terms;
    if (largest->size() >= c) {
        for (auto i : *largest) terms.push_back(f[i]);
    } else {
        for (const auto& [e, idx] : classes) terms.push_back(f[idx.front()]);
    }
    Family w(std::move(terms));
    if (!is_independent(w)) throw std::logic_error("sqrt witness failed the rank verification");
    return w;
}

Family real_top_exponent_witness(const Family& f) {
    if (!f.all_rational_shifts())
        throw PreconditionError("real_top_exponent_witness needs rational shifts");
    if (!polya_check(PolyaSequence(f.exponents())))
        throw PreconditionError("real_top_exponent_witness needs the Polya condition");
    std::size_t s = f.size();
    std::size_t t = (s + 4) / 3;
    std::vector<std::size_t> order(s);
    for (std::size_t i = 0; i < s; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return f[a].exponent > f[b].exponent;
    });
    std::vector<ShiftedPower> terms;
    for (std::size_t i = 0; i < t; ++i) terms.push_back(f[order[i]]);
    Family w(std::move(terms));
    if (!is_independent(w))
        throw std::logic_error("top-exponent witness failed the rank verification");
    return w;
}

long big_exponent_threshold(const Rational& alpha, unsigned long p) {
    if (alpha < 0) throw std::domain_error("alpha must be nonnegative");
    Rational p2a21 = Rational(static_cast<long>(p)) * Rational(static_cast<long>(p)) *
                     (alpha * alpha + 1);
    for (long t = static_cast<long>(p); t >= 0; --t) {
        Rational rhs = Rational(static_cast<long>(p)) * (1 + alpha) - t;
        if (rhs >= 0 && rhs * rhs >= p2a21) return t;
    }
    return 0;
}

BigExponentReport big_exponent_conditions(const Family& f) {
    BigExponentReport rep;
    rep.s = f.size();
    unsigned long min_e = f[0].exponent;
    for (const auto& t : f.terms()) min_e = std::min(min_e, t.exponent);
    rep.min_exponent = min_e;
    long s = static_cast<long>(rep.s);
    rep.real_rule = static_cast<long>(min_e) >= std::max(1L, 2 * s - 4);
    rep.complex_rule = Int(static_cast<long>(min_e)) * 2 >= Int(s) * (s - 1);
    rep.min_exponent_ge_s = min_e >= rep.s;
    if (rep.complex_rule || (rep.real_rule && f.all_rational_shifts())) {
        rep.dim_lower_bound = rep.s;
    } else if (min_e >= 1) {
        Rational alpha(static_cast<long>(min_e), s);
        rep.dim_lower_bound = static_cast<std::size_t>(big_exponent_threshold(alpha, rep.s)) + 1;
    } else {
        rep.dim_lower_bound = 1;
    }
    return rep;
}

}  // namespace affpow
