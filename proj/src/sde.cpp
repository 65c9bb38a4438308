#include "affpow/sde.hpp"

#include <algorithm>

namespace affpow {

bool feasible(std::size_t s, const SdeParams& p) {
    Int k(static_cast<long>(p.k)), l(static_cast<long>(p.l)), t(static_cast<long>(p.t));
    Int lhs = Int(static_cast<long>(s)) * (l + k + 1);
    Int rhs = (k + 1) * (l + 1) + t * (t - 1) / 2;
    return lhs < rhs;
}

namespace {

// Column layout: i ascending, then j ascending with j <= i+l below t and
// j <= l at or above t.
std::vector<std::pair<unsigned long, unsigned long>> column_index(const SdeParams& p) {
    std::vector<std::pair<unsigned long, unsigned long>> cols;
    for (unsigned long i = 0; i <= p.k; ++i) {
        unsigned long jmax = (i < p.t) ? i + p.l : p.l;
        for (unsigned long j = 0; j <= jmax; ++j) cols.emplace_back(i, j);
    }
    return cols;
}

}  // namespace

Matrix build_system(const Family& f, const SdeParams& p) {
    auto cols = column_index(p);
    std::vector<std::size_t> row_offset;
    std::size_t total_rows = 0;
    for (const auto& term : f.terms()) {
        row_offset.push_back(total_rows);
        total_rows += term.exponent + p.l + 1;  // deg(x^j f^{(i)}) <= e + l
    }
    Matrix m(total_rows, cols.size());
    for (std::size_t r = 0; r < f.size(); ++r) {
        const auto& term = f[r];
        // f^{(i)} = e^(falling i) (x-a)^{e-i}
        std::vector<Poly> derivs(p.k + 1);
        for (unsigned long i = 0; i <= p.k; ++i) {
            if (i > term.exponent) break;
            Scalar c{Rational(falling_factorial(Int(static_cast<long>(term.exponent)), i))};
            derivs[i] = c * expand_shifted_power(term.shift, term.exponent - i);
        }
        for (std::size_t col = 0; col < cols.size(); ++col) {
            auto [i, j] = cols[col];
            if (i > term.exponent) continue;
            const Poly& d = derivs[i];
            for (std::size_t mdeg = 0; mdeg < d.coeffs().size(); ++mdeg)
                m.at(row_offset[r] + mdeg + j, col) = d.coeffs()[mdeg];
        }
    }
    return m;
}

std::optional<Sde> find_sde(const Family& f, const SdeParams& p) {
    auto kernel = nullspace(build_system(f, p));
    if (kernel.empty()) return std::nullopt;
    const Vector& lambda = kernel.front();
    auto cols = column_index(p);
    std::vector<std::vector<Scalar>> coeffs(p.k + 1);
    for (unsigned long i = 0; i <= p.k; ++i) {
        unsigned long jmax = (i < p.t) ? i + p.l : p.l;
        coeffs[i].assign(jmax + 1, Scalar(0));
    }
    for (std::size_t c = 0; c < cols.size(); ++c) coeffs[cols[c].first][cols[c].second] = lambda[c];
    std::vector<Poly> polys;
    polys.reserve(p.k + 1);
    for (auto& v : coeffs) polys.emplace_back(std::move(v));
    while (polys.size() > 1 && polys.back().is_zero()) polys.pop_back();
    if (polys.back().is_zero()) return std::nullopt;
    Sde e;
    e.params = {p.t, static_cast<unsigned long>(polys.size()) - 1, p.l};
    e.coefficients = std::move(polys);
    return e;
}

unsigned long small_sde_order_bound(std::size_t s) {
    // s + ceil(s*sqrt(2)/2): smallest n with 2n^2 >= s^2
    unsigned long n = 0;
    while (Int(static_cast<long>(n)) * static_cast<long>(n) * 2 <
           Int(static_cast<long>(s)) * static_cast<long>(s))
        ++n;
    return static_cast<unsigned long>(s) + n;
}

Sde find_small_sde(const Family& f) {
    SdeParams p;
    p.t = f.size();
    p.k = p.l = small_sde_order_bound(f.size());
    auto e = find_sde(f, p);
    if (!e) throw std::logic_error("feasible parameters yielded no equation");
    return *e;
}

bool verify_sde(const Sde& e, const Poly& f) {
    Poly acc;
    for (std::size_t i = 0; i < e.coefficients.size(); ++i)
        acc += e.coefficients[i] * f.derivative(i);
    return acc.is_zero();
}

namespace {

void require_annihilated(const Sde& e, const Family& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!verify_sde(e, f[i].expand()))
            throw PreconditionError("family term " + std::to_string(i) +
                                    " does not satisfy the equation");
}

}  // namespace

bool check_root_divisibility(const Sde& e, const Family& f) {
    unsigned long k = e.order();
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i].exponent < k)
            throw PreconditionError("family term " + std::to_string(i) +
                                    " has exponent below the order");
    require_annihilated(e, f);
    Poly prod = Poly::constant(Scalar(1));
    for (const auto& t : f.terms()) prod = prod * expand_shifted_power(t.shift, 1);
    return divides(prod, e.coefficients.back());
}

bool check_multiplicity_ladder(const Sde& e, const Scalar& node,
                               const std::vector<unsigned long>& exps) {
    std::size_t n = exps.size();
    unsigned long k = e.order();
    if (n == 0 || n > k) throw PreconditionError("need 1 <= |exps| <= order");
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (exps[i] <= exps[i + 1])
            throw PreconditionError("exponents must be strictly decreasing");
    if (exps.back() + n < k + 1)
        throw PreconditionError("min exponent must be >= order - n + 1");
    for (auto ex : exps)
        if (!verify_sde(e, expand_shifted_power(node, ex)))
            throw PreconditionError("power does not satisfy the equation");
    for (unsigned long m = 0; m < n; ++m) {
        Poly factor = Poly::constant(Scalar(1));
        for (unsigned long j = 0; j < n - m; ++j) factor = factor * expand_shifted_power(node, 1);
        if (!divides(factor, e.coefficients[k - m])) return false;
    }
    return true;
}

std::vector<unsigned long> coefficient_root_cover(const Sde& e, const Family& f) {
    if (e.coefficients.front().is_zero())
        throw PreconditionError("coefficient_root_cover requires P_0 != 0");
    require_annihilated(e, f);
    std::vector<unsigned long> support;
    for (unsigned long i = 0; i < e.coefficients.size(); ++i)
        if (!e.coefficients[i].is_zero()) support.push_back(i);
    std::vector<unsigned long> cover;
    for (const auto& term : f.terms()) {
        unsigned long j = 0;
        for (auto p : support)
            if (p <= term.exponent) j = p;
        cover.push_back(j);
        if (!divides(expand_shifted_power(term.shift, 1), e.coefficients[j]))
            throw std::logic_error("node is not a root of the covering coefficient");
    }
    return cover;
}

}  // namespace affpow
