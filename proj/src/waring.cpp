#include "affpow/waring.hpp"

#include <cmath>
#include <complex>

#include "affpow/rng.hpp"

namespace affpow {

Poly h_polynomial(unsigned long d) {
    return expand_shifted_power(Scalar(-1), 2 * d + 2) - Poly::monomial(2 * d + 2);
}

CatalecticantProfile::CatalecticantProfile(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("catalecticant of the zero polynomial");
    unsigned long big_d = static_cast<unsigned long>(f.degree());
    z_.reserve(big_d + 1);
    for (unsigned long i = 0; i <= big_d; ++i) {
        // coeff of x^{D-i} y^i in the homogenization, over binom(D, i)
        z_.push_back(f.coeff(big_d - i).rat() /
                     Rational(binomial(Int(static_cast<long>(big_d)), i)));
    }
}

Matrix CatalecticantProfile::hankel(unsigned long r) const {
    unsigned long big_d = degree();
    if (r > big_d) throw std::domain_error("catalecticant index exceeds the degree");
    Matrix m(big_d - r + 1, r + 1);
    for (std::size_t i = 0; i + r <= big_d; ++i)
        for (std::size_t j = 0; j <= r; ++j) m.at(i, j) = Scalar(z_[i + j]);
    return m;
}

CatalecticantProfile extract_z(const Poly& f) { return CatalecticantProfile(f); }

Matrix hilbert_like_matrix(const CatalecticantProfile& profile, unsigned long d) {
    if (profile.degree() != 2 * d + 1)
        throw std::domain_error("profile degree must be 2d+1");
    return profile.hankel(d);
}

namespace {

bool squarefree(const Poly& g) {
    if (g.is_zero()) return false;
    if (g.degree() == 0) return false;  // constants carry no roots
    return gcd(g, g.derivative()).degree() == 0;
}

std::vector<std::complex<double>> complex_roots(const Poly& g) {
    long deg = g.degree();
    std::vector<std::complex<double>> c(deg + 1);
    for (long i = 0; i <= deg; ++i) c[i] = g.coeff(i).rat().get_d();
    for (auto& x : c) x /= c[deg];
    // Durand-Kerner iteration
    std::vector<std::complex<double>> roots(deg);
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> p(1.0, 0.0);
    for (long i = 0; i < deg; ++i) {
        p *= seed;
        roots[i] = p;
    }
    auto eval = [&](std::complex<double> x) {
        std::complex<double> acc = 0;
        for (long i = deg; i >= 0; --i) acc = acc * x + c[i];
        return acc;
    };
    for (int iter = 0; iter < 500; ++iter) {
        double move = 0;
        for (long i = 0; i < deg; ++i) {
            std::complex<double> denom(1.0, 0.0);
            for (long j = 0; j < deg; ++j)
                if (j != i) denom *= roots[i] - roots[j];
            std::complex<double> delta = eval(roots[i]) / denom;
            roots[i] -= delta;
            move = std::max(move, std::abs(delta));
        }
        if (move < 1e-14) break;
    }
    return roots;
}

bool roots_numerically_real(const Poly& g) {
    if (g.degree() <= 0) return true;
    for (const auto& r : complex_roots(g))
        if (std::abs(r.imag()) > 1e-7 * std::max(1.0, std::abs(r.real()))) return false;
    return true;
}

}  // namespace

WaringCertificate waring_rank(const Poly& f) {
    if (f.is_zero() || f.degree() < 1)
        throw std::domain_error("waring_rank needs degree >= 1");
    CatalecticantProfile profile(f);
    unsigned long big_d = profile.degree();
    for (unsigned long r = 1; r <= big_d; ++r) {
        auto kernel = nullspace(profile.hankel(r));
        if (kernel.empty()) continue;
        auto candidate = [&](const Vector& v) -> std::optional<Poly> {
            Poly g{std::vector<Scalar>(v)};
            if (squarefree(g)) return g;
            return std::nullopt;
        };
        std::optional<Poly> found;
        for (const auto& v : kernel) {
            found = candidate(v);
            if (found) break;
        }
        if (!found && kernel.size() > 1) {
            // bounded seeded search over small-integer combinations
            DeterministicRng rng(0x5eedULL, r);
            for (int attempt = 0; attempt < 64 && !found; ++attempt) {
                Vector v(kernel.front().size(), Scalar(0));
                for (const auto& b : kernel) {
                    long c = static_cast<long>(rng.below(7)) - 3;
                    for (std::size_t i = 0; i < v.size(); ++i)
                        v[i] += Scalar(c) * b[i];
                }
                found = candidate(v);
            }
        }
        if (found) {
            WaringCertificate cert;
            cert.rank = r;
            cert.kernel_poly = *found;
            cert.squarefree = true;
            cert.root_at_infinity =
                found->degree() < static_cast<long>(r);
            cert.real_roots_numeric = roots_numerically_real(*found);
            return cert;
        }
    }
    throw std::logic_error("no squarefree apolar form found up to the degree");
}

Poly shifted_legendre(unsigned long n) {
    // sum_k binom(n,k) binom(n+k,k) (-1)^{n-k} x^k, made monic
    std::vector<Scalar> c(n + 1, Scalar(0));
    for (unsigned long k = 0; k <= n; ++k) {
        Int v = binomial(Int(static_cast<long>(n)), k) *
                binomial(Int(static_cast<long>(n + k)), k);
        if ((n - k) % 2 == 1) v = -v;
        c[k] = Scalar(Rational(v));
    }
    Poly p{std::move(c)};
    return p.leading().inverse() * p;
}

bool legendre_kernel_identity(unsigned long d) {
    Matrix mt = hilbert_like_matrix(CatalecticantProfile(h_polynomial(d)), d).transpose();
    auto kernel = nullspace(mt);
    if (kernel.size() != 1) return false;
    Poly f = shifted_legendre(d + 1);
    // kernel vectors are normalized first-nonzero = 1; normalize F likewise
    Poly g{std::vector<Scalar>(kernel.front())};
    Scalar lead;
    for (const auto& c : f.coeffs())
        if (!c.is_zero()) {
            lead = c;
            break;
        }
    if (lead.inverse() * f != g) return false;
    return gcd(f, f.derivative()).degree() == 0;
}

std::vector<double> legendre_roots(unsigned long n) {
    Poly p = shifted_legendre(n);
    std::vector<double> c(n + 1);
    for (unsigned long i = 0; i <= n; ++i) c[i] = p.coeff(i).rat().get_d();
    auto eval = [&](double x) {
        double acc = 0;
        for (long i = static_cast<long>(n); i >= 0; --i) acc = acc * x + c[i];
        return acc;
    };
    std::vector<double> roots;
    std::size_t grid = 4096 * (n + 1);
    double prev = eval(0.0);
    for (std::size_t i = 1; i <= grid; ++i) {
        double x = static_cast<double>(i) / static_cast<double>(grid);
        double cur = eval(x);
        if ((prev < 0) != (cur < 0)) {
            double lo = static_cast<double>(i - 1) / static_cast<double>(grid), hi = x;
            for (int it = 0; it < 100; ++it) {
                double mid = 0.5 * (lo + hi);
                if ((eval(lo) < 0) != (eval(mid) < 0))
                    hi = mid;
                else
                    lo = mid;
            }
            roots.push_back(0.5 * (lo + hi));
        }
        prev = cur;
    }
    if (roots.size() < n)
        throw std::runtime_error("root isolation found too few sign changes");
    return roots;
}

double real_decomposition_residual(unsigned long d) {
    unsigned long deg = 2 * d + 1;
    auto roots = legendre_roots(d + 1);
    std::size_t terms = d + 1;
    // columns: coefficients of (x + a_i)^{2d+1}
    std::vector<std::vector<double>> basis(terms, std::vector<double>(deg + 1));
    for (std::size_t i = 0; i < terms; ++i) {
        double a = roots[i];
        double pw = 1.0;
        for (unsigned long j = deg + 1; j-- > 0;) {
            basis[i][j] = binomial(Int(static_cast<long>(deg)), j).get_d() * pw;
            pw *= a;
        }
    }
    Poly h = h_polynomial(d);
    std::vector<double> target(deg + 1);
    for (unsigned long j = 0; j <= deg; ++j) target[j] = h.coeff(j).rat().get_d();
    // normal equations, (d+1) x (d+1)
    std::vector<std::vector<double>> g(terms, std::vector<double>(terms + 1, 0.0));
    for (std::size_t i = 0; i < terms; ++i) {
        for (std::size_t j = 0; j < terms; ++j)
            for (unsigned long m = 0; m <= deg; ++m) g[i][j] += basis[i][m] * basis[j][m];
        for (unsigned long m = 0; m <= deg; ++m) g[i][terms] += basis[i][m] * target[m];
    }
    for (std::size_t k = 0; k < terms; ++k) {
        std::size_t piv = k;
        for (std::size_t r = k + 1; r < terms; ++r)
            if (std::abs(g[r][k]) > std::abs(g[piv][k])) piv = r;
        std::swap(g[k], g[piv]);
        for (std::size_t r = 0; r < terms; ++r) {
            if (r == k) continue;
            double fct = g[r][k] / g[k][k];
            for (std::size_t cc = k; cc <= terms; ++cc) g[r][cc] -= fct * g[k][cc];
        }
    }
    std::vector<double> alpha(terms);
    for (std::size_t i = 0; i < terms; ++i) alpha[i] = g[i][terms] / g[i][i];
    double residual = 0;
    for (unsigned long m = 0; m <= deg; ++m) {
        double v = target[m];
        for (std::size_t i = 0; i < terms; ++i) v -= alpha[i] * basis[i][m];
        residual = std::max(residual, std::abs(v));
    }
    return residual;
}

}  // namespace affpow
