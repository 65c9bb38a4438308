#ifndef AFFPOW_WARING_HPP
#define AFFPOW_WARING_HPP

#include "affpow/linalg.hpp"
#include "affpow/poly.hpp"

namespace affpow {

// Normalized coefficients Z_i of the binary homogenization of a rational
// polynomial; hankel(r) is the catalecticant with entry (i, j) = Z_{i+j}.
class CatalecticantProfile {
public:
    explicit CatalecticantProfile(const Poly& f);

    unsigned long degree() const { return static_cast<unsigned long>(z_.size()) - 1; }
    const std::vector<Rational>& z() const { return z_; }
    // (D-r+1) x (r+1), entry (i, j) = Z_{i+j}.
    Matrix hankel(unsigned long r) const;

private:
    std::vector<Rational> z_;
};

// (x+1)^{2d+2} - x^{2d+2}, degree 2d+1.
Poly h_polynomial(unsigned long d);

CatalecticantProfile extract_z(const Poly& f);

// The (d+2) x (d+1) matrix (Z_{i+j}) for a degree-(2d+1) profile; for the
// h_polynomial it is (2d+2) times a Hilbert matrix with an extra row.
Matrix hilbert_like_matrix(const CatalecticantProfile& profile, unsigned long d);

struct WaringCertificate {
    unsigned long rank = 0;
    Poly kernel_poly;               // squarefree apolar form found at rank r
    bool squarefree = false;        // gcd(g, g') constant, decided exactly
    bool real_roots_numeric = false;  // all roots numerically real (diagnostic)
    bool root_at_infinity = false;  // deg g < r: a pure power x^D term is needed
};

// Sylvester / Comas-Seiguer loop: smallest r whose catalecticant kernel
// contains a squarefree form. Rank is the complex Waring rank of the binary
// homogenization.
WaringCertificate waring_rank(const Poly& f);

// Degree-n monic polynomial orthogonal to 1, x, ..., x^{n-1} under
// <f,g> = int_0^1 f g.
Poly shifted_legendre(unsigned long n);

// Kernel of the transposed Hilbert-like matrix of H_{2d+1} is spanned by
// shifted_legendre(d+1), which is squarefree.
bool legendre_kernel_identity(unsigned long d);

// Numerically isolates the d+1 roots of shifted_legendre(d+1) in (0,1),
// solves for the weights of H_{2d+1} = sum alpha_i (x + a_i)^{2d+1}, and
// returns the max-norm residual. Diagnostic only; the one floating-point
// operation in the module.
double real_decomposition_residual(unsigned long d);

// Roots of shifted_legendre(n) in (0,1) found by bisection; throws when
// fewer than n sign changes are located.
std::vector<double> legendre_roots(unsigned long n);

}  // namespace affpow

#endif
