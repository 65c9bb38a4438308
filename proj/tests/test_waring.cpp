#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "affpow/family.hpp"
#include "affpow/waring.hpp"

using namespace affpow;

TEST_CASE("h_polynomial") {
    CHECK(h_polynomial(0) == Poly({Scalar(1), Scalar(2)}));
    CHECK(h_polynomial(1) == Poly({Scalar(1), Scalar(4), Scalar(6), Scalar(4)}));
    for (unsigned long d = 0; d <= 6; ++d) {
        CHECK(h_polynomial(d).degree() == static_cast<long>(2 * d + 1));
        CHECK(h_polynomial(d).leading() == Scalar(static_cast<long>(2 * d + 2)));
    }
}

TEST_CASE("extract_Z") {
    for (unsigned long d = 0; d <= 10; ++d) {
        auto profile = extract_z(h_polynomial(d));
        REQUIRE(profile.degree() == 2 * d + 1);
        for (unsigned long i = 0; i <= 2 * d + 1; ++i)
            CHECK(profile.z()[i] ==
                  make_rational(Int(static_cast<long>(2 * d + 2)), Int(static_cast<long>(i + 1))));
    }

    auto pure = extract_z(Poly::monomial(5));
    CHECK(pure.z()[0] == 1);
    for (unsigned long i = 1; i <= 5; ++i) CHECK(pure.z()[i] == 0);

    auto shifted = extract_z(expand_shifted_power(Scalar(-1), 4));
    for (unsigned long i = 0; i <= 4; ++i) CHECK(shifted.z()[i] == 1);
}

TEST_CASE("hilbert_like_matrix") {
    auto profile = extract_z(h_polynomial(1));
    Matrix m = hilbert_like_matrix(profile, 1);
    REQUIRE(m.rows() == 3);
    REQUIRE(m.cols() == 2);
    CHECK(m.at(0, 0) == Scalar(4));
    CHECK(m.at(0, 1) == Scalar(2));
    CHECK(m.at(1, 1) == Scalar(Rational(4, 3)));
    CHECK(m.at(2, 1) == Scalar(1));

    for (unsigned long d = 0; d <= 8; ++d)
        CHECK(rank(hilbert_like_matrix(extract_z(h_polynomial(d)), d)) == d + 1);
}

TEST_CASE("waring_rank basics") {
    CHECK(waring_rank(Poly::monomial(5)).rank == 1);
    CHECK(waring_rank(Poly({Scalar(1), Scalar(2)})).rank == 1);
    CHECK(waring_rank(expand_shifted_power(Scalar(Rational(7, 3)), 6)).rank == 1);
    CHECK_THROWS(waring_rank(Poly::constant(Scalar(3))));
}

TEST_CASE("waring_rank of the H family") {
    for (unsigned long d = 1; d <= 6; ++d) {
        auto cert = waring_rank(h_polynomial(d));
        CHECK(cert.rank == d + 1);
        CHECK(cert.squarefree);
        CHECK(!cert.root_at_infinity);
        CHECK(cert.real_roots_numeric);
    }
    // even-degree H_{2d} = (x+1)^{2d+1} - x^{2d+1}, complex rank d+1
    for (unsigned long d = 1; d <= 5; ++d) {
        Poly h_even = expand_shifted_power(Scalar(-1), 2 * d + 1) - Poly::monomial(2 * d + 1);
        CHECK(waring_rank(h_even).rank == d + 1);
    }
}

TEST_CASE("waring_rank translation invariance") {
    for (long c : {1L, -2L, 5L}) {
        Poly f = h_polynomial(2);
        // substitute x -> x + c through the shifted-power basis
        Poly g;
        for (unsigned long i = 0; i < f.coeffs().size(); ++i)
            g += f.coeff(i) * expand_shifted_power(Scalar(-c), i);
        CHECK(waring_rank(g).rank == waring_rank(f).rank);
    }
}

TEST_CASE("shifted_legendre") {
    CHECK(shifted_legendre(0) == Poly::constant(Scalar(1)));
    CHECK(shifted_legendre(1) == Poly({Scalar(Rational(-1, 2)), Scalar(1)}));
    CHECK(shifted_legendre(2) ==
          Poly({Scalar(Rational(1, 6)), Scalar(-1), Scalar(1)}));

    // orthogonality to lower monomials under the [0,1] moment form
    for (unsigned long n = 1; n <= 6; ++n) {
        Poly p = shifted_legendre(n);
        for (unsigned long i = 0; i < n; ++i) {
            Rational moment(0);
            for (unsigned long j = 0; j <= static_cast<unsigned long>(p.degree()); ++j)
                moment += p.coeff(j).rat() / Rational(static_cast<long>(i + j + 1));
            CHECK(moment == 0);
        }
    }
}

TEST_CASE("legendre kernel identity") {
    for (unsigned long d = 0; d <= 6; ++d) CHECK(legendre_kernel_identity(d));
}

TEST_CASE("legendre root isolation") {
    for (unsigned long n = 1; n <= 8; ++n) {
        auto roots = legendre_roots(n);
        REQUIRE(roots.size() == n);
        for (double r : roots) {
            CHECK(r > 0.0);
            CHECK(r < 1.0);
        }
        for (std::size_t i = 1; i < roots.size(); ++i) CHECK(roots[i] > roots[i - 1]);
    }
}

TEST_CASE("real decomposition residual") {
    CHECK(real_decomposition_residual(0) == doctest::Approx(0.0).epsilon(1e-12));
    for (unsigned long d = 1; d <= 4; ++d) CHECK(real_decomposition_residual(d) <= 1e-8);
}
