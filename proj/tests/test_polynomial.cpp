#include <catch2/catch_amalgamated.hpp>

#include <frieze/intmath.hpp>
#include <frieze/polynomial.hpp>

using namespace frieze;

namespace {
IntPolynomial poly(std::vector<std::int64_t> ascending) { return IntPolynomial(std::move(ascending)); }
}

TEST_CASE("polynomial basics") {
    IntPolynomial z;
    CHECK(z.degree() == -1);
    CHECK(poly({0, 0, 0}) == z);

    IntPolynomial x = IntPolynomial::monomial(1, 1);
    IntPolynomial p = x * x - IntPolynomial::constant(2);  // x^2 - 2
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == -2);
    CHECK(p.coeff(1) == 0);
    CHECK(p.coeff(2) == 1);
    CHECK(p.coeff(17) == 0);
    CHECK(p.to_string("x") == "x^2-2");
    CHECK((p + IntPolynomial::constant(2)).to_string("x") == "x^2");
    CHECK((p * 0) == z);
    CHECK(poly({1, 1}) * poly({-1, 1}) == poly({-1, 0, 1}));
}

TEST_CASE("exact division") {
    IntPolynomial num = poly({-1, 0, 0, 0, 0, 0, 1});  // x^6 - 1
    IntPolynomial den = poly({-1, 0, 0, 1});           // x^3 - 1
    CHECK(num.divide_exact(den) == poly({1, 0, 0, 1}));
    CHECK_THROWS_AS(poly({1, 0, 1}).divide_exact(poly({-1, 1})), FriezeError);
}

TEST_CASE("cyclotomic polynomials match the classical table") {
    CHECK(cyclotomic(1) == poly({-1, 1}));
    CHECK(cyclotomic(2) == poly({1, 1}));
    CHECK(cyclotomic(3) == poly({1, 1, 1}));
    CHECK(cyclotomic(4) == poly({1, 0, 1}));
    CHECK(cyclotomic(6) == poly({1, -1, 1}));
    CHECK(cyclotomic(8) == poly({1, 0, 0, 0, 1}));
    CHECK(cyclotomic(10) == poly({1, -1, 1, -1, 1}));
    CHECK(cyclotomic(12) == poly({1, 0, -1, 0, 1}));
    CHECK(cyclotomic(105).degree() == 48);  // first coefficient -2 case
    CHECK(cyclotomic(105).coeff(7) == -2);

    for (int n : {5, 7, 9, 15, 24, 30, 60, 120}) {
        CHECK(cyclotomic(n).degree() == euler_phi(n));
        CHECK(cyclotomic(n).leading() == 1);
    }
}

TEST_CASE("cosine multiple-angle basis polynomials") {
    // D_k(y) expresses x^k + x^-k in y = x + x^-1.
    CHECK(cos_multiple(0) == poly({2}));
    CHECK(cos_multiple(1) == poly({0, 1}));
    CHECK(cos_multiple(2) == poly({-2, 0, 1}));
    CHECK(cos_multiple(3) == poly({0, -3, 0, 1}));
    CHECK(cos_multiple(4) == poly({2, 0, -4, 0, 1}));
    // Pell-style sanity: D_k(y) = y*D_{k-1}(y) - D_{k-2}(y).
    for (int k = 2; k < 12; ++k)
        CHECK(cos_multiple(k) ==
              poly({0, 1}) * cos_multiple(k - 1) - cos_multiple(k - 2));
}

TEST_CASE("minimal polynomials of 2cos(pi/N)") {
    CHECK(minimal_poly_two_cos(3) == poly({-1, 1}));            // c = 1
    CHECK(minimal_poly_two_cos(4) == poly({-2, 0, 1}));         // c^2 = 2
    CHECK(minimal_poly_two_cos(5) == poly({-1, -1, 1}));        // golden ratio
    CHECK(minimal_poly_two_cos(6) == poly({-3, 0, 1}));         // c^2 = 3
    CHECK(minimal_poly_two_cos(12) == poly({1, 0, -4, 0, 1}));  // c^2 = 2 + sqrt(3)

    for (int n : {3, 4, 5, 6, 7, 9, 12, 15, 30, 60}) {
        IntPolynomial psi = minimal_poly_two_cos(n);
        CHECK(psi.degree() == euler_phi(2 * n) / 2);
        CHECK(psi.leading() == 1);
    }
}

TEST_CASE("checked arithmetic traps overflow") {
    const std::int64_t big = std::numeric_limits<std::int64_t>::max();
    CHECK(checked::add(big - 1, 1) == big);
    CHECK_THROWS_AS(checked::add(big, 1), FriezeError);
    CHECK_THROWS_AS(checked::mul(big / 2, 3), FriezeError);
    CHECK_THROWS_AS(checked::neg(std::numeric_limits<std::int64_t>::min()), FriezeError);
    try {
        checked::mul(big, big);
        FAIL("expected overflow");
    } catch (const FriezeError& e) {
        CHECK(e.kind() == ErrorKind::Overflow);
    }
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(10, 0) == 1);
    CHECK(binomial(10, 10) == 1);
    CHECK(binomial(62, 31) == 465428353255261088LL);
    CHECK(binomial(5, 7) == 0);
}

TEST_CASE("euler phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(120) == 32);
    CHECK(euler_phi(97) == 96);
}
