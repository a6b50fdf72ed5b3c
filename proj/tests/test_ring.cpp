#include <catch2/catch_amalgamated.hpp>

#include <string>

#include <frieze/ring.hpp>

using namespace frieze;

TEST_CASE("ring construction") {
    Ring r3 = make_ring(3);
    CHECK(r3->degree == 1);
    Ring r4 = make_ring(4);
    CHECK(r4->degree == 2);
    Ring r60 = make_ring(60);
    CHECK(r60->degree == 16);
    CHECK(r60->conductor == 60);
    CHECK_THROWS_AS(make_ring(2), FriezeError);
}

TEST_CASE("arithmetic against known quadratic relations") {
    Ring r4 = make_ring(4);
    RingElement s = RingElement::generator(r4);  // sqrt(2)
    CHECK(s * s == RingElement::constant(r4, 2));
    CHECK((s + 1) * (s - 1) == RingElement::one(r4));
    CHECK(s * 3 - s - s - s == RingElement::zero(r4));

    Ring r5 = make_ring(5);
    RingElement t = RingElement::generator(r5);  // golden ratio
    CHECK(t * t == t + 1);
    CHECK(t * t * t == t * 2 + 1);

    Ring r3 = make_ring(3);
    RingElement c = RingElement::generator(r3);
    CHECK(c == RingElement::one(r3));  // 2cos(pi/3) = 1 collapses to an integer

    CHECK_THROWS_AS(s + RingElement::generator(r5), FriezeError);  // mixed rings
}

TEST_CASE("integer detection") {
    Ring r4 = make_ring(4);
    RingElement s = RingElement::generator(r4);
    CHECK(!s.is_integer());
    CHECK((s * s).is_integer());
    CHECK((s * s).integer_value() == 2);
    CHECK_THROWS_AS(s.integer_value(), FriezeError);
}

TEST_CASE("embedding smaller-index weights") {
    Ring r60 = make_ring(60);
    RingElement s = embed_part_weight(4, r60);
    RingElement t = embed_part_weight(5, r60);
    CHECK(s * s == RingElement::constant(r60, 2));
    CHECK(t * t == t + 1);
    CHECK(embed_part_weight(3, r60) == RingElement::one(r60));
    CHECK(embed_part_weight(3, make_ring(5)) == RingElement::one(make_ring(5)));
    CHECK(embed_part_weight(60, r60) == RingElement::generator(r60));
    CHECK_THROWS_AS(embed_part_weight(7, r60), FriezeError);  // 7 does not divide 60

    // 2cos(k pi / N) via the multiple-angle recurrence: squares check out.
    RingElement u = two_cos_pi_multiple(make_ring(5), 3);  // 2cos(108 deg) = 1 - t
    RingElement tt = RingElement::generator(make_ring(5));
    CHECK(u == RingElement::one(make_ring(5)) - tt);
}

TEST_CASE("exact sign") {
    Ring r4 = make_ring(4);
    RingElement s = RingElement::generator(r4);
    CHECK(sign(RingElement::zero(r4)) == Sign::Zero);
    CHECK(sign(s * s - 2) == Sign::Zero);  // structural zero after reduction
    CHECK(sign(s) == Sign::Positive);
    CHECK(sign(s - 1) == Sign::Positive);
    CHECK(sign(s - 2) == Sign::Negative);
    CHECK(sign(-s) == Sign::Negative);
    CHECK(std::string(to_string(sign(s))) == "Positive");

    Ring r60 = make_ring(60);
    RingElement st = embed_part_weight(4, r60) + embed_part_weight(5, r60);
    CHECK(sign(st + 1 - 2) == Sign::Positive);  // 1 + sqrt2 + golden - 2 > 0
}

TEST_CASE("sign needs precision escalation on near-zero values") {
    // F(90)*phi - F(91) is about -5.5e-19 while the terms are about 4.7e18,
    // far below what the first 64-bit interval pass can separate.
    Ring r5 = make_ring(5);
    RingElement t = RingElement::generator(r5);
    const std::int64_t f90 = 2880067194370816120LL;
    const std::int64_t f91 = 4660046610375530309LL;
    CHECK(sign(t * f90 - f91) == Sign::Negative);
    CHECK(sign(RingElement::constant(r5, f91) - t * f90) == Sign::Positive);
}

TEST_CASE("interval evaluation helper encloses true zeros tightly") {
    for (std::int64_t n : {4LL, 5LL, 12LL, 60LL}) {
        const IntPolynomial psi = minimal_poly_two_cos(n);
        CHECK(detail::encloses_zero_within(psi.coeffs(), n, 100));
    }
    // and rejects a clear non-zero
    CHECK(!detail::encloses_zero_within({1, 1}, 4, 100));
}

TEST_CASE("decimal rendering") {
    Ring r4 = make_ring(4);
    RingElement s = RingElement::generator(r4);
    CHECK(decimal(s, 3) == "1.414");
    CHECK(decimal(s + 1, 2) == "2.41");
    CHECK(decimal(RingElement::constant(r4, -2), 2) == "-2.00");

    Ring r5 = make_ring(5);
    CHECK(decimal(RingElement::generator(r5), 5) == "1.61803");
}

TEST_CASE("power basis strings") {
    Ring r60 = make_ring(60);
    RingElement c = RingElement::generator(r60);
    CHECK(c.power_basis_string() == "c");
    CHECK((c * c * c - c * 2).power_basis_string() == "c^3-2c");
    CHECK(RingElement::zero(r60).power_basis_string() == "0");
}
