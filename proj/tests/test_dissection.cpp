#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include <frieze/dissection.hpp>

using namespace frieze;

namespace {
ErrorKind kind_of(int m, const std::vector<Chord>& diags) {
    try {
        PolygonDissection::validate(m, diags);
        return ErrorKind::SpecMismatch;  // placeholder: "no error"
    } catch (const DissectionError& e) {
        return e.kind();
    }
}
}  // namespace

TEST_CASE("validation accepts the classics") {
    CHECK_NOTHROW(PolygonDissection::validate(3, {}));
    CHECK_NOTHROW(PolygonDissection::validate(8, {{0, 2}, {2, 7}, {2, 6}}));
    CHECK_NOTHROW(PolygonDissection::validate(6, {{0, 3}, {0, 4}, {1, 3}}));
    CHECK(PolygonDissection::validate(5, {{2, 0}}).diagonals() ==
          std::vector<Chord>{{0, 2}});  // endpoint order normalized
}

TEST_CASE("validation rejects each malformed input distinctly") {
    CHECK_THROWS_AS(PolygonDissection::validate(2, {}), FriezeError);
    CHECK(kind_of(5, {{0, 5}}) == ErrorKind::OutOfRange);
    CHECK(kind_of(5, {{-1, 2}}) == ErrorKind::OutOfRange);
    CHECK(kind_of(5, {{1, 2}}) == ErrorKind::AdjacentEndpoints);
    CHECK(kind_of(5, {{0, 4}}) == ErrorKind::AdjacentEndpoints);  // wraps around
    CHECK(kind_of(5, {{3, 3}}) == ErrorKind::AdjacentEndpoints);
    CHECK(kind_of(5, {{0, 2}, {2, 0}}) == ErrorKind::Duplicate);
    CHECK(kind_of(6, {{0, 2}, {1, 3}}) == ErrorKind::Crossing);
    CHECK(kind_of(8, {{0, 4}, {2, 6}}) == ErrorKind::Crossing);

    try {
        PolygonDissection::validate(6, {{0, 3}, {1, 4}});
        FAIL("expected a crossing error");
    } catch (const DissectionError& e) {
        CHECK(e.kind() == ErrorKind::Crossing);
        CHECK(e.offending() == Chord{1, 4});
        CHECK(e.input_index() == 1);
    }
}

TEST_CASE("crossing predicate") {
    CHECK(chords_cross({0, 4}, {2, 6}));
    CHECK(chords_cross({2, 6}, {0, 4}));
    CHECK(!chords_cross({0, 2}, {2, 6}));   // shared endpoint touches
    CHECK(!chords_cross({0, 2}, {4, 6}));   // disjoint
    CHECK(!chords_cross({0, 4}, {1, 3}));   // nested
}

TEST_CASE("basic accessors") {
    auto d = PolygonDissection::validate(8, {{2, 6}, {0, 2}});
    CHECK(d.vertex_count() == 8);
    CHECK(d.diagonals() == std::vector<Chord>{{0, 2}, {2, 6}});  // sorted storage
    CHECK(d.has_diagonal(2, 6));
    CHECK(d.has_diagonal(6, 2));
    CHECK(!d.has_diagonal(0, 4));
    CHECK(!d.is_trivial());
    CHECK(!d.is_triangulation());
    CHECK(PolygonDissection::validate(3, {}).is_trivial());
    CHECK(PolygonDissection::validate(3, {}).is_triangulation());
    CHECK(PolygonDissection::validate(6, {{0, 3}, {0, 4}, {1, 3}}).is_triangulation());
    CHECK(to_compact(d) == "8: 0-2, 2-6");
    CHECK(to_compact(PolygonDissection::validate(3, {})) == "3:");
}

TEST_CASE("part extraction") {
    auto d = PolygonDissection::validate(8, {{0, 2}, {2, 6}});
    auto parts = extract_parts(d);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0].vertices == std::vector<int>{0, 1, 2});
    CHECK(parts[1].vertices == std::vector<int>{0, 2, 6, 7});
    CHECK(parts[2].vertices == std::vector<int>{2, 3, 4, 5, 6});
    CHECK(conductor_for(d) == 60);  // lcm(3, 4, 5)

    auto mixed = PolygonDissection::validate(8, {{0, 2}, {2, 7}, {2, 6}});
    std::vector<int> sizes;
    for (const auto& p : extract_parts(mixed)) sizes.push_back(p.size());
    std::sort(sizes.begin(), sizes.end());  // parts come back in vertex order
    CHECK(sizes == std::vector<int>{3, 3, 3, 5});
    CHECK(conductor_for(mixed) == 15);

    CHECK(extract_parts(PolygonDissection::validate(7, {})).size() == 1);
    CHECK(conductor_for(PolygonDissection::validate(7, {})) == 7);
    CHECK(conductor_for(PolygonDissection::validate(3, {})) == 3);

    // sum(size - 2) = m - 2 across a mixed batch
    for (auto& dd : {PolygonDissection::validate(9, {{0, 4}, {4, 8}}),
                     PolygonDissection::validate(6, {{1, 3}, {3, 5}})}) {
        int total = 0;
        for (const auto& p : extract_parts(dd)) total += p.size() - 2;
        CHECK(total == dd.vertex_count() - 2);
    }
}

TEST_CASE("vertex weights of the triangle-plus-square pentagon") {
    auto d = PolygonDissection::validate(5, {{0, 2}});
    Ring r4 = make_ring(4);
    auto w = vertex_weights(d, r4);
    RingElement s = RingElement::generator(r4);
    RingElement one = RingElement::one(r4);
    REQUIRE(w.size() == 5);
    CHECK(w.entries[0] == one + s);
    CHECK(w.entries[1] == one);
    CHECK(w.entries[2] == one + s);
    CHECK(w.entries[3] == s);
    CHECK(w.entries[4] == s);

    // the same weights exist in any ring whose modulus the part sizes divide
    auto w12 = vertex_weights(d, make_ring(12));
    CHECK(w12.entries[1] == RingElement::one(make_ring(12)));

    try {
        vertex_weights(d, make_ring(5));
        FAIL("square part cannot live in the N=5 ring");
    } catch (const FriezeError& e) {
        CHECK(e.kind() == ErrorKind::RingMismatch);
    }
}

TEST_CASE("quiddity weights of a triangulation count triangles") {
    auto d = PolygonDissection::validate(6, {{0, 3}, {0, 4}, {1, 3}});
    auto w = vertex_weights(d, make_ring(3));
    std::vector<std::int64_t> counts;
    for (const auto& e : w.entries) counts.push_back(e.integer_value());
    CHECK(counts == std::vector<std::int64_t>{3, 2, 1, 3, 2, 1});
}

TEST_CASE("ear of the hexagon fan") {
    auto d = PolygonDissection::validate(6, {{0, 2}, {0, 3}, {0, 4}});
    EarCut ec = find_ear_part(d);
    CHECK(ec.ear.vertices == std::vector<int>{0, 1, 2});
    CHECK(ec.anchor_first == 0);   // arc of private vertices starts after 0
    CHECK(ec.anchor_second == 2);
    CHECK(ec.cut.vertex_count() == 5);
    CHECK(ec.cut.diagonals() == std::vector<Chord>{{0, 2}, {0, 3}});
    CHECK(ec.cut_to_orig == std::vector<int>{0, 2, 3, 4, 5});
    CHECK(ec.position == 0);

    CHECK_THROWS_AS(find_ear_part(PolygonDissection::validate(9, {})), FriezeError);
}

TEST_CASE("ear prefers the lexicographically least part") {
    // both the triangle 0-1-2 and the square 0-2-3-4 touch one diagonal
    auto d = PolygonDissection::validate(5, {{0, 2}});
    EarCut ec = find_ear_part(d);
    CHECK(ec.ear.vertices == std::vector<int>{0, 1, 2});
    CHECK(ec.cut.vertex_count() == 4);
    CHECK(ec.cut.is_trivial());
}

TEST_CASE("ear insertion reproduces the weight row") {
    Ring r60 = make_ring(60);
    for (auto& d : {PolygonDissection::validate(5, {{0, 2}}),
                    PolygonDissection::validate(6, {{0, 2}, {0, 3}, {0, 4}}),
                    PolygonDissection::validate(8, {{0, 4}, {1, 4}}),
                    PolygonDissection::validate(8, {{0, 2}, {2, 6}})}) {
        CHECK(ear_insertion_consistent(d, make_ring(conductor_for(d))));
        if (60 % conductor_for(d) == 0) CHECK(ear_insertion_consistent(d, r60));
    }
    CHECK(ear_insertion_consistent(PolygonDissection::validate(4, {}), make_ring(4)));
}

TEST_CASE("dissection equality") {
    auto a = PolygonDissection::validate(6, {{0, 3}, {1, 3}});
    auto b = PolygonDissection::validate(6, {{1, 3}, {0, 3}});
    auto c = PolygonDissection::validate(6, {{0, 3}});
    CHECK(a == b);
    CHECK(!(a == c));
}
