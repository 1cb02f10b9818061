#include <catch2/catch_amalgamated.hpp>

#include "tfpl/config.hpp"

using namespace tfpl;

namespace {

TfplConfig make(int n, std::vector<EdgeSlot> edges) {
    return TfplConfig::from_edges(n, edges);
}

// The two size-1 configurations: the path from the occupied external edge
// hooks either left or right.
TfplConfig left_hooked1() { return make(1, {{1, 1, 'E'}, {1, 2, 'S'}}); }
TfplConfig right_hooked1() { return make(1, {{1, 2, 'E'}, {1, 2, 'S'}}); }

// Size-2 configuration with boundary (01,01;10) containing one drifter, the
// vertical edge hanging from the top right-slope vertex.
TfplConfig drifter2() {
    return make(2, {{1, 2, 'E'}, {1, 3, 'S'}, {1, 4, 'S'}, {2, 2, 'E'},
                    {2, 2, 'S'}, {2, 4, 'S'}});
}

// Size-2 configuration with boundary (00,00;00): both paths run to the right
// slope and the configuration is drifter-free.
TfplConfig plain2() {
    return make(2, {{1, 3, 'E'}, {1, 3, 'S'}, {2, 2, 'E'}, {2, 4, 'E'},
                    {2, 2, 'S'}, {2, 4, 'S'}});
}

}  // namespace

TEST_CASE("size-1 configurations validate and expose their boundaries") {
    TfplConfig l = left_hooked1();
    CHECK(l.validate().ok);
    CHECK(l.boundary() == BoundaryTriple{BinaryWord("1"), BinaryWord("1"), BinaryWord("1")});

    TfplConfig r = right_hooked1();
    CHECK(r.validate().ok);
    CHECK(r.boundary() == BoundaryTriple{BinaryWord("0"), BinaryWord("0"), BinaryWord("0")});

    CHECK(l.drifters().empty());
    CHECK(r.drifters().empty());
}

TEST_CASE("validation reports the first violated rule") {
    // External edge alone: the middle vertex ends up with degree 1.
    TfplConfig only_ext = make(1, {{1, 2, 'S'}});
    auto res = only_ext.validate();
    CHECK_FALSE(res.ok);
    CHECK(res.rule == "interior-degree");

    // Missing forced external edge.
    TfplConfig no_ext = make(1, {{1, 1, 'E'}});
    CHECK(no_ext.validate().rule == "external-pattern");

    // Occupied external in an odd column.
    TfplConfig odd_ext = make(1, {{1, 1, 'S'}, {1, 2, 'S'}, {1, 1, 'E'}});
    CHECK(odd_ext.validate().rule == "external-pattern");

    // Side vertex of degree 2.
    TfplConfig deg2 = make(2, {{1, 2, 'E'}, {1, 2, 'S'}, {2, 2, 'S'}, {2, 4, 'S'},
                               {1, 3, 'S'}, {2, 2, 'E'}, {2, 3, 'E'}, {2, 4, 'E'}});
    CHECK(deg2.validate().rule == "side-vertex-degree");

    // Degrees all fine, but one path joins the two top right-slope vertices.
    TfplConfig rr = make(3, {{1, 3, 'E'}, {1, 4, 'S'}, {1, 5, 'S'}, {2, 3, 'E'},
                             {2, 5, 'E'}, {2, 3, 'S'}, {3, 2, 'E'}, {3, 4, 'E'},
                             {3, 5, 'E'}, {3, 2, 'S'}, {3, 4, 'S'}, {3, 6, 'S'}});
    auto res_rr = rr.validate();
    CHECK_FALSE(res_rr.ok);
    CHECK(res_rr.rule == "same-side-path");
}

TEST_CASE("size-2 fixtures") {
    TfplConfig d = drifter2();
    REQUIRE(d.validate().ok);
    CHECK(d.boundary() ==
          BoundaryTriple{BinaryWord("01"), BinaryWord("01"), BinaryWord("10")});
    auto dr = d.drifters();
    REQUIRE(dr.size() == 1);
    CHECK(dr[0] == EdgeSlot{1, 4, 'S'});

    TfplConfig p = plain2();
    REQUIRE(p.validate().ok);
    CHECK(p.boundary() ==
          BoundaryTriple{BinaryWord("00"), BinaryWord("00"), BinaryWord("00")});
    CHECK(p.drifters().empty());
}

TEST_CASE("excess") {
    CHECK(excess({BinaryWord("0101111"), BinaryWord("0011111"), BinaryWord("1101101")}) == 5);
    CHECK(excess({BinaryWord("1"), BinaryWord("1"), BinaryWord("1")}) == 0);
    CHECK(excess({BinaryWord("0"), BinaryWord("0"), BinaryWord("0")}) == 0);
    CHECK(excess({BinaryWord("10"), BinaryWord("10"), BinaryWord("01")}) == -2);
}

TEST_CASE("boundary triple parsing and formatting") {
    auto b = BoundaryTriple::parse("01,01,10");
    CHECK(b.u.str() == "01");
    CHECK(b.to_string() == "(01,01;10)");
    CHECK(b.key() == "01|01|10");
    CHECK_THROWS_AS(BoundaryTriple::parse("01,01"), std::invalid_argument);
    CHECK_THROWS_AS(BoundaryTriple::parse("01,01,100"), std::invalid_argument);
}

TEST_CASE("serialization round trip") {
    TfplConfig l = left_hooked1();
    CHECK(l.serialize() == R"({"n":1,"edges":[[1,1,"E"],[1,2,"S"]]})");
    CHECK(TfplConfig::deserialize(l.serialize()) == l);

    TfplConfig d = drifter2();
    CHECK(TfplConfig::deserialize(d.serialize()) == d);

    // Edges come out sorted no matter the input order.
    TfplConfig scrambled = make(1, {{1, 2, 'S'}, {1, 1, 'E'}});
    CHECK(scrambled.serialize() == l.serialize());
}

TEST_CASE("deserialization errors") {
    CHECK_THROWS_AS(TfplConfig::deserialize("not json"), SerializationError);
    CHECK_THROWS_AS(TfplConfig::deserialize(R"({"n":1})"), SerializationError);
    CHECK_THROWS_AS(TfplConfig::deserialize(R"({"n":0,"edges":[]})"), SerializationError);
    CHECK_THROWS_AS(TfplConfig::deserialize(R"({"n":1,"edges":[[1,3,"E"]]})"),
                    SerializationError);
    CHECK_THROWS_AS(TfplConfig::deserialize(R"({"n":1,"edges":[[1,1,"E"],[1,1,"E"]]})"),
                    SerializationError);
    CHECK_THROWS_AS(TfplConfig::deserialize(R"({"n":1,"edges":[[1,1,"N"]]})"),
                    SerializationError);
    CHECK_THROWS_AS(TfplConfig::deserialize(R"({"n":1,"edges":[],"x":1})"),
                    SerializationError);
}
