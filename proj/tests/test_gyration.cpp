#include <catch2/catch_amalgamated.hpp>

#include "tfpl/gyration.hpp"
#include "tfpl/verify.hpp"

using namespace tfpl;

namespace {

TfplConfig make(int n, std::vector<EdgeSlot> edges) {
    return TfplConfig::from_edges(n, edges);
}

TfplConfig left_hooked1() { return make(1, {{1, 1, 'E'}, {1, 2, 'S'}}); }
TfplConfig right_hooked1() { return make(1, {{1, 2, 'E'}, {1, 2, 'S'}}); }

TfplConfig drifter2() {
    return make(2, {{1, 2, 'E'}, {1, 3, 'S'}, {1, 4, 'S'}, {2, 2, 'E'},
                    {2, 2, 'S'}, {2, 4, 'S'}});
}

CellState state(std::initializer_list<int> occupied_sides) {
    CellState s;
    for (int k : occupied_sides) s.occupied[static_cast<size_t>(k)] = true;
    return s;
}

// Left-right mirror of a configuration; columns map to 2n+2-c, so an east
// edge from (r, c) becomes the east edge from (r, 2n+1-c) and a south edge
// keeps its endpoints' mirrored column.
TfplConfig mirrored(const TfplConfig& f) {
    int n = f.size();
    std::vector<EdgeSlot> edges;
    for (const EdgeSlot& e : f.edge_list()) {
        if (e.dir == 'E')
            edges.push_back({e.r, 2 * n + 1 - e.c, 'E'});
        else
            edges.push_back({e.r, 2 * n + 2 - e.c, 'S'});
    }
    return TfplConfig::from_edges(n, edges);
}

BinaryWord mirrored(const BinaryWord& w) {
    std::string bits;
    for (int i = w.size() - 1; i >= 0; --i) bits += w.bit(i) ? '0' : '1';
    return BinaryWord(bits);
}

}  // namespace

TEST_CASE("local move on cells") {
    // Two occupied opposite sides: invariant. Side order: top right bottom left.
    CHECK(gyrate_cell(state({1, 3})) == state({1, 3}));
    CHECK(gyrate_cell(state({0, 2})) == state({0, 2}));
    // Everything else complements.
    CHECK(gyrate_cell(state({0, 3})) == state({1, 2}));
    CHECK(gyrate_cell(state({})) == state({0, 1, 2, 3}));
    CHECK(gyrate_cell(state({0, 1, 2, 3})) == state({}));

    // Involution over all 16 interior states.
    for (int mask = 0; mask < 16; ++mask) {
        CellState s;
        for (int k = 0; k < 4; ++k) s.occupied[static_cast<size_t>(k)] = mask >> k & 1;
        CHECK(gyrate_cell(gyrate_cell(s)) == s);
    }
    // External cells miss the bottom side. In a valid configuration exactly
    // one of their two external sides is occupied, and on those states the
    // move is again an involution.
    for (int mask : {2, 8, 3, 9}) {  // right / left external, with or without top
        CellState s;
        s.present[2] = false;
        for (int k = 0; k < 4; ++k) s.occupied[static_cast<size_t>(k)] = mask >> k & 1;
        CHECK(gyrate_cell(gyrate_cell(s)) == s);
    }
}

TEST_CASE("size-1 configurations are stable") {
    for (TfplConfig f : {left_hooked1(), right_hooked1()}) {
        CHECK(wieland_left(f) == f);
        CHECK(wieland_right(f) == f);
        CHECK(is_stable(f));
        auto orbit = iterate_to_stable(f);
        CHECK(orbit.steps == 0);
        CHECK(orbit.stable == f);
    }
}

TEST_CASE("left gyration of the size-2 drifter configuration") {
    TfplConfig f = drifter2();
    REQUIRE(f.boundary() ==
            BoundaryTriple{BinaryWord("01"), BinaryWord("01"), BinaryWord("10")});

    CHECK(boundary_changed(f));
    CHECK(predict_right_boundary(f) == BinaryWord("10"));
    CHECK_FALSE(is_stable(f));

    TfplConfig g = wieland_left(f);
    TfplConfig expected = make(2, {{1, 2, 'E'}, {1, 3, 'S'}, {2, 2, 'E'},
                                   {2, 4, 'E'}, {2, 2, 'S'}, {2, 4, 'S'}});
    CHECK(g == expected);
    CHECK(g.validate().ok);
    CHECK(g.boundary() ==
          BoundaryTriple{BinaryWord("01"), BinaryWord("10"), BinaryWord("10")});
    CHECK(g.drifters().empty());
    CHECK(is_stable(g));

    // Right gyration with respect to f's right boundary inverts the move.
    CHECK(wieland_right(g, BinaryWord("01")) == f);

    auto orbit = iterate_to_stable(f);
    CHECK(orbit.steps == 1);
    CHECK(orbit.stable == g);
    CHECK(orbit.trail.size() == 2);
}

TEST_CASE("gyration rejects words that are not strip predecessors") {
    TfplConfig f = drifter2();  // boundary (01,01;10)
    CHECK_THROWS_AS(wieland_left(f, BinaryWord("10")), std::invalid_argument);
    CHECK_THROWS_AS(wieland_right(f, BinaryWord("10")), std::invalid_argument);
    CHECK_THROWS_AS(wieland_left(f, BinaryWord("011")), std::invalid_argument);
}

TEST_CASE("boundary transport, predictions and inverse pairs, exhaustive n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        for (const TfplConfig& f : enumerate_tfpl(n)) {
            BoundaryTriple b = f.boundary();
            for (const BinaryWord& um : horizontal_strip_predecessors(b.u)) {
                TfplConfig g = wieland_left(f, um);
                REQUIRE(g.validate().ok);
                BoundaryTriple gb = g.boundary();
                CHECK(gb.u == um);
                CHECK(gb.w == b.w);
                CHECK(is_vertical_strip(b.v, gb.v));
                CHECK(gb.v == predict_right_boundary(f));
                CHECK(wieland_right(g, b.v) == f);
            }
            for (const BinaryWord& vm : vertical_strip_predecessors(b.v)) {
                TfplConfig g = wieland_right(f, vm);
                REQUIRE(g.validate().ok);
                BoundaryTriple gb = g.boundary();
                CHECK(gb.v == vm);
                CHECK(gb.w == b.w);
                CHECK(is_horizontal_strip(b.u, gb.u));
                CHECK(gb.u == predict_left_boundary(f));
                CHECK(wieland_left(g, b.u) == f);
            }
        }
    }
}

TEST_CASE("stability equivalences and orbit bound, exhaustive n <= 4") {
    const int expected_max_steps[] = {0, 0, 2, 3, 4};
    for (int n = 1; n <= 4; ++n) {
        int max_steps = 0;
        for (const TfplConfig& f : enumerate_tfpl(n)) {
            bool wl_fixed = is_stable(f);
            CHECK(wl_fixed == f.drifters().empty());
            CHECK(wl_fixed == (wieland_right(f) == f));
            CHECK(boundary_changed(f) ==
                  (predict_right_boundary(f) != f.boundary().v));
            // Composing plain left and plain right gyration returns f exactly
            // when no right-slope vertex carries a vertical edge.
            CHECK((wieland_right(wieland_left(f)) == f) == !boundary_changed(f));

            auto orbit = iterate_to_stable(f);
            CHECK(orbit.steps <= 2 * n - 1);
            CHECK(orbit.stable.drifters().empty());
            CHECK(is_stable(orbit.stable));
            CHECK(orbit.stable.boundary().u == f.boundary().u);
            CHECK(orbit.stable.boundary().w == f.boundary().w);
            max_steps = std::max(max_steps, orbit.steps);
        }
        CHECK(max_steps == expected_max_steps[n]);
    }
}

TEST_CASE("drifters sweep right under left gyration, exhaustive n <= 4") {
    for (int n = 2; n <= 4; ++n) {
        for (const TfplConfig& f : enumerate_tfpl(n)) {
            auto drifters = f.drifters();
            if (drifters.empty()) continue;
            int leftmost = drifters.front().c;
            for (const EdgeSlot& e : drifters) leftmost = std::min(leftmost, e.c);
            for (const EdgeSlot& e : wieland_left(f).drifters())
                CHECK(e.c > leftmost);
        }
    }
}

TEST_CASE("right gyration agrees with the mirrored left gyration, n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        for (const TfplConfig& f : enumerate_tfpl(n)) {
            BoundaryTriple b = f.boundary();
            for (const BinaryWord& vm : vertical_strip_predecessors(b.v)) {
                TfplConfig direct = wieland_right(f, vm);
                TfplConfig via_mirror =
                    mirrored(wieland_left(mirrored(f), mirrored(vm)));
                CHECK(direct == via_mirror);
            }
        }
    }
}
