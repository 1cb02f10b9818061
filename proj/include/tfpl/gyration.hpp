#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "tfpl/config.hpp"

namespace tfpl {

/// Occupancy of one cell's sides in the order top, right, bottom, left.
/// `present` marks which sides exist (external cells lack the bottom one).
struct CellState {
    std::array<bool, 4> present{true, true, true, true};
    std::array<bool, 4> occupied{false, false, false, false};

    friend bool operator==(const CellState&, const CellState&) = default;
};

/// The local move: a cell with exactly two occupied sides lying opposite each
/// other is left alone; every other cell has occupancy of its (present)
/// sides complemented. An involution on every cell.
inline CellState gyrate_cell(const CellState& c) {
    bool vertical_pair = c.occupied[0] && c.occupied[2] && !c.occupied[1] && !c.occupied[3];
    bool horizontal_pair = c.occupied[1] && c.occupied[3] && !c.occupied[0] && !c.occupied[2];
    if (vertical_pair || horizontal_pair) return c;
    CellState out = c;
    for (int k = 0; k < 4; ++k)
        out.occupied[k] = c.present[k] && !c.occupied[k];
    return out;
}

namespace detail {

/// Gyrates every cell of the given parity and writes the result one column
/// over (dc = +1 for the left gyration, -1 for the right one). Slots that lie
/// in no active cell are exactly the ones incident to the slope that gets
/// deleted, so the sweep plus the supplied boundary stubs covers the whole
/// output.
inline TfplConfig gyration_sweep(const TfplConfig& f, Parity active, int dc,
                                 const std::vector<int>& stub_slots) {
    const TriGrid& g = f.grid();
    std::vector<bool> out(static_cast<size_t>(g.num_slots()), false);
    for (const Cell& cell : g.cells()) {
        if (cell.parity != active) continue;
        CellState state;
        for (int k = 0; k < 4; ++k) {
            state.present[k] = cell.side[k] >= 0;
            state.occupied[k] = cell.side[k] >= 0 && f.has(cell.side[k]);
        }
        CellState image = gyrate_cell(state);
        for (int k = 0; k < 4; ++k) {
            if (cell.side[k] < 0) continue;
            const EdgeSlot& e = g.slot(cell.side[k]);
            int target = g.slot_id(e.r, e.c + dc, e.dir);
            if (target < 0) throw std::logic_error("gyration sweep left the grid");
            out[static_cast<size_t>(target)] = image.occupied[k];
        }
    }
    for (int s : stub_slots) out[static_cast<size_t>(s)] = true;
    return TfplConfig(f.grid_ptr(), std::move(out));
}

}  // namespace detail

/// Left gyration of f with respect to u_minus, which must satisfy
/// u_minus ->h u for f's left boundary u. The ones of u_minus prescribe the
/// edges at the new left boundary: the j-th one of u_minus sits at position
/// i, and depending on whether the j-th one of u sits at i or i-1 the new
/// L_i keeps a horizontal or vertical edge. Odd cells are gyrated and the
/// construction shifts one column right, dropping the old right slope.
///
/// The image is again valid, with boundary (u_minus, v_plus; w) where
/// v ->v v_plus and w is unchanged.
inline TfplConfig wieland_left(const TfplConfig& f, const BinaryWord& u_minus) {
    const TriGrid& g = f.grid();
    BinaryWord u = f.boundary().u;
    if (!is_horizontal_strip(u_minus, u))
        throw std::invalid_argument("wieland_left: " + u_minus.str() +
                                    " is not a horizontal-strip predecessor of " +
                                    u.str());
    std::vector<int> stubs;
    auto ones_minus = u_minus.one_positions();
    auto ones = u.one_positions();
    for (size_t j = 0; j < ones_minus.size(); ++j) {
        int i = ones_minus[j];
        auto [lr, lc] = g.left_vertex(i);
        if (ones[j] == i)
            stubs.push_back(g.slot_id(lr, lc, 'E'));
        else if (ones[j] == i - 1)
            stubs.push_back(g.slot_id(lr, lc, 'S'));
        else
            throw std::logic_error("wieland_left: strip characterization violated");
    }
    return detail::gyration_sweep(f, Parity::Odd, +1, stubs);
}

inline TfplConfig wieland_left(const TfplConfig& f) {
    return wieland_left(f, f.boundary().u);
}

/// Mirror construction: v_minus ->v v, even cells are gyrated, the
/// construction shifts one column left and the old left slope is dropped.
/// The zeros of v_minus prescribe the edges at the new right boundary.
/// The image has boundary (u_plus, v_minus; w) with u ->h u_plus.
inline TfplConfig wieland_right(const TfplConfig& f, const BinaryWord& v_minus) {
    const TriGrid& g = f.grid();
    int n = g.size();
    BinaryWord v = f.boundary().v;
    if (!is_vertical_strip(v_minus, v))
        throw std::invalid_argument("wieland_right: " + v_minus.str() +
                                    " is not a vertical-strip predecessor of " +
                                    v.str());
    std::vector<int> stubs;
    auto zeros_minus = v_minus.zero_positions();
    auto zeros = v.zero_positions();
    for (size_t j = 0; j < zeros_minus.size(); ++j) {
        int i = zeros_minus[j];
        if (zeros[j] == i)
            stubs.push_back(g.slot_id(i, n + i, 'E'));
        else if (zeros[j] == i + 1)
            stubs.push_back(g.slot_id(i, n + 1 + i, 'S'));
        else
            throw std::logic_error("wieland_right: strip characterization violated");
    }
    return detail::gyration_sweep(f, Parity::Even, -1, stubs);
}

inline TfplConfig wieland_right(const TfplConfig& f) {
    return wieland_right(f, f.boundary().v);
}

/// The right boundary of any left-gyration image of f, read off f directly:
/// a horizontal edge at R_i forces position i to zero, a vertical edge at
/// R_i forces position i+1 to zero, everything else is one.
inline BinaryWord predict_right_boundary(const TfplConfig& f) {
    const TriGrid& g = f.grid();
    int n = g.size();
    std::string bits(static_cast<size_t>(n), '1');
    for (int i = 1; i <= n; ++i) {
        if (f.has(i, n + i, 'E')) bits[static_cast<size_t>(i - 1)] = '0';
        if (i < n && f.has(i, n + 1 + i, 'S')) bits[static_cast<size_t>(i)] = '0';
    }
    return BinaryWord(bits);
}

/// Mirror prediction for right gyration: the left boundary of the image. A
/// horizontal edge at L_i forces position i to one, a vertical edge below
/// L_i forces position i-1 to one, everything else is zero.
inline BinaryWord predict_left_boundary(const TfplConfig& f) {
    const TriGrid& g = f.grid();
    int n = g.size();
    std::string bits(static_cast<size_t>(n), '0');
    for (int i = 1; i <= n; ++i) {
        auto [lr, lc] = g.left_vertex(i);
        if (f.has(lr, lc, 'E')) bits[static_cast<size_t>(i - 1)] = '1';
        if (i > 1 && f.has(lr, lc, 'S')) bits[static_cast<size_t>(i - 2)] = '1';
    }
    return BinaryWord(bits);
}

/// Whether left gyration changes the right boundary, i.e. whether some
/// right-slope vertex is incident to a vertical edge.
inline bool boundary_changed(const TfplConfig& f) {
    const TriGrid& g = f.grid();
    int n = g.size();
    for (int i = 1; i < n; ++i)
        if (f.has(i, n + 1 + i, 'S')) return true;
    return false;
}

/// A configuration is stable when left gyration with respect to its own left
/// boundary fixes it.
inline bool is_stable(const TfplConfig& f) { return wieland_left(f) == f; }

struct OrbitResult {
    TfplConfig stable;
    int steps = 0;
    std::vector<BoundaryTriple> trail;  // boundary of every iterate, start included
};

/// Applies plain left gyration until the configuration stops moving. For
/// size n this takes at most 2n-1 applications; exceeding the bound means
/// the invariants are broken, which is reported instead of looping.
inline OrbitResult iterate_to_stable(const TfplConfig& f) {
    int limit = 2 * f.size() - 1;
    OrbitResult result{f, 0, {f.boundary()}};
    TfplConfig current = f;
    for (int m = 0; m <= limit; ++m) {
        TfplConfig next = wieland_left(current);
        if (next == current) {
            result.stable = current;
            result.steps = m;
            return result;
        }
        result.trail.push_back(next.boundary());
        current = next;
    }
    throw std::logic_error("iterate_to_stable: not stable after " +
                           std::to_string(limit) + " applications");
}

}  // namespace tfpl
