#pragma once

#include <array>
#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace tfpl {

enum class Parity { Odd, Even };

inline const char* to_string(Parity p) { return p == Parity::Odd ? "odd" : "even"; }

/// Exhaustive enumeration above this size requires an explicit opt-in cap
/// from the caller.
inline constexpr int kDefaultSizeCap = 5;

namespace detail {

inline void check_cap(int n, int cap, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + ": size must be >= 1");
    if (n > cap)
        throw std::invalid_argument(std::string(what) + ": size " + std::to_string(n) +
                                    " exceeds cap " + std::to_string(cap));
}

}  // namespace detail

/// One potential edge of a grid, named by a vertex and a direction:
///   'E' = edge to (r, c+1), 'S' = edge to (r+1, c).
/// Square grids additionally use 'N' and 'W' for external stubs on the top
/// and left boundary.
struct EdgeSlot {
    int r = 0;
    int c = 0;
    char dir = 'E';

    friend auto operator<=>(const EdgeSlot&, const EdgeSlot&) = default;
};

inline std::string to_string(const EdgeSlot& e) {
    return "(" + std::to_string(e.r) + "," + std::to_string(e.c) + "," + e.dir + ")";
}

/// A unit square of a grid, identified by its top-left corner, with the slot
/// ids of its surrounding edges. Sides that do not exist (external cells) are
/// -1. Side order: top, right, bottom, left.
struct Cell {
    int r = 0;
    int c = 0;
    Parity parity = Parity::Odd;
    std::array<int, 4> side{-1, -1, -1, -1};

    int num_sides() const {
        int n = 0;
        for (int s : side) n += s >= 0;
        return n;
    }
};

namespace detail {

/// Shared slot/cell bookkeeping for the two grid families.
class GridBase {
public:
    int num_slots() const { return static_cast<int>(slots_.size()); }
    const std::vector<EdgeSlot>& slots() const { return slots_; }
    const EdgeSlot& slot(int id) const { return slots_[static_cast<size_t>(id)]; }

    /// Slot id, or -1 when (r, c, dir) is not a slot of this grid.
    int slot_id(int r, int c, char dir) const {
        EdgeSlot key{r, c, dir};
        auto it = std::lower_bound(slots_.begin(), slots_.end(), key);
        if (it == slots_.end() || *it != key) return -1;
        return static_cast<int>(it - slots_.begin());
    }
    int slot_id(const EdgeSlot& e) const { return slot_id(e.r, e.c, e.dir); }

    const std::vector<Cell>& cells() const { return cells_; }

    std::vector<Cell> cells(Parity parity) const {
        std::vector<Cell> out;
        for (const Cell& cell : cells_)
            if (cell.parity == parity) out.push_back(cell);
        return out;
    }

protected:
    void finish_slots() { std::sort(slots_.begin(), slots_.end()); }

    std::vector<EdgeSlot> slots_;
    std::vector<Cell> cells_;
};

}  // namespace detail

/// The triangular grid of size n: rows 1..n top-down, row r holding the
/// 2r+1 vertices (r, n+1-r) .. (r, n+1+r), plus 2n+1 vertical external edge
/// slots below the bottom row, one per column. Columns are numbered
/// 1..2n+1.
///
/// Boundary vertices: L_i = (n+1-i, i) walks the left slope from the
/// bottom-left corner upward, R_i = (i, n+1+i) walks the right slope from
/// the top downward; both are numbered left to right.
class TriGrid : public detail::GridBase {
public:
    explicit TriGrid(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("TriGrid: size must be >= 1");
        build();
    }

    /// Memoized shared instance, so many configurations can reuse one grid.
    static std::shared_ptr<const TriGrid> shared(int n) {
        static std::mutex mu;
        static std::map<int, std::shared_ptr<const TriGrid>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto& entry = cache[n];
        if (!entry) entry = std::make_shared<const TriGrid>(n);
        return entry;
    }

    int size() const { return n_; }
    int num_columns() const { return 2 * n_ + 1; }

    bool has_vertex(int r, int c) const {
        return r >= 1 && r <= n_ && c >= n_ + 1 - r && c <= n_ + 1 + r;
    }

    /// Chessboard vertex parity, anchored so every left-slope vertex is odd.
    Parity vertex_parity(int r, int c) const {
        if (!has_vertex(r, c))
            throw std::out_of_range("TriGrid: vertex (" + std::to_string(r) + "," +
                                    std::to_string(c) + ") outside grid");
        return (r + c - (n_ + 1)) % 2 == 0 ? Parity::Odd : Parity::Even;
    }

    std::pair<int, int> left_vertex(int i) const { return {n_ + 1 - i, i}; }
    std::pair<int, int> right_vertex(int i) const { return {i, n_ + 1 + i}; }

    /// 1-based boundary index if (r, c) lies on the corresponding slope,
    /// else 0.
    int left_index(int r, int c) const { return c == n_ + 1 - r ? n_ + 1 - r : 0; }
    int right_index(int r, int c) const { return c == n_ + 1 + r ? r : 0; }

    bool is_boundary_vertex(int r, int c) const {
        return left_index(r, c) > 0 || right_index(r, c) > 0;
    }

    int num_external_slots() const { return 2 * n_ + 1; }

    /// Slot id of the external edge below bottom-row column `c`.
    int external_slot(int c) const { return slot_id(n_, c, 'S'); }

    bool is_external(int slot_id_) const {
        const EdgeSlot& e = slot(slot_id_);
        return e.dir == 'S' && e.r == n_;
    }

    /// Whether the external edge in column c belongs to every valid
    /// configuration (every other one, starting with the second).
    bool external_forced_occupied(int c) const { return c % 2 == 0; }

    /// Row-major vertex list.
    const std::vector<std::pair<int, int>>& vertices() const { return vertices_; }

    /// Incident slot ids of a vertex in order W, N, E, S; -1 where absent.
    /// The S entry of a bottom-row vertex is its external slot.
    std::array<int, 4> incident_slots(int r, int c) const {
        return {slot_id(r, c - 1, 'E'), slot_id(r - 1, c, 'S'), slot_id(r, c, 'E'),
                slot_id(r, c, 'S')};
    }

private:
    void build() {
        for (int r = 1; r <= n_; ++r)
            for (int c = n_ + 1 - r; c <= n_ + 1 + r; ++c) {
                vertices_.push_back({r, c});
                if (has_vertex(r, c + 1)) slots_.push_back({r, c, 'E'});
                if (r < n_ || true) {
                    // Below the bottom row every column has an external slot;
                    // above it, every vertex has a south neighbour.
                    if (r == n_ || has_vertex(r + 1, c)) slots_.push_back({r, c, 'S'});
                }
            }
        finish_slots();

        auto add_cell = [&](int r, int c) {
            Cell cell;
            cell.r = r;
            cell.c = c;
            cell.parity = (r + c - (n_ + 1)) % 2 == 0 ? Parity::Odd : Parity::Even;
            cell.side[0] = slot_id(r, c, 'E');          // top
            cell.side[1] = slot_id(r, c + 1, 'S');      // right
            cell.side[2] = r < n_ ? slot_id(r + 1, c, 'E') : -1;  // bottom
            cell.side[3] = slot_id(r, c, 'S');          // left
            cells_.push_back(cell);
        };
        for (int r = 1; r < n_; ++r)
            for (int c = n_ + 1 - r; c <= n_ + r; ++c) add_cell(r, c);
        for (int c = 1; c <= 2 * n_; ++c) add_cell(n_, c);
    }

    int n_;
    std::vector<std::pair<int, int>> vertices_;
};

/// The square grid of size n: vertices (r, c) with 1 <= r, c <= n, internal
/// edges between neighbours, and 4n external stubs (one per boundary vertex
/// per open side). Cells are the (n+1)^2 unit squares with top-left corners
/// (r, c), 0 <= r, c <= n; the ones on the main diagonal are odd.
class SquareGrid : public detail::GridBase {
public:
    explicit SquareGrid(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("SquareGrid: size must be >= 1");
        build();
    }

    static std::shared_ptr<const SquareGrid> shared(int n) {
        static std::mutex mu;
        static std::map<int, std::shared_ptr<const SquareGrid>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto& entry = cache[n];
        if (!entry) entry = std::make_shared<const SquareGrid>(n);
        return entry;
    }

    int size() const { return n_; }

    bool has_vertex(int r, int c) const {
        return r >= 1 && r <= n_ && c >= 1 && c <= n_;
    }

    bool is_external(int slot_id_) const {
        const EdgeSlot& e = slot(slot_id_);
        if (e.dir == 'N' || e.dir == 'W') return true;
        if (e.dir == 'E') return e.c == n_;
        return e.r == n_;
    }

    /// External slot ids in clockwise order: across the top, down the right
    /// side, across the bottom right-to-left, up the left side.
    const std::vector<int>& external_slots_clockwise() const { return external_cw_; }

    /// The canonical alternating pattern: the first external edge in
    /// clockwise order is unoccupied.
    std::vector<bool> canonical_external_pattern() const {
        std::vector<bool> occ(external_cw_.size(), false);
        for (size_t i = 1; i < occ.size(); i += 2) occ[i] = true;
        return occ;
    }

    const std::vector<std::pair<int, int>>& vertices() const { return vertices_; }

    /// Incident slot ids in order W, N, E, S (externals included).
    std::array<int, 4> incident_slots(int r, int c) const {
        int w = c == 1 ? slot_id(r, 1, 'W') : slot_id(r, c - 1, 'E');
        int nn = r == 1 ? slot_id(1, c, 'N') : slot_id(r - 1, c, 'S');
        return {w, nn, slot_id(r, c, 'E'), slot_id(r, c, 'S')};
    }

private:
    // Horizontal edge (r, c)-(r, c+1) of the extended grid; stubs when one
    // endpoint is outside. -1 when the edge does not exist.
    int hedge(int r, int c) const {
        if (r < 1 || r > n_) return -1;
        if (c == 0) return slot_id(r, 1, 'W');
        if (c == n_) return slot_id(r, n_, 'E');
        if (c >= 1 && c < n_) return slot_id(r, c, 'E');
        return -1;
    }

    // Vertical edge (r, c)-(r+1, c) of the extended grid.
    int vedge(int r, int c) const {
        if (c < 1 || c > n_) return -1;
        if (r == 0) return slot_id(1, c, 'N');
        if (r == n_) return slot_id(n_, c, 'S');
        if (r >= 1 && r < n_) return slot_id(r, c, 'S');
        return -1;
    }

    void build() {
        for (int r = 1; r <= n_; ++r)
            for (int c = 1; c <= n_; ++c) {
                vertices_.push_back({r, c});
                if (c < n_) slots_.push_back({r, c, 'E'});
                if (r < n_) slots_.push_back({r, c, 'S'});
            }
        for (int c = 1; c <= n_; ++c) {
            slots_.push_back({1, c, 'N'});
            slots_.push_back({n_, c, 'S'});
        }
        for (int r = 1; r <= n_; ++r) {
            slots_.push_back({r, 1, 'W'});
            slots_.push_back({r, n_, 'E'});
        }
        finish_slots();

        for (int r = 0; r <= n_; ++r)
            for (int c = 0; c <= n_; ++c) {
                Cell cell;
                cell.r = r;
                cell.c = c;
                cell.parity = (r + c) % 2 == 0 ? Parity::Odd : Parity::Even;
                cell.side[0] = hedge(r, c);
                cell.side[1] = vedge(r, c + 1);
                cell.side[2] = hedge(r + 1, c);
                cell.side[3] = vedge(r, c);
                if (cell.num_sides() > 0) cells_.push_back(cell);
            }
        if (cells_.size() != static_cast<size_t>((n_ + 1) * (n_ + 1)))
            throw std::logic_error("SquareGrid: unexpected cell count");

        for (int c = 1; c <= n_; ++c) external_cw_.push_back(slot_id(1, c, 'N'));
        for (int r = 1; r <= n_; ++r) external_cw_.push_back(slot_id(r, n_, 'E'));
        for (int c = n_; c >= 1; --c) external_cw_.push_back(slot_id(n_, c, 'S'));
        for (int r = n_; r >= 1; --r) external_cw_.push_back(slot_id(r, 1, 'W'));
    }

    int n_;
    std::vector<std::pair<int, int>> vertices_;
    std::vector<int> external_cw_;
};

}  // namespace tfpl
