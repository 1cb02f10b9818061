#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tfpl/config.hpp"
#include "tfpl/gyration.hpp"
#include "tfpl/words.hpp"

namespace tfpl {

namespace detail {

/// Union-find over vertices with rollback, tracking for every component the
/// boundary terminals it has picked up (left-slope vertex, right-slope
/// vertex, or external edge). A component can hold at most two terminals;
/// collecting two from the same slope is the forbidden same-side path.
class PathTracker {
public:
    enum Kind : int16_t { L = 0, R = 1, Ext = 2 };

    struct TermSet {
        int8_t count = 0;
        std::array<int16_t, 2> items{0, 0};
    };

    explicit PathTracker(int vertices)
        : parent_(vertices), terms_(vertices) {
        for (int i = 0; i < vertices; ++i) parent_[i] = i;
        size_.assign(static_cast<size_t>(vertices), 1);
    }

    static int16_t encode(Kind kind, int index) {
        return static_cast<int16_t>(kind * 4096 + index);
    }
    static Kind kind_of(int16_t item) { return static_cast<Kind>(item / 4096); }
    static int index_of(int16_t item) { return item % 4096; }

    int find(int x) const {
        while (parent_[static_cast<size_t>(x)] != x) x = parent_[static_cast<size_t>(x)];
        return x;
    }

    size_t mark() const { return journal_.size(); }

    void rollback(size_t mark) {
        while (journal_.size() > mark) {
            const Op& op = journal_.back();
            if (op.child >= 0) {
                parent_[static_cast<size_t>(op.child)] = op.child;
                size_[static_cast<size_t>(op.root)] -= size_[static_cast<size_t>(op.child)];
            }
            terms_[static_cast<size_t>(op.root)] = op.saved;
            journal_.pop_back();
        }
    }

    const TermSet& terms(int root) const { return terms_[static_cast<size_t>(root)]; }

    /// Adds a terminal to the component of x; the component must not be full.
    void add_terminal(int x, Kind kind, int index) {
        int root = find(x);
        journal_.push_back({-1, root, terms_[static_cast<size_t>(root)]});
        TermSet& t = terms_[static_cast<size_t>(root)];
        t.items[static_cast<size_t>(t.count++)] = encode(kind, index);
    }

    /// Merges the components of a and b (no-op for a cycle-closing edge).
    void merge(int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return;
        if (size_[static_cast<size_t>(ra)] < size_[static_cast<size_t>(rb)]) std::swap(ra, rb);
        journal_.push_back({rb, ra, terms_[static_cast<size_t>(ra)]});
        parent_[static_cast<size_t>(rb)] = ra;
        size_[static_cast<size_t>(ra)] += size_[static_cast<size_t>(rb)];
        TermSet& ta = terms_[static_cast<size_t>(ra)];
        const TermSet& tb = terms_[static_cast<size_t>(rb)];
        for (int k = 0; k < tb.count; ++k)
            ta.items[static_cast<size_t>(ta.count++)] = tb.items[static_cast<size_t>(k)];
    }

private:
    struct Op {
        int child;  // -1 when only terminals changed
        int root;
        TermSet saved;
    };

    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<TermSet> terms_;
    std::vector<Op> journal_;
};

/// Row-by-row backtracking enumeration. Vertices are visited in row-major
/// order; at each vertex its east and south edges are decided, so the vertex
/// degree is final on arrival and exact constraints prune immediately. The
/// path tracker rejects same-side paths as soon as two components carrying
/// terminals from one slope would merge, and checks path classifications
/// against a boundary filter while searching.
class TfplEnumerator {
public:
    TfplEnumerator(std::shared_ptr<const TriGrid> grid,
                   const std::optional<BoundaryTriple>& filter)
        : grid_(std::move(grid)),
          n_(grid_->size()),
          tracker_(static_cast<int>(grid_->vertices().size())),
          filter_(filter) {
        if (filter_ && filter_->u.size() != n_)
            throw std::invalid_argument("enumeration filter size mismatch");
        edges_.assign(static_cast<size_t>(grid_->num_slots()), false);
        degree_.assign(grid_->vertices().size(), 0);
        for (int c = 1; c <= grid_->num_columns(); ++c) {
            if (!grid_->external_forced_occupied(c)) continue;
            edges_[static_cast<size_t>(grid_->external_slot(c))] = true;
            int vid = vertex_id(n_, c);
            degree_[static_cast<size_t>(vid)] = 1;
            tracker_.add_terminal(vid, PathTracker::Ext, c / 2);
        }
    }

    /// Emits every configuration; the callback returns false to stop early.
    void run(const std::function<bool(TfplConfig&&)>& emit) {
        emit_ = &emit;
        stopped_ = false;
        dfs(0);
    }

private:
    int vertex_id(int r, int c) const { return r * r - 1 + c - (n_ + 1 - r); }

    int cap(int r, int c) const {
        int li = grid_->left_index(r, c);
        if (li > 0) return filter_ ? filter_->u.bit(li - 1) : 1;
        int ri = grid_->right_index(r, c);
        if (ri > 0) return filter_ ? 1 - filter_->v.bit(ri - 1) : 1;
        return 2;
    }

    // Exact degree required once all slots of the vertex are decided.
    bool close_ok(int r, int c, int deg) const {
        int li = grid_->left_index(r, c);
        if (li > 0) return filter_ ? deg == filter_->u.bit(li - 1) : deg <= 1;
        int ri = grid_->right_index(r, c);
        if (ri > 0) return filter_ ? deg == 1 - filter_->v.bit(ri - 1) : deg <= 1;
        return deg == 2;
    }

    // Validates the terminal pair of a freshly completed path.
    bool completed_path_ok(int16_t t1, int16_t t2) const {
        auto k1 = PathTracker::kind_of(t1), k2 = PathTracker::kind_of(t2);
        if (k1 == k2 && (k1 == PathTracker::L || k1 == PathTracker::R)) return false;
        if (!filter_) return true;
        if (k2 == PathTracker::Ext) {
            std::swap(t1, t2);
            std::swap(k1, k2);
        }
        if (k1 != PathTracker::Ext) return true;  // left-to-right path
        int i = PathTracker::index_of(t1);
        if (k2 == PathTracker::L) return filter_->w.bit(i - 1) == 1;
        if (k2 == PathTracker::R) return filter_->w.bit(i - 1) == 0;
        int j = PathTracker::index_of(t2);  // external-to-external
        if (i > j) std::swap(i, j);
        return filter_->w.bit(j - 1) == 1 && filter_->w.bit(i - 1) == 0;
    }

    bool place_edge(int slot, int ar, int ac, int br, int bc) {
        int a = vertex_id(ar, ac), b = vertex_id(br, bc);
        if (degree_[static_cast<size_t>(a)] + 1 > cap(ar, ac)) return false;
        if (degree_[static_cast<size_t>(b)] + 1 > cap(br, bc)) return false;

        int ra = tracker_.find(a), rb = tracker_.find(b);
        if (ra != rb) {
            PathTracker::TermSet combined = tracker_.terms(ra);
            for (int k = 0; k < tracker_.terms(rb).count; ++k)
                combined.items[static_cast<size_t>(combined.count++)] =
                    tracker_.terms(rb).items[static_cast<size_t>(k)];
            auto add_endpoint = [&](int r, int c) {
                int li = grid_->left_index(r, c);
                if (li > 0)
                    combined.items[static_cast<size_t>(combined.count++)] =
                        PathTracker::encode(PathTracker::L, li);
                int ri = grid_->right_index(r, c);
                if (ri > 0)
                    combined.items[static_cast<size_t>(combined.count++)] =
                        PathTracker::encode(PathTracker::R, ri);
            };
            add_endpoint(ar, ac);
            add_endpoint(br, bc);
            if (combined.count > 2)
                throw std::logic_error("component with more than two path ends");
            if (combined.count == 2 &&
                !completed_path_ok(combined.items[0], combined.items[1]))
                return false;
        }

        // Commit.
        tracker_.merge(a, b);
        auto add_terminal = [&](int v, int r, int c) {
            int li = grid_->left_index(r, c);
            if (li > 0) tracker_.add_terminal(v, PathTracker::L, li);
            int ri = grid_->right_index(r, c);
            if (ri > 0) tracker_.add_terminal(v, PathTracker::R, ri);
        };
        add_terminal(a, ar, ac);
        add_terminal(b, br, bc);
        ++degree_[static_cast<size_t>(a)];
        ++degree_[static_cast<size_t>(b)];
        edges_[static_cast<size_t>(slot)] = true;
        return true;
    }

    void unplace_edge(int slot, int ar, int ac, int br, int bc) {
        edges_[static_cast<size_t>(slot)] = false;
        --degree_[static_cast<size_t>(vertex_id(ar, ac))];
        --degree_[static_cast<size_t>(vertex_id(br, bc))];
    }

    void dfs(size_t vi) {
        if (stopped_) return;
        if (vi == grid_->vertices().size()) {
            if (!(*emit_)(TfplConfig(grid_, edges_))) stopped_ = true;
            return;
        }
        auto [r, c] = grid_->vertices()[vi];
        int e_slot = grid_->slot_id(r, c, 'E');
        int s_slot = r < n_ ? grid_->slot_id(r, c, 'S') : -1;
        int base_deg = degree_[vertex_id_sz(r, c)];

        for (int e = 0; e <= (e_slot >= 0 ? 1 : 0); ++e) {
            for (int s = 0; s <= (s_slot >= 0 ? 1 : 0); ++s) {
                if (!close_ok(r, c, base_deg + e + s)) continue;
                size_t mark = tracker_.mark();
                bool ok = true;
                if (e) ok = place_edge(e_slot, r, c, r, c + 1);
                if (ok && s) {
                    ok = place_edge(s_slot, r, c, r + 1, c);
                    if (!ok && e) unplace_edge(e_slot, r, c, r, c + 1);
                }
                if (!ok && e && !s) {
                    // place_edge for e failed; nothing committed.
                }
                if (ok) {
                    dfs(vi + 1);
                    if (s) unplace_edge(s_slot, r, c, r + 1, c);
                    if (e) unplace_edge(e_slot, r, c, r, c + 1);
                }
                tracker_.rollback(mark);
                if (stopped_) return;
            }
        }
    }

    size_t vertex_id_sz(int r, int c) const {
        return static_cast<size_t>(vertex_id(r, c));
    }

    std::shared_ptr<const TriGrid> grid_;
    int n_;
    PathTracker tracker_;
    std::optional<BoundaryTriple> filter_;
    std::vector<bool> edges_;
    std::vector<int> degree_;
    const std::function<bool(TfplConfig&&)>* emit_ = nullptr;
    bool stopped_ = false;
};

}  // namespace detail

/// Streams all valid configurations of size n in a fixed search order,
/// optionally restricted to one boundary. The callback returns false to stop.
inline void for_each_tfpl(int n, const std::function<bool(TfplConfig&&)>& emit,
                          const std::optional<BoundaryTriple>& boundary = std::nullopt,
                          int cap = kDefaultSizeCap) {
    detail::check_cap(n, cap, "for_each_tfpl");
    detail::TfplEnumerator(TriGrid::shared(n), boundary).run(emit);
}

/// All valid configurations of size n, in deterministic order.
inline std::vector<TfplConfig> enumerate_tfpl(int n, int cap = kDefaultSizeCap) {
    std::vector<TfplConfig> out;
    for_each_tfpl(
        n,
        [&](TfplConfig&& cfg) {
            out.push_back(std::move(cfg));
            return true;
        },
        std::nullopt, cap);
    return out;
}

struct BoundaryStats {
    long long count = 0;
    long long stable = 0;
};

/// Counts of configurations per boundary triple, with how many of them are
/// stable. Persists as sorted lines "u|v|w count excess stable".
class CountTable {
public:
    CountTable() = default;
    explicit CountTable(int n) : n_(n) {}

    int size() const { return n_; }
    const std::map<BoundaryTriple, BoundaryStats>& entries() const { return table_; }

    void add(const BoundaryTriple& b, bool stable_config) {
        auto& stats = table_[b];
        ++stats.count;
        stats.stable += stable_config;
    }

    long long count(const BoundaryTriple& b) const {
        auto it = table_.find(b);
        return it == table_.end() ? 0 : it->second.count;
    }

    void set_count(const BoundaryTriple& b, long long value) {
        table_[b].count = value;
    }

    void save(std::ostream& os) const {
        for (const auto& [b, stats] : table_)
            os << b.key() << " " << stats.count << " " << excess(b) << " "
               << stats.stable << "\n";
    }

    static CountTable load(std::istream& is) {
        CountTable out;
        std::string key;
        long long count, exc, stable;
        while (is >> key >> count >> exc >> stable) {
            std::string triple = key;
            for (char& ch : triple)
                if (ch == '|') ch = ',';
            BoundaryTriple b = BoundaryTriple::parse(triple);
            out.n_ = b.u.size();
            out.table_[b] = {count, stable};
        }
        return out;
    }

private:
    int n_ = 0;
    std::map<BoundaryTriple, BoundaryStats> table_;
};

/// Enumerates size n and groups by boundary.
inline CountTable count_by_boundary(int n, int cap = kDefaultSizeCap) {
    CountTable table(n);
    for_each_tfpl(
        n,
        [&](TfplConfig&& cfg) {
            table.add(cfg.boundary(), is_stable(cfg));
            return true;
        },
        std::nullopt, cap);
    return table;
}

/// Littlewood-Richardson coefficient c_{a,b}^c: the number of semistandard
/// skew tableaux of shape c/a and content b whose reverse reading word (rows
/// top to bottom, each read right to left) is a ballot sequence. Implemented
/// by direct backtracking over the skew cells; zero when the sizes do not
/// add up or a is not contained in c.
inline long long lr_coefficient(const Partition& a, const Partition& b,
                                const Partition& c) {
    if (!diagram_contains(c, a)) return 0;
    if (a.cells() + b.cells() != c.cells()) return 0;
    if (b.empty()) return 1;  // empty skew shape, empty filling

    struct SkewCell {
        int row, col;
        bool has_right, has_above;
    };
    std::vector<SkewCell> cells;  // reverse reading order
    for (int row = 0; row < c.num_rows(); ++row)
        for (int col = c.row(row) - 1; col >= a.row(row); --col)
            cells.push_back({row, col, col + 1 < c.row(row),
                             row > 0 && col >= a.row(row - 1) && col < c.row(row - 1)});

    int values = b.num_rows();
    std::vector<int> count(static_cast<size_t>(values) + 1, 0);
    std::vector<std::vector<int>> entry(static_cast<size_t>(c.num_rows()),
                                        std::vector<int>(static_cast<size_t>(c.row(0)), 0));
    long long total = 0;

    std::function<void(size_t)> fill = [&](size_t k) {
        if (k == cells.size()) {
            ++total;
            return;
        }
        const SkewCell& cell = cells[k];
        for (int t = 1; t <= values; ++t) {
            if (count[static_cast<size_t>(t)] >= b.row(t - 1)) continue;
            if (t > 1 && count[static_cast<size_t>(t)] >= count[static_cast<size_t>(t) - 1])
                continue;  // reverse reading word must stay a ballot sequence
            if (cell.has_right &&
                t > entry[static_cast<size_t>(cell.row)][static_cast<size_t>(cell.col) + 1])
                continue;  // rows weakly increase left to right
            if (cell.has_above &&
                t <= entry[static_cast<size_t>(cell.row) - 1][static_cast<size_t>(cell.col)])
                continue;  // columns strictly increase downward
            ++count[static_cast<size_t>(t)];
            entry[static_cast<size_t>(cell.row)][static_cast<size_t>(cell.col)] = t;
            fill(k + 1);
            --count[static_cast<size_t>(t)];
        }
    };
    fill(0);
    return total;
}

/// Word form: c for the shapes of (u, v, w). The words must share their zero
/// count and length.
inline long long lr_coefficient(const BinaryWord& u, const BinaryWord& v,
                                const BinaryWord& w) {
    if (u.size() != v.size() || u.size() != w.size() || u.zeros() != v.zeros() ||
        u.zeros() != w.zeros())
        throw std::invalid_argument("lr_coefficient: mismatched word types");
    return lr_coefficient(to_partition(u), to_partition(v), to_partition(w));
}

struct LinearRelationResult {
    bool ok = false;
    long long lhs = 0;  // sum over horizontal-strip successors of u
    long long rhs = 0;  // sum over vertical-strip successors of v
};

/// Checks sum over u->h u+ of t_{u+,v}^w against sum over v->v v+ of
/// t_{u,v+}^w on a complete table.
inline LinearRelationResult verify_linear_relation(const BinaryWord& u,
                                                   const BinaryWord& v,
                                                   const BinaryWord& w,
                                                   const CountTable& table) {
    if (table.size() != u.size())
        throw std::invalid_argument("verify_linear_relation: table size mismatch");
    LinearRelationResult res;
    for (const BinaryWord& up : horizontal_strip_successors(u))
        res.lhs += table.count({up, v, w});
    for (const BinaryWord& vp : vertical_strip_successors(v))
        res.rhs += table.count({u, vp, w});
    res.ok = res.lhs == res.rhs;
    return res;
}

struct ExcessZeroEntry {
    BoundaryTriple boundary;
    long long count = 0;
    long long lr = 0;
    bool all_stable = false;
    bool ok = false;
};

struct ExcessZeroReport {
    bool ok = true;
    std::vector<ExcessZeroEntry> entries;
};

/// For every realized boundary of excess zero: all configurations are
/// drifter-free, and the count equals the Littlewood-Richardson coefficient.
inline ExcessZeroReport verify_excess_zero(int n, int cap = kDefaultSizeCap) {
    detail::check_cap(n, cap, "verify_excess_zero");
    std::map<BoundaryTriple, std::pair<long long, long long>> acc;  // count, drifter-free
    for_each_tfpl(
        n,
        [&](TfplConfig&& cfg) {
            auto& slot = acc[cfg.boundary()];
            ++slot.first;
            slot.second += cfg.drifters().empty();
            return true;
        },
        std::nullopt, cap);
    ExcessZeroReport report;
    for (const auto& [b, stats] : acc) {
        if (excess(b) != 0) continue;
        ExcessZeroEntry entry;
        entry.boundary = b;
        entry.count = stats.first;
        entry.lr = lr_coefficient(b.u, b.v, b.w);
        entry.all_stable = stats.second == stats.first;
        entry.ok = entry.all_stable && entry.count == entry.lr;
        report.ok = report.ok && entry.ok;
        report.entries.push_back(entry);
    }
    return report;
}

struct GyrationInequalityLevel {
    BinaryWord u_minus;
    int applications = 0;
    BoundaryTriple reached;
};

struct GyrationInequalityTrace {
    bool ok = false;
    BoundaryTriple start;
    BoundaryTriple final_boundary;
    std::vector<GyrationInequalityLevel> levels;
    std::string defect;
};

/// Constructive replay of the boundary inequality: while lambda(u) is
/// nonempty, remove a corner of lambda(u), gyrate with respect to the smaller
/// word until the right boundary strictly grows, and recurse. Each level
/// trades one cell of lambda(u) for at least one new cell of lambda(v), and
/// at the bottom lambda(v) is contained in lambda(w), certifying
/// |lambda(u)| + |lambda(v)| <= |lambda(w)| for the starting boundary.
inline GyrationInequalityTrace verify_inequality_by_gyration(TfplConfig f) {
    GyrationInequalityTrace trace;
    trace.start = f.boundary();
    BoundaryTriple b = trace.start;
    while (true) {
        Partition lu = to_partition(b.u);
        if (lu.empty()) break;
        std::vector<int> rows = lu.rows();
        rows.back() -= 1;  // remove a corner cell from the last row
        BinaryWord u_minus = from_partition(Partition(rows), b.u.zeros(), b.u.ones());

        long long v_cells = to_partition(b.v).cells();
        int applications = 0;
        int inner_cap = 2 * f.size() + 2;
        do {
            f = wieland_left(f, u_minus);
            ++applications;
            if (applications > inner_cap) {
                trace.defect = "right boundary failed to grow after " +
                               std::to_string(inner_cap) + " applications at " +
                               b.to_string();
                return trace;
            }
        } while (f.boundary().v == b.v);
        b = f.boundary();
        if (to_partition(b.v).cells() <= v_cells) {
            trace.defect = "right boundary changed without growing at " + b.to_string();
            return trace;
        }
        trace.levels.push_back({u_minus, applications, b});
    }
    trace.final_boundary = b;
    trace.ok = diagram_contains(to_partition(b.w), to_partition(b.v)) &&
               excess(trace.start) >= 0;
    if (!trace.ok) trace.defect = "final containment failed";
    return trace;
}

}  // namespace tfpl
