#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tfpl/lattice.hpp"
#include "tfpl/words.hpp"

namespace tfpl {

struct BoundaryTriple {
    BinaryWord u, v, w;

    friend auto operator<=>(const BoundaryTriple&, const BoundaryTriple&) = default;

    std::string to_string() const {
        return "(" + u.str() + "," + v.str() + ";" + w.str() + ")";
    }

    /// Table key form "u|v|w".
    std::string key() const { return u.str() + "|" + v.str() + "|" + w.str(); }

    /// Parses "u,v,w" (three comma-separated 0/1 strings of equal length).
    static BoundaryTriple parse(std::string_view text) {
        std::vector<std::string> parts(1);
        for (char ch : text) {
            if (ch == ',')
                parts.emplace_back();
            else
                parts.back() += ch;
        }
        if (parts.size() != 3)
            throw std::invalid_argument("boundary: expected three comma-separated words");
        BoundaryTriple b{BinaryWord(parts[0]), BinaryWord(parts[1]), BinaryWord(parts[2])};
        if (b.u.size() != b.v.size() || b.u.size() != b.w.size())
            throw std::invalid_argument("boundary: words must have equal length");
        return b;
    }
};

/// |lambda(w)| - |lambda(u)| - |lambda(v)|. May be negative for triples not
/// realized by any configuration.
inline long long excess(const BoundaryTriple& b) {
    return to_partition(b.w).cells() - to_partition(b.u).cells() -
           to_partition(b.v).cells();
}

struct ValidationResult {
    bool ok = true;
    std::string rule;    // first violated rule, empty when ok
    std::string detail;  // witness description

    explicit operator bool() const { return ok; }
};

class SerializationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

/// Strict parse of {"n": N, "edges": [[r,c,"E"],...]}. Square-grid documents
/// also allow the 'N'/'W' stub directions.
inline std::vector<EdgeSlot> parse_edge_document(const nlohmann::json& doc,
                                                 bool allow_nw) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges") ||
        doc.size() != 2)
        throw SerializationError("malformed document: expected {\"n\", \"edges\"}");
    if (!doc["n"].is_number_integer() || doc["n"].get<int>() < 1)
        throw SerializationError("malformed document: bad size");
    if (!doc["edges"].is_array())
        throw SerializationError("malformed document: edges must be an array");
    std::vector<EdgeSlot> list;
    for (const auto& item : doc["edges"]) {
        if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() ||
            !item[1].is_number_integer() || !item[2].is_string())
            throw SerializationError("malformed edge entry");
        std::string dir = item[2].get<std::string>();
        std::string dirs = allow_nw ? "ESNW" : "ES";
        if (dir.size() != 1 || dirs.find(dir[0]) == std::string::npos)
            throw SerializationError("malformed edge direction: " + dir);
        list.push_back({item[0].get<int>(), item[1].get<int>(), dir[0]});
    }
    return list;
}

}  // namespace detail

/// A configuration on the triangular grid: a set of occupied edge slots,
/// external edges included. Immutable; transforms build new values.
class TfplConfig {
public:
    TfplConfig(std::shared_ptr<const TriGrid> grid, std::vector<bool> edges)
        : grid_(std::move(grid)), edges_(std::move(edges)) {
        if (static_cast<int>(edges_.size()) != grid_->num_slots())
            throw std::invalid_argument("TfplConfig: edge set size mismatch");
    }

    /// Builds a configuration of size n from an explicit edge list. Throws
    /// SerializationError on out-of-grid or duplicate edges.
    static TfplConfig from_edges(int n, std::span<const EdgeSlot> list) {
        auto grid = TriGrid::shared(n);
        std::vector<bool> edges(static_cast<size_t>(grid->num_slots()), false);
        for (const EdgeSlot& e : list) {
            int id = grid->slot_id(e);
            if (id < 0)
                throw SerializationError("edge slot outside grid: " + to_string(e));
            if (edges[static_cast<size_t>(id)])
                throw SerializationError("duplicate edge: " + to_string(e));
            edges[static_cast<size_t>(id)] = true;
        }
        return TfplConfig(std::move(grid), std::move(edges));
    }

    const TriGrid& grid() const { return *grid_; }
    std::shared_ptr<const TriGrid> grid_ptr() const { return grid_; }
    int size() const { return grid_->size(); }

    bool has(int slot_id) const {
        return slot_id >= 0 && edges_[static_cast<size_t>(slot_id)];
    }
    bool has(int r, int c, char dir) const { return has(grid_->slot_id(r, c, dir)); }

    const std::vector<bool>& edge_bits() const { return edges_; }

    std::vector<EdgeSlot> edge_list() const {
        std::vector<EdgeSlot> out;
        for (int id = 0; id < grid_->num_slots(); ++id)
            if (edges_[static_cast<size_t>(id)]) out.push_back(grid_->slot(id));
        return out;  // slot order is already (r, c, dir)-sorted
    }

    /// Vertex degree, external stubs included.
    int degree(int r, int c) const {
        int d = 0;
        for (int s : grid_->incident_slots(r, c)) d += has(s);
        return d;
    }

    friend bool operator==(const TfplConfig& a, const TfplConfig& b) {
        return a.size() == b.size() && a.edges_ == b.edges_;
    }

    /// Checks the four validity rules in order: forced external pattern,
    /// side-vertex degrees 0/1, interior degrees 2, and no path joining two
    /// left-slope or two right-slope vertices. Reports the first violation.
    ValidationResult validate() const {
        const TriGrid& g = *grid_;
        int n = g.size();
        for (int c = 1; c <= g.num_columns(); ++c) {
            bool want = g.external_forced_occupied(c);
            if (has(g.external_slot(c)) != want)
                return {false, "external-pattern",
                        "external edge in column " + std::to_string(c) +
                            (want ? " missing" : " present")};
        }
        for (auto [r, c] : g.vertices()) {
            if (!g.is_boundary_vertex(r, c)) continue;
            int d = degree(r, c);
            if (d > 1)
                return {false, "side-vertex-degree",
                        "vertex (" + std::to_string(r) + "," + std::to_string(c) +
                            ") has degree " + std::to_string(d)};
        }
        for (auto [r, c] : g.vertices()) {
            if (g.is_boundary_vertex(r, c)) continue;
            int d = degree(r, c);
            if (d != 2)
                return {false, "interior-degree",
                        "vertex (" + std::to_string(r) + "," + std::to_string(c) +
                            ") has degree " + std::to_string(d)};
        }
        for (int i = 1; i <= n; ++i) {
            for (auto [start_r, start_c] : {g.left_vertex(i), g.right_vertex(i)}) {
                if (degree(start_r, start_c) != 1) continue;
                auto [er, ec] = trace_from_side_vertex(start_r, start_c);
                bool same_side = (g.left_index(start_r, start_c) > 0)
                                     ? g.left_index(er, ec) > 0
                                     : g.right_index(er, ec) > 0;
                if (same_side)
                    return {false, "same-side-path",
                            "path joins (" + std::to_string(start_r) + "," +
                                std::to_string(start_c) + ") and (" +
                                std::to_string(er) + "," + std::to_string(ec) + ")"};
            }
        }
        return {};
    }

    /// Boundary triple (u, v; w) of a valid configuration: u_i = 1 iff L_i has
    /// degree 1, v_i = 1 iff R_i has degree 0, and w_i records whether the
    /// i-th occupied external edge connects to the left slope or to an
    /// external edge on its left.
    BoundaryTriple boundary() const {
        const TriGrid& g = *grid_;
        int n = g.size();
        std::string u, v, w;
        for (int i = 1; i <= n; ++i) {
            auto [lr, lc] = g.left_vertex(i);
            u += degree(lr, lc) == 1 ? '1' : '0';
            auto [rr, rc] = g.right_vertex(i);
            v += degree(rr, rc) == 0 ? '1' : '0';
        }
        for (int i = 1; i <= n; ++i) {
            PathEnd end = trace_from_external(2 * i);
            char bit = '0';
            if (end.kind == PathEnd::LeftSlope) bit = '1';
            else if (end.kind == PathEnd::External && end.column < 2 * i) bit = '1';
            w += bit;
        }
        return {BinaryWord(u), BinaryWord(v), BinaryWord(w)};
    }

    /// All occupied vertical edges whose top endpoint is an odd vertex.
    /// External edges never qualify (their top vertices are even).
    std::vector<EdgeSlot> drifters() const {
        const TriGrid& g = *grid_;
        std::vector<EdgeSlot> out;
        for (int id = 0; id < g.num_slots(); ++id) {
            const EdgeSlot& e = g.slot(id);
            if (e.dir != 'S' || e.r == g.size() || !has(id)) continue;
            if (g.vertex_parity(e.r, e.c) == Parity::Odd) out.push_back(e);
        }
        return out;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json doc;
        doc["n"] = size();
        auto edges = nlohmann::ordered_json::array();
        for (const EdgeSlot& e : edge_list())
            edges.push_back({e.r, e.c, std::string(1, e.dir)});
        doc["edges"] = std::move(edges);
        return doc;
    }

    std::string serialize() const { return to_json().dump(); }

    static TfplConfig from_json(const nlohmann::json& doc) {
        auto list = detail::parse_edge_document(doc, /*allow_nw=*/false);
        return from_edges(doc.at("n").get<int>(), list);
    }

    static TfplConfig deserialize(std::string_view text) {
        nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
        if (doc.is_discarded()) throw SerializationError("malformed document");
        return from_json(doc);
    }

private:
    struct PathEnd {
        enum Kind { LeftSlope, RightSlope, External } kind;
        int index = 0;   // boundary index for slope ends
        int column = 0;  // external column for external ends
    };

    // Walks the path leaving the external stub in the given column and
    // classifies its far end. The walk terminates: degrees are at most two
    // and a path cannot revisit a vertex.
    PathEnd trace_from_external(int column) const {
        return walk(grid_->size(), column, grid_->external_slot(column));
    }

    std::pair<int, int> trace_from_side_vertex(int r, int c) const {
        PathEnd end = walk(r, c, -1);
        if (end.kind == PathEnd::External) return {grid_->size(), end.column};
        return end.kind == PathEnd::LeftSlope ? grid_->left_vertex(end.index)
                                              : grid_->right_vertex(end.index);
    }

    PathEnd walk(int r, int c, int incoming) const {
        const TriGrid& g = *grid_;
        while (true) {
            int next = -1;
            for (int s : g.incident_slots(r, c))
                if (s >= 0 && s != incoming && has(s)) next = s;
            if (next < 0) {
                int li = g.left_index(r, c);
                if (li > 0) return {PathEnd::LeftSlope, li, 0};
                int ri = g.right_index(r, c);
                if (ri > 0) return {PathEnd::RightSlope, ri, 0};
                throw std::logic_error("path ends at interior vertex; configuration invalid");
            }
            if (g.is_external(next)) return {PathEnd::External, 0, g.slot(next).c};
            const EdgeSlot& e = g.slot(next);
            int nr = e.r, nc = e.c;
            if (nr == r && nc == c) {
                // Move to the other endpoint.
                if (e.dir == 'E') nc = c + 1;
                else nr = r + 1;
            }
            r = nr;
            c = nc;
            incoming = next;
        }
    }

    std::shared_ptr<const TriGrid> grid_;
    std::vector<bool> edges_;
};

}  // namespace tfpl
