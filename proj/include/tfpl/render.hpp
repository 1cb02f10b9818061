#pragma once

#include <string>
#include <vector>

#include "tfpl/config.hpp"

namespace tfpl {

/// Text picture of a configuration. Odd vertices print as "o", even ones as
/// a box glyph, occupied vertical edges as "|" and drifters as "!". With
/// mark_parity, cell interiors carry "*" (odd) or "." (even).
inline std::string ascii_render(const TfplConfig& f, bool mark_parity = false) {
    const TriGrid& g = f.grid();
    int n = g.size();
    int width = 4 * (2 * n + 1) - 3;
    int height = 2 * n;
    std::vector<std::vector<std::string>> canvas(
        static_cast<size_t>(height),
        std::vector<std::string>(static_cast<size_t>(width), " "));

    auto put = [&](int y, int x, const std::string& glyph) {
        canvas[static_cast<size_t>(y)][static_cast<size_t>(x)] = glyph;
    };

    std::vector<EdgeSlot> drifters = f.drifters();
    auto is_drifter = [&](const EdgeSlot& e) {
        for (const EdgeSlot& d : drifters)
            if (d == e) return true;
        return false;
    };

    for (auto [r, c] : g.vertices()) {
        int y = 2 * (r - 1), x = 4 * (c - 1);
        put(y, x, g.vertex_parity(r, c) == Parity::Odd ? "o" : "□");
        if (f.has(r, c, 'E'))
            for (int k = 1; k <= 3; ++k) put(y, x + k, "-");
        if (f.has(r, c, 'S'))
            put(y + 1, x, is_drifter({r, c, 'S'}) ? "!" : "|");
    }
    if (mark_parity)
        for (const Cell& cell : g.cells())
            put(2 * cell.r - 1, 4 * (cell.c - 1) + 2,
                cell.parity == Parity::Odd ? "*" : ".");

    std::string out;
    for (const auto& line : canvas) {
        std::string text;
        for (const auto& glyph : line) text += glyph;
        while (!text.empty() && text.back() == ' ') text.pop_back();
        out += text;
        out += '\n';
    }
    return out;
}

/// SVG 1.1 picture: black edges, red drifters, circles for odd vertices and
/// squares for even ones; odd cells shaded when mark_parity is set.
inline std::string svg_render(const TfplConfig& f, bool mark_parity = false) {
    const TriGrid& g = f.grid();
    int n = g.size();
    const int unit = 40, margin = 40;
    auto px = [&](int c) { return margin + unit * (c - 1); };
    auto py = [&](int r) { return margin + unit * (r - 1); };
    int width = 2 * margin + unit * 2 * n;
    int height = 2 * margin + unit * n;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(width) + "\" height=\"" + std::to_string(height) +
           "\" viewBox=\"0 0 " + std::to_string(width) + " " + std::to_string(height) +
           "\">\n";

    if (mark_parity)
        for (const Cell& cell : g.cells())
            if (cell.parity == Parity::Odd)
                out += "  <rect x=\"" + std::to_string(px(cell.c)) + "\" y=\"" +
                       std::to_string(py(cell.r)) + "\" width=\"" + std::to_string(unit) +
                       "\" height=\"" + std::to_string(unit) +
                       "\" fill=\"#e8e8e8\" stroke=\"none\"/>\n";

    std::vector<EdgeSlot> drifters = f.drifters();
    auto is_drifter = [&](const EdgeSlot& e) {
        for (const EdgeSlot& d : drifters)
            if (d == e) return true;
        return false;
    };
    for (const EdgeSlot& e : f.edge_list()) {
        int x1 = px(e.c), y1 = py(e.r), x2 = x1, y2 = y1;
        if (e.dir == 'E')
            x2 += unit;
        else
            y2 += e.r == n ? unit / 2 : unit;  // external stubs run half a unit
        bool drift = e.dir == 'S' && is_drifter(e);
        out += "  <line x1=\"" + std::to_string(x1) + "\" y1=\"" + std::to_string(y1) +
               "\" x2=\"" + std::to_string(x2) + "\" y2=\"" + std::to_string(y2) +
               "\" stroke=\"" + (drift ? std::string("#cc0000") : std::string("#000000")) +
               "\" stroke-width=\"" + (drift ? "5" : "3") + "\"/>\n";
    }
    for (auto [r, c] : g.vertices()) {
        if (g.vertex_parity(r, c) == Parity::Odd)
            out += "  <circle cx=\"" + std::to_string(px(c)) + "\" cy=\"" +
                   std::to_string(py(r)) + "\" r=\"6\" fill=\"#ffffff\" "
                   "stroke=\"#000000\" stroke-width=\"2\"/>\n";
        else
            out += "  <rect x=\"" + std::to_string(px(c) - 6) + "\" y=\"" +
                   std::to_string(py(r) - 6) +
                   "\" width=\"12\" height=\"12\" fill=\"#ffffff\" "
                   "stroke=\"#000000\" stroke-width=\"2\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace tfpl
