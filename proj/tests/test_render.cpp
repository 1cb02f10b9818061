#include <catch2/catch_amalgamated.hpp>

#include <cctype>

#include "tfpl/render.hpp"

using namespace tfpl;

namespace {

TfplConfig make(int n, std::vector<EdgeSlot> edges) {
    return TfplConfig::from_edges(n, edges);
}

TfplConfig drifter2() {
    return make(2, {{1, 2, 'E'}, {1, 3, 'S'}, {1, 4, 'S'},
                    {2, 2, 'E'}, {2, 2, 'S'}, {2, 4, 'S'}});
}

size_t count_occurrences(const std::string& text, const std::string& what) {
    size_t count = 0, pos = 0;
    while ((pos = text.find(what, pos)) != std::string::npos) {
        ++count;
        pos += what.size();
    }
    return count;
}

// Minimal well-formedness check: every element closes in order.
bool xml_well_formed(const std::string& text) {
    std::vector<std::string> stack;
    size_t pos = 0;
    while ((pos = text.find('<', pos)) != std::string::npos) {
        size_t end = text.find('>', pos);
        if (end == std::string::npos) return false;
        std::string tag = text.substr(pos + 1, end - pos - 1);
        pos = end + 1;
        if (tag.starts_with("?") || tag.starts_with("!")) continue;
        if (tag.starts_with("/")) {
            if (stack.empty() || stack.back() != tag.substr(1)) return false;
            stack.pop_back();
            continue;
        }
        if (tag.ends_with("/")) continue;
        std::string name = tag.substr(0, tag.find_first_of(" \t\n"));
        stack.push_back(name);
    }
    return stack.empty();
}

}  // namespace

TEST_CASE("ascii render marks each drifter once and nowhere else") {
    TfplConfig f = drifter2();
    std::string art = ascii_render(f);
    CHECK(count_occurrences(art, "!") == f.drifters().size());
    CHECK(count_occurrences(art, "!") == 1);

    // Four occupied vertical slots (one internal pair plus the two external
    // stubs), one of them the drifter.
    CHECK(count_occurrences(art, "|") == 3);

    // One glyph per vertex, by parity.
    size_t odd = 0, even = 0;
    for (auto [r, c] : f.grid().vertices())
        (f.grid().vertex_parity(r, c) == Parity::Odd ? odd : even) += 1;
    CHECK(count_occurrences(art, "o") == odd);
    CHECK(count_occurrences(art, "□") == even);

    TfplConfig stable = make(
        2, {{1, 3, 'E'}, {1, 3, 'S'}, {2, 2, 'E'}, {2, 4, 'E'}, {2, 2, 'S'}, {2, 4, 'S'}});
    CHECK(count_occurrences(ascii_render(stable), "!") == 0);
}

TEST_CASE("ascii parity marks cover every cell") {
    TfplConfig f = drifter2();
    std::string art = ascii_render(f, true);
    size_t odd_cells = f.grid().cells(Parity::Odd).size();
    size_t even_cells = f.grid().cells(Parity::Even).size();
    CHECK(count_occurrences(art, "*") == odd_cells);
    CHECK(count_occurrences(art, ".") == even_cells);
    CHECK(ascii_render(f).find('*') == std::string::npos);
}

TEST_CASE("svg render is well formed and marks drifters in red") {
    TfplConfig f = drifter2();
    for (bool parity : {false, true}) {
        std::string svg = svg_render(f, parity);
        CHECK(svg.starts_with("<?xml"));
        CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);
        CHECK(xml_well_formed(svg));
        CHECK(count_occurrences(svg, "#cc0000") == f.drifters().size());
        size_t lines = count_occurrences(svg, "<line");
        CHECK(lines == f.edge_list().size());
        CHECK(count_occurrences(svg, "<circle") >= 1);
    }
    // Parity shading appears only when asked for.
    CHECK(count_occurrences(svg_render(f, true), "#e8e8e8") ==
          f.grid().cells(Parity::Odd).size());
    CHECK(count_occurrences(svg_render(f, false), "#e8e8e8") == 0);
}
