#include "qmatball/grid.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace qmatball {

std::vector<std::pair<int, int>> GridDiagram::white_cells() const {
    std::vector<std::pair<int, int>> out;
    for (int col = 1; col <= n_; ++col)
        for (int row = n_; row >= 1; --row)
            if (at(row, col).color == CellColor::White) out.emplace_back(row, col);
    return out;
}

GridDiagram grid_from_string(const AdmissibleString& s) {
    const int n = s.n();
    GridDiagram g(n);
    for (int j = 1; j <= n; ++j) {
        const int k = s.k(j);
        if (k == n) continue;
        for (int col = 1; col <= n - k - 1; ++col) g.at(j, col) = {CellColor::Dark, 0.0};
        if (s.at_bound(j)) g.at(j, n - k) = {CellColor::Dark, 0.0};
        else g.at(j, n - k) = {CellColor::Light, s.phase(j)};
    }
    return g;
}

AdmissibleString string_from_grid(const GridDiagram& g) {
    const int n = g.n();
    std::vector<int> ks(static_cast<std::size_t>(n));
    std::vector<double> phases(static_cast<std::size_t>(n), 0.0);
    for (int j = 1; j <= n; ++j) {
        int k = 0;
        while (k < n && g.at(j, n - k).color == CellColor::White) ++k;
        for (int col = 1; col < n - k; ++col)
            if (g.at(j, col).color != CellColor::Dark) throw InvalidInput("row " + std::to_string(j) + " is not dark-light-white");
        ks[static_cast<std::size_t>(n - j)] = k;
        if (k < n && g.at(j, n - k).color == CellColor::Light) phases[static_cast<std::size_t>(n - j)] = g.at(j, n - k).phase;
    }
    AdmissibleString s(ks, phases);
    if (!(grid_from_string(s) == g)) throw InvalidInput("grid coloring does not match any admissible string");
    return s;
}

std::string render_ascii(const GridDiagram& g) {
    std::ostringstream os;
    const int n = g.n();
    for (int row = 1; row <= n; ++row) {
        std::string phase;
        for (int col = 1; col <= n; ++col) {
            const Cell& c = g.at(row, col);
            switch (c.color) {
                case CellColor::White: os << '.'; break;
                case CellColor::Dark: os << '#'; break;
                case CellColor::Light: {
                    os << 'o';
                    char buf[40];
                    std::snprintf(buf, sizeof buf, " phi=%.17g", c.phase);
                    phase = buf;
                    break;
                }
            }
        }
        os << ' ' << row << phase << '\n';
    }
    for (int col = 1; col <= n; ++col) os << col % 10;
    os << '\n';
    return os.str();
}

GridDiagram parse_ascii(const std::string& text) {
    std::istringstream is(text);
    std::vector<std::string> lines;
    for (std::string line; std::getline(is, line);)
        if (!line.empty()) lines.push_back(line);
    if (lines.empty()) throw InvalidInput("empty grid text");
    const int n = static_cast<int>(lines.size()) - 1;
    if (n < 1) throw InvalidInput("grid text needs glyph rows and a column label line");
    GridDiagram g(n);
    for (int row = 1; row <= n; ++row) {
        const std::string& line = lines[static_cast<std::size_t>(row - 1)];
        if (static_cast<int>(line.size()) < n) throw InvalidInput("grid row too short");
        std::istringstream rest(line.substr(static_cast<std::size_t>(n)));
        int label = 0;
        if (!(rest >> label) || label != row) throw InvalidInput("bad row label in grid text");
        double phase = 0.0;
        std::string token;
        if (rest >> token) {
            if (token.rfind("phi=", 0) != 0) throw InvalidInput("unexpected token in grid text: " + token);
            phase = std::stod(token.substr(4));
        }
        for (int col = 1; col <= n; ++col) {
            switch (line[static_cast<std::size_t>(col - 1)]) {
                case '.': g.at(row, col) = {CellColor::White, 0.0}; break;
                case '#': g.at(row, col) = {CellColor::Dark, 0.0}; break;
                case 'o': g.at(row, col) = {CellColor::Light, phase}; break;
                default: throw InvalidInput("unknown glyph in grid text");
            }
        }
    }
    return g;
}

std::string to_string(Arrow a) {
    switch (a) {
        case Arrow::VertPass: return "VertPass";
        case Arrow::HorizPass: return "HorizPass";
        case Arrow::HookLeftUp: return "HookLeftUp";
        case Arrow::HookBottomRight: return "HookBottomRight";
    }
    return "?";
}

std::vector<LatticePath> enumerate_paths(int n, int k, int j) {
    if (n < 1 || k < 1 || k > n || j < 1 || j > n) throw InvalidInput("enumerate_paths: index out of range");
    std::vector<LatticePath> out;
    LatticePath cur{k, j, {}};
    // from_bottom: the path entered (row, col) through its bottom edge.
    auto walk = [&](auto& self, int row, int col, bool from_bottom) -> void {
        if (row > j) {
            cur.steps.push_back({row, col, from_bottom ? Arrow::VertPass : Arrow::HookLeftUp});
            self(self, row - 1, col, true);
            cur.steps.pop_back();
        }
        const Arrow right = from_bottom ? Arrow::HookBottomRight : Arrow::HorizPass;
        if (col < n) {
            cur.steps.push_back({row, col, right});
            self(self, row, col + 1, false);
            cur.steps.pop_back();
        } else if (row == j) {
            cur.steps.push_back({row, col, right});
            out.push_back(cur);
            cur.steps.pop_back();
        }
    };
    walk(walk, n, k, true);
    return out;
}

}  // namespace qmatball
