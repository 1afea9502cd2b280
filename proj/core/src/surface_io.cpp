#include "teichrec/surface_io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "teichrec/errors.hpp"

namespace teichrec::surface_io {

using flat_surface::TranslationSurface;
using flat_surface::Vec2;

namespace {

std::string strip_comment(const std::string& line) {
    const auto pos = line.find('#');
    std::string s = (pos == std::string::npos) ? line : line.substr(0, pos);
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// value of `key=` inside a line, up to the next whitespace or end;
// parenthesized values run to the matching close of the last group
std::string field(const std::string& line, const std::string& key) {
    const auto pos = line.find(key + "=");
    if (pos == std::string::npos)
        throw ConstructionError("surface file: missing field '" + key + "'");
    std::size_t i = pos + key.size() + 1;
    if (i < line.size() && line[i] == '(') {
        std::size_t j = i;
        while (j < line.size() && line[j] == '(') {
            const auto close = line.find(')', j);
            if (close == std::string::npos)
                throw ConstructionError("surface file: unbalanced cycle notation");
            j = close + 1;
        }
        return line.substr(i, j - i);
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    return line.substr(i, j - i);
}

}  // namespace

std::vector<int> parse_cycles(const std::string& text, int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::size_t i = 0;
    if (text == "id" || text.empty() || text == "()") return perm;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        if (text[i] != '(') throw ConstructionError("cycle notation: expected '('");
        const auto close = text.find(')', i);
        if (close == std::string::npos) throw ConstructionError("cycle notation: missing ')'");
        std::istringstream body(text.substr(i + 1, close - i - 1));
        std::vector<int> cyc;
        std::string tok;
        while (body >> tok) {
            // allow comma separators
            std::istringstream ts(tok);
            std::string piece;
            while (std::getline(ts, piece, ',')) {
                if (piece.empty()) continue;
                const int v = std::stoi(piece);
                if (v < 1 || v > n) throw ConstructionError("cycle notation: element out of range");
                cyc.push_back(v - 1);
            }
        }
        for (std::size_t k = 0; k + 1 < cyc.size(); ++k) perm[cyc[k]] = cyc[k + 1];
        if (cyc.size() >= 2) perm[cyc.back()] = cyc.front();
        i = close + 1;
    }
    return perm;
}

TranslationSurface parse_surface(std::istream& in) {
    std::string line;
    std::string first;
    while (std::getline(in, line)) {
        first = strip_comment(line);
        if (!first.empty()) break;
    }
    if (first.empty()) throw ConstructionError("surface file: empty input");

    if (first.rfind("origami", 0) == 0) {
        const int n = std::stoi(field(first, "n"));
        if (n < 1) throw ConstructionError("surface file: origami needs n >= 1");
        const auto h = parse_cycles(field(first, "h"), n);
        const auto v = parse_cycles(field(first, "v"), n);
        return flat_surface::build_origami(h, v);
    }
    if (first.rfind("polygon", 0) == 0) {
        std::vector<Vec2> edges;
        std::vector<int> pairing;
        while (std::getline(in, line)) {
            const std::string s = strip_comment(line);
            if (s.empty()) continue;
            if (s.rfind("edge", 0) != 0)
                throw ConstructionError("surface file: expected 'edge <x> <y> pair=<slot>'");
            std::istringstream ls(s);
            std::string kw;
            double x, y;
            ls >> kw >> x >> y;
            if (!ls) throw ConstructionError("surface file: malformed edge line");
            edges.push_back({x, y});
            pairing.push_back(std::stoi(field(s, "pair")));
        }
        return flat_surface::build_polygon(edges, pairing);
    }
    throw ConstructionError("surface file: unknown header '" + first + "'");
}

TranslationSurface load_surface(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConstructionError("cannot open surface file: " + path);
    return parse_surface(in);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_connections_csv(std::ostream& out,
                           const std::vector<flat_surface::SaddleConnection>& conns) {
    out << "len,hol_x,hol_y,start,end\n";
    for (const auto& c : conns) {
        out << format_double(c.length()) << ',' << format_double(c.holonomy.x) << ','
            << format_double(c.holonomy.y) << ',' << c.start << ',' << c.end << '\n';
    }
}

}  // namespace teichrec::surface_io
