#include "cryst/io.hpp"

#include <fstream>
#include <sstream>

namespace cryst {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    fail(errc::parse_error, "line " + std::to_string(line) + ": " + msg);
}

// Comment-stripped, right-trimmed lines.
std::vector<std::string> logical_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
            line.pop_back();
        out.push_back(line);
    }
    return out;
}

} // namespace

ColoredGraph parse_gem(const std::string& text) {
    auto lines = logical_lines(text);
    std::size_t li = 0;
    auto next_line = [&]() -> std::pair<int, std::string> {
        while (li < lines.size() && lines[li].empty()) ++li;
        if (li >= lines.size()) parse_fail(static_cast<int>(lines.size()), "unexpected end of file");
        ++li;
        return {static_cast<int>(li), lines[li - 1]};
    };

    auto [hline, header] = next_line();
    std::istringstream hs(header);
    std::string tag;
    int colors = 0, n = 0;
    if (!(hs >> tag >> colors >> n) || tag != "gem")
        parse_fail(hline, "expected header `gem <colors> <n>`");
    if (colors < 2 || colors > 5) parse_fail(hline, "color count must be 2..5");
    if (n < 2 || n % 2 != 0) parse_fail(hline, "vertex count must be even and >= 2");

    std::vector<std::vector<int>> m(colors, std::vector<int>(n, -1));
    for (int c = 0; c < colors; ++c) {
        auto [lno, line] = next_line();
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head != std::to_string(c) + ":")
            parse_fail(lno, "expected color line `" + std::to_string(c) + ": ...`");
        std::string pair;
        int count = 0;
        while (ls >> pair) {
            auto dash = pair.find('-');
            if (dash == std::string::npos) parse_fail(lno, "expected `a-b` pair");
            int a, b;
            try {
                a = std::stoi(pair.substr(0, dash));
                b = std::stoi(pair.substr(dash + 1));
            } catch (...) {
                parse_fail(lno, "bad vertex number in pair " + pair);
            }
            if (a < 0 || b < 0 || a >= n || b >= n) parse_fail(lno, "vertex out of range");
            if (a == b) parse_fail(lno, "loop pair " + pair);
            if (m[c][a] != -1 || m[c][b] != -1) parse_fail(lno, "vertex paired twice");
            m[c][a] = b;
            m[c][b] = a;
            ++count;
        }
        if (count != n / 2)
            parse_fail(lno, "color " + std::to_string(c) + " needs exactly " +
                                std::to_string(n / 2) + " pairs");
    }
    while (li < lines.size()) {
        if (!lines[li].empty()) parse_fail(static_cast<int>(li + 1), "trailing content");
        ++li;
    }
    return ColoredGraph(colors - 1, std::move(m));
}

std::string write_gem(const ColoredGraph& g) {
    std::ostringstream os;
    os << "gem " << g.num_colors() << " " << g.order() << "\n";
    for (int c = 0; c <= g.dim(); ++c) {
        os << c << ":";
        for (int v = 0; v < g.order(); ++v) {
            int w = g.neighbor(c, v);
            if (w > v) os << " " << v << "-" << w;
        }
        os << "\n";
    }
    return os.str();
}

CellComplex parse_pst(const std::string& text) {
    auto lines = logical_lines(text);
    std::size_t li = 0;
    auto next_line = [&]() -> std::pair<int, std::string> {
        while (li < lines.size() && lines[li].empty()) ++li;
        if (li >= lines.size()) parse_fail(static_cast<int>(lines.size()), "unexpected end of file");
        ++li;
        return {static_cast<int>(li), lines[li - 1]};
    };

    auto [hline, header] = next_line();
    std::istringstream hs(header);
    std::string tag;
    int dim = 0, facets = 0;
    if (!(hs >> tag >> dim >> facets) || tag != "pst")
        parse_fail(hline, "expected header `pst <dim> <facets>`");
    if (dim < 1 || dim > 4) parse_fail(hline, "dim must be 1..4");
    if (facets < 1) parse_fail(hline, "facet count must be positive");

    std::vector<std::array<Gluing, 5>> gl(facets);
    for (int f = 0; f < facets; ++f) {
        auto [lno, line] = next_line();
        std::istringstream ls(line);
        for (int i = 0; i <= dim; ++i) {
            std::string entry;
            if (!(ls >> entry))
                parse_fail(lno, "facet " + std::to_string(f) + " needs " +
                                    std::to_string(dim + 1) + " entries");
            if (entry == "-") continue;
            auto colon = entry.find(':');
            if (colon == std::string::npos) parse_fail(lno, "expected `facet:perm` or `-`");
            int pf;
            try {
                pf = std::stoi(entry.substr(0, colon));
            } catch (...) {
                parse_fail(lno, "bad facet number in " + entry);
            }
            std::string digits = entry.substr(colon + 1);
            if (static_cast<int>(digits.size()) != dim + 1)
                parse_fail(lno, "permutation needs " + std::to_string(dim + 1) + " digits");
            Perm p = identity_perm();
            for (int k = 0; k <= dim; ++k) {
                if (digits[k] < '0' || digits[k] > '0' + dim)
                    parse_fail(lno, "bad permutation digit");
                p[k] = static_cast<std::uint8_t>(digits[k] - '0');
            }
            if (pf < 0 || pf >= facets) parse_fail(lno, "facet number out of range");
            gl[f][i] = Gluing{pf, static_cast<std::int8_t>(p[i]), p};
        }
        std::string extra;
        if (ls >> extra) parse_fail(lno, "trailing entry " + extra);
    }
    while (li < lines.size()) {
        if (!lines[li].empty()) parse_fail(static_cast<int>(li + 1), "trailing content");
        ++li;
    }
    return CellComplex(dim, std::move(gl)); // involutivity checked here
}

std::string write_pst(const CellComplex& c) {
    std::ostringstream os;
    os << "pst " << c.dim() << " " << c.facet_count() << "\n";
    for (int f = 0; f < c.facet_count(); ++f) {
        for (int i = 0; i <= c.dim(); ++i) {
            const Gluing& g = c.gluing(f, i);
            if (i) os << " ";
            if (!g.glued()) {
                os << "-";
                continue;
            }
            os << g.facet << ":";
            for (int k = 0; k <= c.dim(); ++k) os << static_cast<char>('0' + g.perm[k]);
        }
        os << "\n";
    }
    return os.str();
}

std::string export_dot(const ColoredGraph& g) {
    static const char* color_names[5] = {"black", "red", "blue", "forestgreen", "darkorange"};
    static const char* styles[5] = {"solid", "solid", "solid", "dashed", "dotted"};
    std::ostringstream os;
    os << "// colored graph, " << g.num_colors() << " colors, " << g.order() << " vertices\n";
    os << "// palette:";
    for (int c = 0; c <= g.dim(); ++c)
        os << " " << c << "=" << color_names[c] << "/" << styles[c];
    os << "\n";
    os << "graph gem {\n  node [shape=circle];\n";
    for (int c = 0; c <= g.dim(); ++c)
        for (int v = 0; v < g.order(); ++v) {
            int w = g.neighbor(c, v);
            if (w > v)
                os << "  v" << v << " -- v" << w << " [color=" << color_names[c]
                   << ", style=" << styles[c] << "];\n";
        }
    os << "}\n";
    return os.str();
}

ColoredGraph read_gem_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::parse_error, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_gem(os.str());
}

CellComplex read_pst_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::parse_error, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_pst(os.str());
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::parse_error, "cannot open " + path + " for writing");
    out << content;
}

} // namespace cryst
