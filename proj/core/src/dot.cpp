#include "relalg/dot.hpp"

#include <sstream>

namespace relalg {

namespace {

    std::string quoted(const std::string &s)
    {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\')
                out += '\\';
            out += c;
        }
        return out + '"';
    }

} // namespace

std::string to_dot(const PreNetwork &n, const AtomStructure &s, const std::string &graph_name)
{
    std::ostringstream out;
    out << "digraph " << quoted(graph_name) << " {\n";
    out << "  node [shape=circle];\n";
    for (auto x : n.nodes())
        out << "  n" << to_underlying(x) << ";\n";
    for (const auto &[edge, atom] : n.labels()) {
        const auto [x, y] = edge;
        out << "  n" << to_underlying(x) << " -> n" << to_underlying(y) << " [label=" << quoted(s.name(atom));
        if (to_underlying(x) >= to_underlying(y))
            out << ", style=dashed";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace relalg
