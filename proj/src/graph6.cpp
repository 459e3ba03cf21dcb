#include <holeforge/errors.hpp>
#include <holeforge/graph6.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace holeforge {

namespace {
    constexpr std::string_view header = ">>graph6<<";

    auto sextet(std::string_view s, std::size_t at, std::size_t base) -> unsigned
    {
        auto c = static_cast<unsigned char>(s[at]);
        if (c < 63 || c > 126)
            throw Graph6Error("character out of printable graph6 range", base + at);
        return c - 63u;
    }
}

auto parse_graph6(std::string_view text) -> Graph
{
    std::size_t base = 0;
    if (text.starts_with(header)) {
        text.remove_prefix(header.size());
        base = header.size();
    }
    while (! text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw Graph6Error("missing length field", base);

    std::size_t pos = 0;
    long long n;
    if (text[0] != '~') {
        n = sextet(text, 0, base);
        pos = 1;
    }
    else if (text.size() >= 2 && text[1] == '~') {
        if (text.size() < 8)
            throw Graph6Error("truncated 8-byte length field", base + text.size());
        n = 0;
        for (std::size_t i = 2; i < 8; ++i)
            n = (n << 6) | sextet(text, i, base);
        if (n < 258048)
            throw Graph6Error("non-minimal 8-byte length field", base);
        pos = 8;
    }
    else {
        if (text.size() < 4)
            throw Graph6Error("truncated 4-byte length field", base + text.size());
        n = 0;
        for (std::size_t i = 1; i < 4; ++i)
            n = (n << 6) | sextet(text, i, base);
        if (n < 63)
            throw Graph6Error("non-minimal 4-byte length field", base);
        pos = 4;
    }
    if (n > (1 << 20))
        throw Graph6Error("vertex count " + std::to_string(n) + " too large", base);

    auto bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    auto expected = (bits + 5) / 6;
    if (text.size() - pos != expected)
        throw Graph6Error("edge payload has " + std::to_string(text.size() - pos) + " bytes, expected " + std::to_string(expected),
                base + pos + std::min(text.size() - pos, expected));

    Graph g(static_cast<int>(n));
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            auto byte = sextet(text, pos + k / 6, base);
            if ((byte >> (5 - k % 6)) & 1u)
                g.add_edge(i, j);
        }
    for (; k < expected * 6; ++k)
        if ((sextet(text, pos + k / 6, base) >> (5 - k % 6)) & 1u)
            throw Graph6Error("nonzero padding bit", base + pos + k / 6);
    return g;
}

auto write_graph6(const Graph & g) -> std::string
{
    std::string out;
    auto n = static_cast<long long>(g.vertex_count());
    if (n <= 62)
        out.push_back(static_cast<char>(63 + n));
    else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    else {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }

    unsigned acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

auto read_graphs(std::istream & in) -> std::vector<Graph>
{
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto text = buffer.str();

    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        return {};
    // graph6 length bytes are never digits; an edge list always starts with one
    if (std::isdigit(static_cast<unsigned char>(text[first])))
        return {parse_edge_list(text)};

    std::vector<Graph> out;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        while (! line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        if (line.empty())
            continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

} // namespace holeforge
