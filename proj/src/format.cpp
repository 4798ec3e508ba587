#include "format.hpp"

#include <cctype>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

#include "errors.hpp"

namespace ivfg {

namespace {

struct Token {
    std::string text;
    std::size_t column; // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#')
            break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#')
            ++i;
        tokens.push_back({line.substr(start, i - start), start + 1});
    }
    return tokens;
}

bool valid_name(const std::string& name) {
    if (name.empty())
        return false;
    for (char c : name) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.';
        if (!ok)
            return false;
    }
    return true;
}

Rational number_at(const std::vector<Token>& tokens, std::size_t index, std::size_t lineno) {
    const Token& token = tokens[index];
    const auto value = parse_rational(token.text);
    if (!value)
        throw ParseError("invalid number '" + token.text + "'", lineno, token.column);
    return *value;
}

std::string line_prefix(std::size_t lineno) {
    return "line " + std::to_string(lineno) + ": ";
}

} // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;

    bool have_header = false;
    std::string name;
    std::set<std::string> declared;
    std::vector<std::pair<std::string, Interval>> vertices;
    std::vector<std::tuple<std::string, std::string, Interval>> edges;
    std::vector<std::string> violations;

    while (std::getline(in, line)) {
        ++lineno;
        const auto tokens = tokenize(line);
        if (tokens.empty())
            continue;
        const Token& head = tokens[0];

        if (!have_header) {
            if (head.text != "graph")
                throw ParseError("expected 'graph <name>' as the first directive, got '" +
                                     head.text + "'",
                                 lineno, head.column);
            if (tokens.size() != 2)
                throw ParseError("expected 'graph <name>'", lineno, head.column);
            if (!valid_name(tokens[1].text))
                throw ParseError("invalid graph name '" + tokens[1].text + "'", lineno,
                                 tokens[1].column);
            name = tokens[1].text;
            have_header = true;
            continue;
        }

        if (head.text == "graph") {
            throw ParseError("duplicate 'graph' header", lineno, head.column);
        } else if (head.text == "vertex") {
            if (tokens.size() != 4)
                throw ParseError("expected 'vertex <id> <lo> <hi>'", lineno, head.column);
            const std::string& id = tokens[1].text;
            const Rational lo = number_at(tokens, 2, lineno);
            const Rational hi = number_at(tokens, 3, lineno);
            declared.insert(id);
            try {
                vertices.emplace_back(id, Interval(lo, hi));
            } catch (const ValidationError& e) {
                violations.push_back(line_prefix(lineno) + "vertex '" + id + "': " + e.what());
            }
        } else if (head.text == "edge") {
            if (tokens.size() != 5)
                throw ParseError("expected 'edge <id1> <id2> <lo> <hi>'", lineno, head.column);
            const auto key = Graph::edge_key(tokens[1].text, tokens[2].text);
            const Rational lo = number_at(tokens, 3, lineno);
            const Rational hi = number_at(tokens, 4, lineno);
            bool known = true;
            for (const std::string& end : {key.first, key.second}) {
                if (declared.count(end) == 0) {
                    violations.push_back(line_prefix(lineno) + "edge '" + key.first + "'-'" +
                                         key.second + "': unknown vertex '" + end + "'");
                    known = false;
                }
                if (key.first == key.second)
                    break;
            }
            if (!known)
                continue;
            try {
                edges.emplace_back(tokens[1].text, tokens[2].text, Interval(lo, hi));
            } catch (const ValidationError& e) {
                violations.push_back(line_prefix(lineno) + "edge '" + key.first + "'-'" +
                                     key.second + "': " + e.what());
            }
        } else {
            throw ParseError("unknown directive '" + head.text + "'", lineno, head.column);
        }
    }

    if (!have_header)
        throw ParseError("missing 'graph' header", 1, 1);
    if (!violations.empty())
        throw ValidationError("invalid graph", violations);
    return Graph::build(std::move(name), std::move(vertices), std::move(edges));
}

std::string serialize_graph(const Graph& g) {
    std::string out = "graph " + g.name() + "\n";
    for (const auto& [id, m] : g.vertex_memberships()) {
        out += "vertex " + id + " " + format_rational(m.lo()) + " " + format_rational(m.hi()) +
               "\n";
    }
    for (const auto& [key, m] : g.edges()) {
        out += "edge " + key.first + " " + key.second + " " + format_rational(m.lo()) + " " +
               format_rational(m.hi()) + "\n";
    }
    return out;
}

} // namespace ivfg
