#pragma once

#include <string>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace support {

inline ivfg::Rational rat(const std::string& text) {
    const auto value = ivfg::parse_rational(text);
    REQUIRE(value.has_value());
    return *value;
}

inline ivfg::Interval iv(const std::string& lo, const std::string& hi) {
    return ivfg::Interval(rat(lo), rat(hi));
}

// The triangle used throughout: vertices u1 [0.3,0.7], u2 [0.3,0.8],
// u3 [0.4,0.5], edges u1u2 [0.2,0.3], u2u3 [0.3,0.4], u1u3 [0.2,0.3].
inline ivfg::Graph example26() {
    return ivfg::Graph::build("example26",
                              {{"u1", iv("0.3", "0.7")},
                               {"u2", iv("0.3", "0.8")},
                               {"u3", iv("0.4", "0.5")}},
                              {{"u1", "u2", iv("0.2", "0.3")},
                               {"u2", "u3", iv("0.3", "0.4")},
                               {"u1", "u3", iv("0.2", "0.3")}});
}

// Path a-b-c-d whose middle vertices see neighbours of distinct degrees.
inline ivfg::Graph path4() {
    return ivfg::Graph::build("path4",
                              {{"a", iv("0.1", "0.2")},
                               {"b", iv("0.2", "0.3")},
                               {"c", iv("0.3", "0.4")},
                               {"d", iv("0.4", "0.5")}},
                              {{"a", "b", iv("0.1", "0.2")},
                               {"b", "c", iv("0.2", "0.3")},
                               {"c", "d", iv("0.3", "0.4")}});
}

inline ivfg::Graph single_edge(const std::string& name, const std::string& vertex_lo,
                               const std::string& vertex_hi, const std::string& edge_lo,
                               const std::string& edge_hi) {
    return ivfg::Graph::build(name,
                              {{"a", iv(vertex_lo, vertex_hi)}, {"b", iv(vertex_lo, vertex_hi)}},
                              {{"a", "b", iv(edge_lo, edge_hi)}});
}

} // namespace support
