#pragma once

#include <string>

#include "einf/graph_term.hpp"

namespace einf {

// JSON layout:
//   {"inputs": n, "outputs": m,
//    "vertices": [{"kind": "mu", "params": ["1/2"], "in": [e..], "out": [e..]}],
//    "edges": [{"from": {"port": i} | {"vertex": v, "slot": k},
//               "to":   {"port": j} | {"vertex": v, "slot": k}}]}
// Ports, vertices and slots are 0-based; "in"/"out" list edge indices per slot.
std::string to_json(const GraphTerm& g, int indent = 2);
GraphTerm graph_from_json(const std::string& text);  // throws ParseError

std::string to_dot(const GraphTerm& g, const std::string& name = "G");

// One-line human summary: biarity, vertex kinds and parameters.
std::string to_text(const GraphTerm& g);

}  // namespace einf
