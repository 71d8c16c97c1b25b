#pragma once

#include <string>
#include <string_view>

#include "wasync/oracles/cnf.hpp"
#include "wasync/oracles/graph.hpp"

namespace wasync {

/// DIMACS CNF: 'c' comments, a 'p cnf <vars> <clauses>' header, then
/// literals with 0 terminating each clause. A line starting with '%' ends
/// the input. Errors carry the line number.
CnfFormula parse_dimacs_cnf(std::string_view text);

/// DIMACS edge list: 'c' comments, 'p edge <n> <m>' (or 'p col'), then
/// 'e <u> <v>' lines with 1-based endpoints. Duplicate edges are merged;
/// self-loops are rejected.
Graph parse_dimacs_graph(std::string_view text);

std::string serialize_dimacs_cnf(const CnfFormula& f);
std::string serialize_dimacs_graph(const Graph& g);

}  // namespace wasync
