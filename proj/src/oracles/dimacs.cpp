#include "wasync/oracles/dimacs.hpp"

#include <charconv>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <vector>

#include "wasync/core/error.hpp"

namespace wasync {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream fields(raw);
    Line line{number, {}};
    std::string tok;
    while (fields >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

long long to_int(const std::string& tok, std::size_t line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
  return value;
}

}  // namespace

CnfFormula parse_dimacs_cnf(std::string_view text) {
  std::optional<std::pair<long long, long long>> header;
  std::vector<std::vector<int>> clauses;
  std::vector<int> current;
  std::size_t last_line = 0;

  for (const auto& line : split_lines(text)) {
    last_line = line.number;
    const auto& t = line.tokens;
    if (t[0] == "c" || t[0][0] == 'c') continue;
    if (t[0][0] == '%') break;
    if (t[0] == "p") {
      if (header) throw ParseError(line.number, "duplicate problem line");
      if (t.size() != 4 || t[1] != "cnf") throw ParseError(line.number, "malformed header, expected 'p cnf <vars> <clauses>'");
      header = std::make_pair(to_int(t[2], line.number), to_int(t[3], line.number));
      if (header->first < 0 || header->second < 0) throw ParseError(line.number, "negative counts in header");
      continue;
    }
    if (!header) throw ParseError(line.number, "clause before 'p cnf' header");
    for (const auto& tok : t) {
      const long long lit = to_int(tok, line.number);
      if (lit == 0) {
        if (current.empty()) throw ParseError(line.number, "empty clause");
        clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (std::llabs(lit) > header->first) {
        throw ParseError(line.number, "literal " + tok + " exceeds variable count " +
                                          std::to_string(header->first));
      }
      current.push_back(static_cast<int>(lit));
    }
  }
  if (!header) throw ParseError(last_line + 1, "missing 'p cnf' header");
  if (!current.empty()) clauses.push_back(std::move(current));
  if (static_cast<long long>(clauses.size()) != header->second) {
    throw ParseError(last_line, "header declares " + std::to_string(header->second) +
                                    " clauses, found " + std::to_string(clauses.size()));
  }
  return CnfFormula(static_cast<std::size_t>(header->first), std::move(clauses));
}

Graph parse_dimacs_graph(std::string_view text) {
  std::optional<long long> n;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::size_t last_line = 0;

  for (const auto& line : split_lines(text)) {
    last_line = line.number;
    const auto& t = line.tokens;
    if (t[0] == "c") continue;
    if (t[0] == "p") {
      if (n) throw ParseError(line.number, "duplicate problem line");
      if (t.size() != 4 || (t[1] != "edge" && t[1] != "col")) {
        throw ParseError(line.number, "malformed header, expected 'p edge <n> <m>'");
      }
      n = to_int(t[2], line.number);
      if (*n < 0) throw ParseError(line.number, "negative vertex count");
      continue;
    }
    if (t[0] == "e") {
      if (!n) throw ParseError(line.number, "edge before 'p edge' header");
      if (t.size() != 3) throw ParseError(line.number, "malformed edge line, expected 'e <u> <v>'");
      const long long u = to_int(t[1], line.number);
      const long long v = to_int(t[2], line.number);
      if (u < 1 || v < 1 || u > *n || v > *n) throw ParseError(line.number, "edge endpoint out of range");
      if (u == v) throw ParseError(line.number, "self-loop on vertex " + t[1]);
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
      continue;
    }
    throw ParseError(line.number, "unexpected line starting with '" + t[0] + "'");
  }
  if (!n) throw ParseError(last_line + 1, "missing 'p edge' header");
  return Graph(static_cast<std::size_t>(*n), edges);
}

std::string serialize_dimacs_cnf(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.n_vars() << ' ' << f.n_clauses() << '\n';
  for (const auto& clause : f.clauses()) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

std::string serialize_dimacs_graph(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.n_vertices() << ' ' << g.edges().size() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

}  // namespace wasync
