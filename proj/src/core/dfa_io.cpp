#include "wasync/core/dfa_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "wasync/core/error.hpp"

namespace wasync {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    std::string token;
    while (in >> token) line.tokens.push_back(token);
    if (!line.tokens.empty() && line.tokens.front().front() != '#') lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

std::size_t parse_count(const std::string& token, std::size_t line, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("invalid ") + what + " '" + token + "'");
  }
  return value;
}

}  // namespace

AnyAutomaton parse_automaton(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty input, expected 'dfa <n> <k>' header");

  const Line& header = lines.front();
  const auto& h = header.tokens;
  if (h[0] != "dfa" || (h.size() != 3 && h.size() != 4) || (h.size() == 4 && h[3] != "partial")) {
    throw ParseError(header.number, "malformed header, expected 'dfa <n> <k> [partial]'");
  }
  const std::size_t n = parse_count(h[1], header.number, "state count");
  const std::size_t k = parse_count(h[2], header.number, "letter count");
  const bool partial = h.size() == 4;
  if (n == 0 || k == 0) throw ParseError(header.number, "state and letter counts must be positive");

  std::vector<State> table;
  table.reserve(n * k);
  std::size_t idx = 1;
  for (std::size_t row = 0; row < n; ++row, ++idx) {
    if (idx >= lines.size()) {
      const std::size_t at = lines.back().number + 1;
      throw ParseError(at, "expected " + std::to_string(n) + " transition rows, found " +
                               std::to_string(row));
    }
    const Line& line = lines[idx];
    if (line.tokens.front().back() == ':') {
      throw ParseError(line.number, "expected " + std::to_string(n) + " transition rows, found " +
                                        std::to_string(row));
    }
    if (line.tokens.size() != k) {
      throw ParseError(line.number, "row has " + std::to_string(line.tokens.size()) +
                                        " entries, expected " + std::to_string(k));
    }
    for (const auto& token : line.tokens) {
      if (token == "-") {
        if (!partial) throw ParseError(line.number, "'-' in a non-partial automaton");
        table.push_back(kUndefined);
        continue;
      }
      const std::size_t target = parse_count(token, line.number, "state index");
      if (target >= n) {
        throw ParseError(line.number, "state index " + token + " out of range 0.." +
                                          std::to_string(n - 1));
      }
      table.push_back(static_cast<State>(target));
    }
  }

  std::vector<std::string> state_names;
  std::vector<std::string> letter_names;
  for (; idx < lines.size(); ++idx) {
    const Line& line = lines[idx];
    const auto& key = line.tokens.front();
    std::vector<std::string> names(line.tokens.begin() + 1, line.tokens.end());
    if (key == "states:") {
      if (!state_names.empty()) throw ParseError(line.number, "duplicate 'states:' line");
      if (names.size() != n) {
        throw ParseError(line.number, "'states:' lists " + std::to_string(names.size()) +
                                          " names, expected " + std::to_string(n));
      }
      state_names = std::move(names);
    } else if (key == "letters:") {
      if (!letter_names.empty()) throw ParseError(line.number, "duplicate 'letters:' line");
      if (names.size() != k) {
        throw ParseError(line.number, "'letters:' lists " + std::to_string(names.size()) +
                                          " names, expected " + std::to_string(k));
      }
      letter_names = std::move(names);
    } else {
      throw ParseError(line.number, "unexpected content after " + std::to_string(n) +
                                        " transition rows");
    }
  }

  try {
    if (partial) {
      return PartialDfa(n, k, std::move(table), std::move(letter_names), std::move(state_names));
    }
    return Dfa(n, k, std::move(table), std::move(letter_names), std::move(state_names));
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(header.number, e.what());
  }
}

Dfa parse_dfa(std::string_view text) {
  auto parsed = parse_automaton(text);
  if (auto* dfa = std::get_if<Dfa>(&parsed)) return std::move(*dfa);
  auto complete = std::get<PartialDfa>(parsed).to_dfa();
  if (!complete) throw ParseError(1, "automaton has undefined transitions");
  return std::move(*complete);
}

PartialDfa parse_partial_dfa(std::string_view text) {
  auto parsed = parse_automaton(text);
  if (auto* dfa = std::get_if<Dfa>(&parsed)) return PartialDfa(*dfa);
  return std::move(std::get<PartialDfa>(parsed));
}

namespace {

std::string serialize_table(const TransitionTable& a, bool partial) {
  std::ostringstream out;
  out << "dfa " << a.n_states() << ' ' << a.n_letters();
  if (partial) out << " partial";
  out << '\n';
  for (State q = 0; q < a.n_states(); ++q) {
    const auto row = a.row(q);
    for (std::size_t x = 0; x < row.size(); ++x) {
      if (x > 0) out << ' ';
      if (row[x] == kUndefined) {
        out << '-';
      } else {
        out << row[x];
      }
    }
    out << '\n';
  }
  if (a.has_state_names()) {
    out << "states:";
    for (const auto& name : a.state_names()) out << ' ' << name;
    out << '\n';
  }
  if (a.has_letter_names()) {
    out << "letters:";
    for (const auto& name : a.letter_names()) out << ' ' << name;
    out << '\n';
  }
  return out.str();
}

}  // namespace

std::string serialize_dfa(const Dfa& a) { return serialize_table(a, false); }
std::string serialize_dfa(const PartialDfa& a) { return serialize_table(a, true); }
std::string serialize_dfa(const AnyAutomaton& a) {
  return std::visit([](const auto& x) { return serialize_dfa(x); }, a);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

AnyAutomaton read_automaton_file(const std::string& path) {
  return parse_automaton(read_text_file(path));
}

}  // namespace wasync
