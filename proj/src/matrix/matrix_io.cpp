#include "wasync/matrix/matrix_io.hpp"

#include <sstream>

#include "wasync/core/error.hpp"

namespace wasync {

std::vector<BoolMatrix> parse_matrices(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      const auto pos = line.find('#');
      if (pos != std::string::npos) line.erase(pos);
      while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) line.pop_back();
      const auto start = line.find_first_not_of(" \t");
      if (start == std::string::npos) continue;
      line.erase(0, start);
      return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError(line_no + 1, "missing 'mat <count> <n>' header");
  std::istringstream header(line);
  std::string tag;
  long long count = -1;
  long long n = -1;
  std::string extra;
  if (!(header >> tag >> count >> n) || tag != "mat" || count < 0 || n < 0 || (header >> extra)) {
    throw ParseError(line_no, "malformed header, expected 'mat <count> <n>'");
  }

  std::vector<BoolMatrix> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long long c = 0; c < count; ++c) {
    BoolMatrix m(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) {
      if (!next_line()) throw ParseError(line_no + 1, "unexpected end of input in matrix " + std::to_string(c + 1));
      if (static_cast<long long>(line.size()) != n) {
        throw ParseError(line_no, "row has " + std::to_string(line.size()) + " entries, expected " + std::to_string(n));
      }
      for (long long j = 0; j < n; ++j) {
        const char ch = line[static_cast<std::size_t>(j)];
        if (ch != '0' && ch != '1') throw ParseError(line_no, std::string("unexpected character '") + ch + "'");
        if (ch == '1') m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      }
    }
    out.push_back(std::move(m));
  }
  if (next_line()) throw ParseError(line_no, "trailing content after last matrix");
  return out;
}

std::string serialize_matrices(const std::vector<BoolMatrix>& ms) {
  std::ostringstream out;
  const std::size_t n = ms.empty() ? 0 : ms.front().n();
  out << "mat " << ms.size() << ' ' << n << '\n';
  for (const auto& m : ms) {
    if (m.n() != n) throw InputError("matrices of different dimensions");
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) out << (m.get(i, j) ? '1' : '0');
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace wasync
