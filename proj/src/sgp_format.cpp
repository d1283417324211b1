#include "ltsg/sgp_format.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace ltsg {

namespace {

bool significant(std::string const& line) {
  for (char c : line) {
    if (c == '#') {
      return false;
    }
    if (!std::isspace(static_cast<unsigned char>(c))) {
      return true;
    }
  }
  return false;
}

std::vector<std::string> tokens_of(std::string const& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) {
    out.push_back(tok);
  }
  return out;
}

element_id parse_id(std::string const& tok, std::size_t order,
                    std::size_t line_no) {
  element_id value = 0;
  auto const* begin = tok.data();
  auto const* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw invalid_input("line " + std::to_string(line_no) +
                        ": expected an element id, got '" + tok + "'");
  }
  if (value >= order) {
    throw invalid_input("line " + std::to_string(line_no) + ": entry " + tok +
                        " out of range 0.." + std::to_string(order - 1));
  }
  return value;
}

}  // namespace

Semigroup parse_semigroup(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  struct Line {
    std::string text;
    std::size_t number;
  };
  std::vector<Line> lines;
  while (std::getline(in, line)) {
    ++line_no;
    if (significant(line)) {
      lines.push_back({line, line_no});
    }
  }
  if (lines.empty()) {
    throw invalid_input("empty input: expected the semigroup order");
  }

  auto header = tokens_of(lines[0].text);
  std::size_t order = 0;
  {
    auto const& tok = header[0];
    auto [ptr, ec] =
        std::from_chars(tok.data(), tok.data() + tok.size(), order);
    if (header.size() != 1 || ec != std::errc() ||
        ptr != tok.data() + tok.size()) {
      throw invalid_input("line " + std::to_string(lines[0].number) +
                          ": expected the order as a single integer");
    }
  }
  if (order == 0) {
    throw invalid_input("line " + std::to_string(lines[0].number) +
                        ": order must be positive");
  }
  if (lines.size() < 1 + order) {
    throw invalid_input("expected " + std::to_string(order) +
                        " table rows, found " +
                        std::to_string(lines.size() - 1));
  }

  std::vector<element_id> table;
  table.reserve(order * order);
  for (std::size_t r = 0; r < order; ++r) {
    auto const& row_line = lines[1 + r];
    auto toks = tokens_of(row_line.text);
    if (toks.size() != order) {
      throw invalid_input("line " + std::to_string(row_line.number) +
                          ": row " + std::to_string(r) + " has " +
                          std::to_string(toks.size()) + " entries, expected " +
                          std::to_string(order));
    }
    for (auto const& tok : toks) {
      table.push_back(parse_id(tok, order, row_line.number));
    }
  }

  std::vector<std::string> names;
  std::size_t next = 1 + order;
  if (next < lines.size()) {
    auto toks = tokens_of(lines[next].text);
    if (toks.empty() || toks[0] != "names:") {
      throw invalid_input("line " + std::to_string(lines[next].number) +
                          ": unexpected content after the table");
    }
    if (toks.size() != 1 + order) {
      throw invalid_input("line " + std::to_string(lines[next].number) +
                          ": expected " + std::to_string(order) + " names");
    }
    names.assign(toks.begin() + 1, toks.end());
    ++next;
  }
  if (next < lines.size()) {
    throw invalid_input("line " + std::to_string(lines[next].number) +
                        ": unexpected trailing content");
  }

  return Semigroup(order, std::move(table), std::move(names));
}

Semigroup parse_semigroup(std::string const& text) {
  std::istringstream in(text);
  return parse_semigroup(in);
}

Semigroup load_semigroup(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw invalid_input("cannot open " + path);
  }
  return parse_semigroup(in);
}

std::string to_sgp(Semigroup const& s) {
  std::ostringstream out;
  out << s.order() << '\n';
  for (std::size_t i = 0; i < s.order(); ++i) {
    auto row = s.row(static_cast<element_id>(i));
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j != 0) {
        out << ' ';
      }
      out << row[j];
    }
    out << '\n';
  }
  if (s.has_names()) {
    out << "names:";
    for (auto const& name : s.names()) {
      out << ' ' << name;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ltsg
