#include "ltsg/dfa.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace ltsg {

namespace {

std::size_t parse_state(std::string const& tok, std::size_t state_count,
                        std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw invalid_input("line " + std::to_string(line_no) +
                        ": expected a state id, got '" + tok + "'");
  }
  if (value >= state_count) {
    throw invalid_input("line " + std::to_string(line_no) + ": state " + tok +
                        " out of range 0.." + std::to_string(state_count - 1));
  }
  return value;
}

}  // namespace

Dfa parse_dfa(std::istream& in) {
  Dfa dfa;
  bool have_states = false;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string head;
    if (!(tokens >> head) || head[0] == '#') {
      continue;
    }

    if (head == "states:") {
      if (have_states) {
        throw invalid_input("line " + std::to_string(line_no) +
                            ": duplicate states line");
      }
      if (!(tokens >> dfa.state_count) || dfa.state_count == 0) {
        throw invalid_input("line " + std::to_string(line_no) +
                            ": expected a positive state count");
      }
      have_states = true;
      continue;
    }
    if (!have_states) {
      throw invalid_input("line " + std::to_string(line_no) +
                          ": 'states: N' must come first");
    }

    if (head == "start:") {
      std::string tok;
      if (!(tokens >> tok)) {
        throw invalid_input("line " + std::to_string(line_no) +
                            ": expected a start state");
      }
      dfa.start = parse_state(tok, dfa.state_count, line_no);
      continue;
    }
    if (head == "accept:") {
      std::string tok;
      while (tokens >> tok) {
        dfa.accepting.push_back(parse_state(tok, dfa.state_count, line_no));
      }
      continue;
    }
    if (head == "letter") {
      std::string name;
      if (!(tokens >> name) || name.empty() || name.back() != ':') {
        throw invalid_input("line " + std::to_string(line_no) +
                            ": expected 'letter <name>: t0 t1 ...'");
      }
      name.pop_back();
      if (std::find(dfa.letters.begin(), dfa.letters.end(), name) !=
          dfa.letters.end()) {
        throw invalid_input("line " + std::to_string(line_no) +
                            ": duplicate letter " + name);
      }
      std::vector<std::size_t> map;
      std::string tok;
      while (tokens >> tok) {
        map.push_back(parse_state(tok, dfa.state_count, line_no));
      }
      if (map.size() != dfa.state_count) {
        throw invalid_input("line " + std::to_string(line_no) + ": letter " +
                            name + " maps " + std::to_string(map.size()) +
                            " states, expected " +
                            std::to_string(dfa.state_count));
      }
      dfa.letters.push_back(name);
      dfa.transitions.push_back(std::move(map));
      continue;
    }
    throw invalid_input("line " + std::to_string(line_no) +
                        ": unrecognised directive '" + head + "'");
  }

  if (!have_states) {
    throw invalid_input("missing 'states: N' line");
  }
  if (dfa.letters.empty()) {
    throw invalid_input("the automaton has no letters");
  }
  return dfa;
}

Dfa parse_dfa(std::string const& text) {
  std::istringstream in(text);
  return parse_dfa(in);
}

Dfa load_dfa(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw invalid_input("cannot open " + path);
  }
  return parse_dfa(in);
}

TransformationClosure transition_semigroup(Dfa const& dfa, std::size_t cap) {
  return transformation_subsemigroup(dfa.state_count, dfa.transitions, cap,
                                     dfa.letters);
}

}  // namespace ltsg
