#ifndef LTSG_DFA_HPP_
#define LTSG_DFA_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ltsg/catalog.hpp"
#include "ltsg/semigroup.hpp"

namespace ltsg {

/// A complete deterministic automaton: one total map on the states per
/// letter. Start and accepting states are kept if the file names them but
/// play no role in the analysis.
struct Dfa {
  std::size_t state_count = 0;
  std::vector<std::string> letters;
  std::vector<std::vector<std::size_t>> transitions;  // per letter
  std::optional<std::size_t> start;
  std::vector<std::size_t> accepting;
};

/// Reads the .dfa text format: '#' comments, "states: N", one
/// "letter X: t0 t1 ... t_{N-1}" line per letter, optional "start: i" and
/// "accept: i j ..." lines.
Dfa parse_dfa(std::istream& in);
Dfa parse_dfa(std::string const& text);
Dfa load_dfa(std::string const& path);

/// The semigroup of all transformations induced by nonempty words,
/// with the letter map of the generators.
TransformationClosure transition_semigroup(Dfa const& dfa, std::size_t cap);

}  // namespace ltsg

#endif  // LTSG_DFA_HPP_
