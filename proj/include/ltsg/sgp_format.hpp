#ifndef LTSG_SGP_FORMAT_HPP_
#define LTSG_SGP_FORMAT_HPP_

#include <iosfwd>
#include <string>

#include "ltsg/semigroup.hpp"

namespace ltsg {

/// Reads the .sgp text format: '#' comment lines and blank lines are
/// skipped; the first significant line is the order k; the next k
/// significant lines hold k ids each (row i, column j gives i*j); an
/// optional final line "names: n0 n1 ... n_{k-1}" labels the elements.
/// The table is fully validated, including the associativity scan.
Semigroup parse_semigroup(std::istream& in);
Semigroup parse_semigroup(std::string const& text);
Semigroup load_semigroup(std::string const& path);

/// Serialises back to .sgp, including the names line when present.
std::string to_sgp(Semigroup const& s);

}  // namespace ltsg

#endif  // LTSG_SGP_FORMAT_HPP_
