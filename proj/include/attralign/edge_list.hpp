#pragma once

#include <iosfwd>

#include "attralign/graph.hpp"

namespace attralign {

// Text format: a header line "n m", then one edge per line as two decimal
// labels. Users are 1..n and attributes n+1..n+m; a line joining two
// attributes is rejected. Blank lines and lines starting with '#' are skipped.
AttributedGraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const AttributedGraph& g);

// One line "i pi(i)" per user, 1-based, in order of i.
Permutation read_permutation(std::istream& in);
void write_permutation(std::ostream& out, const Permutation& pi);

}  // namespace attralign
