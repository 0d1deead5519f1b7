#pragma once

#include <iosfwd>
#include <string>

#include "ringlab/ring.hpp"

namespace ringlab {

// The ".ring" text format:
//
//   order <k>
//   unital <yes|no>
//   name <identifier>
//   <k rows of k integers>      addition table
//   <blank line>
//   <k rows of k integers>      multiplication table
//
// Rows are space-separated, entries in [0,k). The unital line states whether
// the ring is expected to have a two-sided identity; validation verifies it
// (a 'yes' without identity is an error; identity is discovered either way).
// Parsers reject wrong row/column counts and trailing garbage. Loading runs
// full validation, so a loaded ring may be renumbered (additive identity
// moves to index 0).

finite_ring read_ring(std::istream& in, const std::string& source_name);
finite_ring load_ring(const std::string& path);

void write_ring(std::ostream& out, const finite_ring& r);
void save_ring(const finite_ring& r, const std::string& path);

} // namespace ringlab
