#pragma once

#include <deque>
#include <string>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

// Z/nZ with elements 0..n-1, named "Z<n>".
finite_ring make_zn(unsigned n);

// Componentwise product; element index is ia * |b| + ib. Requires both
// factors unital or both non-unital. Named "<a>x<b>".
finite_ring direct_product(const finite_ring& a, const finite_ring& b);

enum class matrix_shape { full2x2, upper_triangular2x2 };

// 2x2 matrix ring (or its upper-triangular subring) over a commutative
// unital base. Entries are enumerated row-major, most significant first, so
// the zero matrix is element 0.
finite_ring make_matrix_ring(const finite_ring& base, matrix_shape shape);

// All unital rings of the given order (1..4) up to isomorphism, by
// exhaustive search over distributivity-consistent multiplication tables on
// each abelian group of that order, then 0-fixing-permutation dedup.
// Deterministically named "order<k>:1", "order<k>:2", ... in canonical-key
// order.
std::vector<finite_ring> enumerate_unital_rings(unsigned order);

// True iff some bijection fixing 0 carries (add,mul) of a onto b.
// Exhaustive permutation search; meant for small orders.
bool isomorphic(const finite_ring& a, const finite_ring& b);

// A named collection of rings; names are unique within the corpus. Storage
// is address-stable so polynomials may hold pointers to members.
class ring_corpus {
public:
  enum class provenance { builtin, enumerated, file };

  const finite_ring& add(finite_ring r, provenance p);
  std::size_t size() const { return rings_.size(); }
  const finite_ring& operator[](std::size_t i) const { return rings_[i]; }
  provenance provenance_of(std::size_t i) const { return prov_[i]; }
  const finite_ring* find(std::string_view name) const;

private:
  std::deque<finite_ring> rings_;
  std::vector<provenance> prov_;
};

// The fixed corpus backing the builtin registry and diagram runs:
// Z2..Z12, Z2xZ2, Z2xZ4, U2Z2 (upper triangular 2x2 over Z2), M2Z2 (full
// 2x2 over Z2), and the enumerated unital rings of order 4.
const ring_corpus& builtin_corpus();

// Builtin registry lookup by name ("Z4", "M2Z2", "order4:2", ...);
// nullptr when unknown.
const finite_ring* find_builtin(std::string_view name);

} // namespace ringlab
