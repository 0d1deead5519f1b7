#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/error.hpp"

namespace ringlab {

// Element of a finite ring: an index into its operation tables.
using elem = std::uint8_t;

// Hard cap on ring order; elements must fit elem and validation is O(k^3).
inline constexpr unsigned max_order = 256;

struct raw_ring_tables {
  unsigned order = 0;
  std::vector<elem> add; // row-major k*k
  std::vector<elem> mul; // row-major k*k
};

// A finite ring as explicit operation tables. Immutable after validation;
// construct through validate_ring. Element 0 is always the additive
// identity (validation renumbers if the input tables disagree).
class finite_ring {
public:
  unsigned order() const noexcept { return k_; }
  std::string_view name() const noexcept { return name_; }
  bool unital() const noexcept { return one_.has_value(); }
  std::optional<elem> one() const noexcept { return one_; }

  elem add(elem a, elem b) const { return add_[a * k_ + b]; }
  elem mul(elem a, elem b) const { return mul_[a * k_ + b]; }
  elem neg(elem a) const { return neg_[a]; }
  elem sub(elem a, elem b) const { return add(a, neg(b)); }

  // a^e by repeated multiplication, e >= 1.
  elem pow(elem a, unsigned e) const;

  const elem* add_row(elem a) const { return add_.data() + a * k_; }
  const elem* mul_row(elem a) const { return mul_.data() + a * k_; }
  // Row b of the transposed multiplication table: mul_col(b)[a] == mul(a,b).
  const elem* mul_col(elem b) const { return mul_t_.data() + b * k_; }

  // 16-byte padded rows for the shuffle kernels; present iff order() <= 16.
  bool has_simd_tables() const noexcept { return !mul16_.empty(); }
  const elem* add_row16(elem a) const { return add16_.data() + a * 16u; }
  const elem* mul_row16(elem a) const { return mul16_.data() + a * 16u; }
  const elem* mul_col16(elem b) const { return mul16t_.data() + b * 16u; }

  // Copy with a different display name (tables unchanged).
  finite_ring renamed(std::string new_name) const;

  bool same_tables_as(const finite_ring& other) const {
    return k_ == other.k_ && add_ == other.add_ && mul_ == other.mul_;
  }

  friend finite_ring validate_ring(const raw_ring_tables& t,
                                   bool require_unital, std::string name);

private:
  finite_ring() = default;
  void build_derived_tables();

  unsigned k_ = 0;
  std::vector<elem> add_, mul_, mul_t_;
  std::vector<elem> neg_;
  std::optional<elem> one_;
  std::string name_;
  std::vector<elem> add16_, mul16_, mul16t_;
};

// Checks the full ring axioms (abelian group, associativity, two-sided
// distributivity) and scans for a two-sided identity. Unity is discovered,
// never declared: require_unital only controls whether its absence is an
// error. Renumbers elements so the additive identity sits at index 0.
finite_ring validate_ring(const raw_ring_tables& t, bool require_unital,
                          std::string name);

// Left ideal generated by a finite set, as an explicit member list.
// Requires a unital ring (so the ideal is exactly the set of finite sums
// of left multiples and the worklist closure below is complete).
class left_ideal {
public:
  std::span<const elem> members() const { return members_; }
  std::span<const elem> generators() const { return generators_; }
  bool contains(elem a) const { return in_[a]; }
  std::size_t size() const { return members_.size(); }

  friend left_ideal left_ideal_generated_by(const finite_ring& r,
                                            std::span<const elem> gens);

private:
  std::vector<elem> members_;    // ascending
  std::vector<elem> generators_;
  std::vector<bool> in_;
};

left_ideal left_ideal_generated_by(const finite_ring& r,
                                   std::span<const elem> gens);

// True iff i absorbs multiplication on the right as well: x*s in i for all
// members x and all ring elements s.
bool is_two_sided(const finite_ring& r, const left_ideal& i);

} // namespace ringlab
