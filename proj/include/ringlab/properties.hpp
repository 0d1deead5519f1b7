#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

// Degree bounds for the polynomial-quantified properties: deg f <= m,
// deg g <= n. Both components are at least 1.
struct mccoy_bound {
  unsigned m = 2;
  unsigned n = 2;
  bool operator==(const mccoy_bound&) const = default;
};

enum class property_id {
  commutative,
  duo,
  left_duo,
  right_duo,
  semicommutative,
  two_primal,
  symmetric,
  reversible,
  abelian,
  dedekind_finite,
  reduced,
  armendariz,
  lin_armendariz,
  mccoy,
  right_mccoy,
  left_mccoy,
  lin_mccoy,
  right_lin_mccoy,
};

inline constexpr property_id all_properties[] = {
    property_id::commutative,     property_id::duo,
    property_id::left_duo,        property_id::right_duo,
    property_id::semicommutative, property_id::two_primal,
    property_id::symmetric,       property_id::reversible,
    property_id::abelian,         property_id::dedekind_finite,
    property_id::reduced,         property_id::armendariz,
    property_id::lin_armendariz,  property_id::mccoy,
    property_id::right_mccoy,     property_id::left_mccoy,
    property_id::lin_mccoy,       property_id::right_lin_mccoy,
};

const char* property_name(property_id p);
std::optional<property_id> property_from_name(std::string_view s);

enum class verdict_kind { holds, fails, holds_up_to_bound, unsupported };

// Concrete refutation data; which fields are meaningful depends on the
// property (see recheck_witness for the exact semantics per property).
struct witness_data {
  std::vector<elem> elems;
  std::vector<elem> fcoeffs, gcoeffs;
  std::vector<elem> extra; // e.g. the separating prime ideal for two_primal
  unsigned i = 0, j = 0;   // coefficient indices for armendariz
};

struct verdict {
  verdict_kind kind = verdict_kind::holds;
  witness_data witness;  // meaningful when kind == fails
  mccoy_bound bound{};   // meaningful when kind == holds_up_to_bound
  std::string reason;    // meaningful when kind == unsupported
  std::string note;      // optional extra info (e.g. failing permutations)

  // "Not refuted": holds outright or up to the checked bound.
  bool positive() const {
    return kind == verdict_kind::holds || kind == verdict_kind::holds_up_to_bound;
  }
};

// Element-quantified properties; verdicts are holds/fails (or unsupported
// where unity is required and absent).
verdict is_commutative(const finite_ring& r);
verdict is_left_duo(const finite_ring& r);   // every principal left ideal two-sided
verdict is_right_duo(const finite_ring& r);
verdict is_duo(const finite_ring& r);        // left and right
verdict is_semicommutative(const finite_ring& r); // ab=0 -> acb=0
verdict is_reversible(const finite_ring& r);      // ab=0 -> ba=0
verdict is_symmetric(const finite_ring& r);       // abc=0 -> acb=0
verdict is_reduced(const finite_ring& r);         // no nonzero square-zero element
verdict is_abelian(const finite_ring& r);         // idempotents central
verdict is_dedekind_finite(const finite_ring& r); // ab=1 -> ba=1
verdict is_2_primal(const finite_ring& r);        // prime radical = nilpotents

// Polynomial-quantified properties, decided exhaustively within a bound;
// a positive verdict is holds_up_to_bound, never an unbounded claim.
verdict is_right_mccoy_up_to(const finite_ring& r, mccoy_bound b);
verdict is_left_mccoy_up_to(const finite_ring& r, mccoy_bound b);
verdict is_mccoy_up_to(const finite_ring& r, mccoy_bound b); // both sides
verdict is_armendariz_up_to(const finite_ring& r, mccoy_bound b);
verdict is_linearly_mccoy(const finite_ring& r);        // bound (1,1), both sides
verdict is_right_linearly_mccoy(const finite_ring& r);  // bound (1,1)
verdict is_linearly_armendariz(const finite_ring& r);   // bound (1,1)

verdict check_property(const finite_ring& r, property_id p, mccoy_bound b);

// Re-validates a fails witness by direct arithmetic (no re-running of the
// original scan). True iff the witness genuinely refutes the property.
bool recheck_witness(const finite_ring& r, property_id p,
                     const witness_data& w);

struct property_report {
  std::string ring_name;
  std::vector<std::pair<property_id, verdict>> entries;
};

property_report check_all(const finite_ring& r, mccoy_bound b);

// One line per verdict:
//   ring <name> property <id> verdict <holds|fails|holds_up_to(m,n)|unsupported> [witness ...]
std::string format_report_line(std::string_view ring_name, property_id p,
                               const verdict& v);
std::string serialize(const property_report& rep);

} // namespace ringlab
