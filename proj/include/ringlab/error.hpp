#pragma once

#include <stdexcept>
#include <string>

namespace ringlab {

// Every condition the library can reject, in one enum so callers (and the
// CLI exit-code mapping) can dispatch without matching message strings.
enum class errc {
  table_shape,            // tables not k*k or entries out of [0,k)
  not_a_group,            // addition table is not an abelian group
  not_associative,        // multiplication fails associativity
  not_distributive,       // distributivity fails on some triple
  no_unity,               // unity required but no two-sided identity exists
  non_unital_unsupported, // operation needs a unital ring
  mixed_unitality,        // product of unital and non-unital ring
  order_too_large,        // beyond a documented hard limit
  parse_error,            // malformed .ring file or polynomial literal
  ring_mismatch,          // operands belong to different rings
  zero_polynomial,        // nonzero polynomial required
  not_semicommutative,    // certification required by lemma1 failed
  product_not_zero,       // f*g = 0 required
  not_left_duo,           // certification required by thm1 failed
  not_right_duo,          // certification required by lemma2 failed
  not_duo,                // neither one-sided duo certification holds
  witness_not_found,      // a scan the theory guarantees nonempty came up empty
  nontermination_guard,   // procedure exceeded its step cap
  claim_violated,         // a stated identity failed when re-checked at runtime
};

const char* errc_name(errc c);

class ring_error : public std::runtime_error {
public:
  ring_error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw ring_error(code, std::string(errc_name(code)) + ": " + what);
}

} // namespace ringlab
