#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/polynomial.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

// The constructive procedures never trust their own bookkeeping: every
// identity the underlying argument relies on is re-checked against ring
// arithmetic as the run proceeds. A broken identity raises claim_violated
// (formula methods) or downgrades the run to an oracle fallback with the
// trace marked stalled (search procedures), so a gap in the argument shows
// up as observable output instead of a wrong answer.

enum class ann_method {
  lemma1,
  thm3,
  lemma2,
  thm1_induction,
  thm1_alternative,
  oracle,
};
const char* method_name(ann_method m);
std::optional<ann_method> method_from_name(std::string_view s);

enum class step_kind {
  strip_f,       // f := (f - a0)/x
  strip_g,       // g := (g - b0)/x
  right_scale_g, // g := g * r (or g * b0)
  left_scale_f,  // f := a0 * f
  duo_witness,   // found r with a0^k * bj = bj * r; polynomials unchanged
  degenerate_g,  // scaled g vanished; argument falls back to b0 directly
  degenerate_f,  // scaled f vanished; argument reverts to the strip path
};
const char* step_kind_name(step_kind k);

struct trace_step {
  step_kind kind;
  std::vector<elem> f_after; // dense normalized coefficients after the step
  std::vector<elem> g_after;
  std::optional<elem> witness;     // duo_witness: the r found
  std::optional<unsigned> exponent; // duo_witness: the k in a0^k
};

struct annihilator_trace {
  ann_method method = ann_method::oracle;
  std::string ring_name;
  std::vector<elem> f_in, g_in;
  std::vector<trace_step> steps;
  std::optional<elem> result;
  std::string failure;        // nonempty when the procedure did not finish
  bool fallback_used = false; // result came from the oracle, not the steps
};

// One step per line: `step <idx> <kind> f=<coeffs> g=<coeffs>
// [witness=<elt>] [k=<int>]`, then `result <elt>` or `failed <reason>`.
std::string serialize(const annihilator_trace& t);

bool verify_annihilation(const poly& f, elem r);       // f * r == 0
bool verify_left_annihilation(elem l, const poly& g);  // l * g == 0

// Exact annihilator sets by scanning every ring element; ascending order,
// always contains 0. Ground truth for everything above.
std::vector<elem> oracle_right_annihilators(const poly& f);
std::vector<elem> oracle_left_annihilators(const poly& g);

// Formula outputs may legitimately be zero; annihilation is still asserted,
// nonzeroness is not, and the flags keep callers from conflating the two.
struct formula_annihilators {
  elem first = 0;
  elem second = 0;
  bool first_is_zero = true;
  bool second_is_zero = true;
};

// (a0^(n+1), am^(n+1)), both left-annihilating g. Requires a
// semicommutative ring and f*g = 0 with f, g nonzero.
formula_annihilators lemma1_left_annihilators(const poly& f, const poly& g);

// (b0^(m+1), bn^(m+1)), both right-annihilating f. Requires a one-sided
// duo ring (left or right) and f*g = 0 with f, g nonzero.
formula_annihilators thm3_right_annihilators(const poly& f, const poly& g);

struct procedure_result {
  elem annihilator = 0; // nonzero on a clean run
  annihilator_trace trace;
  bool stalled() const { return trace.fallback_used; }
};

// Right-duo route: induction on deg f. Case a0*g = 0 strips the constant
// and repairs the recursive annihilator with b0; case a0*g != 0 hunts the
// exponent k and the duo witness r, then replaces g by g*r until the first
// case applies. Returns a nonzero right annihilator of f inside the left
// ideal generated by the original g's coefficients, plus the full trace.
procedure_result lemma2_right_annihilator(const poly& f, const poly& g);

enum class thm1_variant { induction, alternative };

// Left-duo route, two independent arguments. `alternative` (the default
// elsewhere) strips both constants when possible and otherwise scales
// f := a0*f, g := g*b0 with explicit degenerate handling; `induction`
// reduces one degree at a time and is run as an experimental mode - its
// stalls are reported, never masked.
procedure_result thm1_right_annihilator(const poly& f, const poly& g,
                                        thm1_variant variant);

} // namespace ringlab
