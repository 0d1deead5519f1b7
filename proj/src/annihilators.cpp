#include "ringlab/annihilators.hpp"

#include <algorithm>

#include "ringlab/properties.hpp"

namespace ringlab {

const char* method_name(ann_method m) {
  switch (m) {
    case ann_method::lemma1: return "lemma1";
    case ann_method::thm3: return "thm3";
    case ann_method::lemma2: return "lemma2";
    case ann_method::thm1_induction: return "thm1-induction";
    case ann_method::thm1_alternative: return "thm1-alternative";
    case ann_method::oracle: return "oracle";
  }
  return "?";
}

std::optional<ann_method> method_from_name(std::string_view s) {
  for (ann_method m :
       {ann_method::lemma1, ann_method::thm3, ann_method::lemma2,
        ann_method::thm1_induction, ann_method::thm1_alternative,
        ann_method::oracle})
    if (s == method_name(m)) return m;
  return std::nullopt;
}

const char* step_kind_name(step_kind k) {
  switch (k) {
    case step_kind::strip_f: return "strip_f";
    case step_kind::strip_g: return "strip_g";
    case step_kind::right_scale_g: return "right_scale_g";
    case step_kind::left_scale_f: return "left_scale_f";
    case step_kind::duo_witness: return "duo_witness";
    case step_kind::degenerate_g: return "degenerate_g";
    case step_kind::degenerate_f: return "degenerate_f";
  }
  return "?";
}

namespace {

std::string format_coeffs(const std::vector<elem>& cs) {
  if (cs.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(unsigned(cs[i]));
  }
  return s;
}

std::vector<elem> cvec(const poly& p) {
  return {p.coeffs().begin(), p.coeffs().end()};
}

} // namespace

std::string serialize(const annihilator_trace& t) {
  std::string out;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const trace_step& s = t.steps[i];
    out += "step " + std::to_string(i) + " " + step_kind_name(s.kind) +
           " f=" + format_coeffs(s.f_after) + " g=" + format_coeffs(s.g_after);
    if (s.witness) out += " witness=" + std::to_string(unsigned(*s.witness));
    if (s.exponent) out += " k=" + std::to_string(*s.exponent);
    out += "\n";
  }
  if (!t.failure.empty())
    out += "failed " + t.failure + "\n";
  else if (t.result)
    out += "result " + std::to_string(unsigned(*t.result)) + "\n";
  else
    out += "failed no-result\n";
  return out;
}

bool verify_annihilation(const poly& f, elem r) {
  return scale_right(f, r).is_zero();
}

bool verify_left_annihilation(elem l, const poly& g) {
  return scale_left(l, g).is_zero();
}

std::vector<elem> oracle_right_annihilators(const poly& f) {
  if (f.is_zero()) fail(errc::zero_polynomial, "oracle needs a nonzero f");
  const finite_ring& r = f.ring();
  std::vector<elem> out;
  for (unsigned x = 0; x < r.order(); ++x) {
    bool ok = true;
    for (elem a : f.coeffs())
      if (r.mul(a, elem(x)) != 0) { ok = false; break; }
    if (ok) out.push_back(elem(x));
  }
  return out;
}

std::vector<elem> oracle_left_annihilators(const poly& g) {
  if (g.is_zero()) fail(errc::zero_polynomial, "oracle needs a nonzero g");
  const finite_ring& r = g.ring();
  std::vector<elem> out;
  for (unsigned x = 0; x < r.order(); ++x) {
    bool ok = true;
    for (elem b : g.coeffs())
      if (r.mul(elem(x), b) != 0) { ok = false; break; }
    if (ok) out.push_back(elem(x));
  }
  return out;
}

namespace {

const finite_ring& common_ring(const poly& f, const poly& g) {
  if (&f.ring() != &g.ring())
    fail(errc::ring_mismatch, "f and g live over different rings");
  return f.ring();
}

void require_nonzero_pair(const poly& f, const poly& g) {
  if (f.is_zero() || g.is_zero())
    fail(errc::zero_polynomial, "f and g must both be nonzero");
}

void require_zero_product(const poly& f, const poly& g) {
  if (!poly_mul(f, g).is_zero())
    fail(errc::product_not_zero, "f*g != 0");
}

} // namespace

formula_annihilators lemma1_left_annihilators(const poly& f, const poly& g) {
  const finite_ring& r = common_ring(f, g);
  require_nonzero_pair(f, g);
  if (is_semicommutative(r).kind != verdict_kind::holds)
    fail(errc::not_semicommutative, std::string(r.name()));
  require_zero_product(f, g);
  const unsigned n = unsigned(g.degree());
  const elem l1 = r.pow(f.coeff(0), n + 1);
  const elem l2 = r.pow(f.coeff(std::size_t(f.degree())), n + 1);
  if (!verify_left_annihilation(l1, g) || !verify_left_annihilation(l2, g))
    fail(errc::claim_violated,
         "a0^(n+1) or am^(n+1) does not left-annihilate g over " +
             std::string(r.name()));
  return {l1, l2, l1 == 0, l2 == 0};
}

formula_annihilators thm3_right_annihilators(const poly& f, const poly& g) {
  const finite_ring& r = common_ring(f, g);
  require_nonzero_pair(f, g);
  if (!r.unital()) fail(errc::non_unital_unsupported, std::string(r.name()));
  if (is_left_duo(r).kind != verdict_kind::holds &&
      is_right_duo(r).kind != verdict_kind::holds)
    fail(errc::not_duo, std::string(r.name()) + " is duo on neither side");
  require_zero_product(f, g);
  const unsigned m = unsigned(f.degree());
  const elem r1 = r.pow(g.coeff(0), m + 1);
  const elem r2 = r.pow(g.coeff(std::size_t(g.degree())), m + 1);
  if (!verify_annihilation(f, r1) || !verify_annihilation(f, r2))
    fail(errc::claim_violated,
         "b0^(m+1) or bn^(m+1) does not right-annihilate f over " +
             std::string(r.name()));
  return {r1, r2, r1 == 0, r2 == 0};
}

// ---- search procedures -------------------------------------------------

namespace {

struct trace_builder {
  annihilator_trace tr;
  const poly* F = nullptr;
  const poly* G = nullptr;

  void record(step_kind k, std::optional<elem> w = std::nullopt,
              std::optional<unsigned> e = std::nullopt) {
    trace_step s;
    s.kind = k;
    s.f_after = cvec(*F);
    s.g_after = cvec(*G);
    s.witness = w;
    s.exponent = e;
    tr.steps.push_back(std::move(s));
  }
};

// First nonzero member of I annihilating F on the right; 0 if none. The
// induction hypothesis of the lemma promises exactly such an element, so
// scanning the ideal is "using the inductive hypothesis" made executable.
elem ideal_annihilator(const finite_ring& r, const poly& F, const poly& G) {
  const left_ideal ig = left_ideal_generated_by(r, G.coeffs());
  for (elem x : ig.members())
    if (x != 0 && verify_annihilation(F, x)) return x;
  return 0;
}

// Base search once both degrees are <= 1: any nonzero right annihilator,
// preferring members of I_G so the lift arguments stay inside the ideal.
elem linear_base_annihilator(const finite_ring& r, const poly& F,
                             const poly& G) {
  if (elem x = ideal_annihilator(r, F, G); x != 0) return x;
  for (unsigned x = 1; x < r.order(); ++x)
    if (verify_annihilation(F, elem(x))) return elem(x);
  return 0;
}

} // namespace

procedure_result lemma2_right_annihilator(const poly& f, const poly& g) {
  const finite_ring& R = common_ring(f, g);
  require_nonzero_pair(f, g);
  if (!R.unital())
    fail(errc::non_unital_unsupported, "I_g needs a unital ring");
  if (is_right_duo(R).kind != verdict_kind::holds)
    fail(errc::not_right_duo, std::string(R.name()));
  require_zero_product(f, g);

  procedure_result out;
  poly F = f, G = g;
  trace_builder tb;
  tb.tr.method = ann_method::lemma2;
  tb.tr.ring_name = std::string(R.name());
  tb.tr.f_in = cvec(f);
  tb.tr.g_in = cvec(g);
  tb.F = &F;
  tb.G = &G;

  long budget = long(R.order()) * long(f.degree() + g.degree() + 2);
  std::vector<poly> f_levels; // F before each Case-1 strip, for the unwind
  std::vector<elem> b0_levels;

  elem r = 0;
  for (;;) {
    if (--budget < 0)
      fail(errc::nontermination_guard,
           "lemma2 exceeded its step cap over " + std::string(R.name()));
    if (F.degree() == 0) {
      // base of the induction: minimal j with b_j nonzero
      for (std::size_t j = 0; j < G.size(); ++j)
        if (G.coeff(j) != 0) { r = G.coeff(j); break; }
      if (!verify_annihilation(F, r))
        fail(errc::claim_violated, "base coefficient fails to annihilate f");
      break;
    }
    const elem a0 = F.coeff(0);
    if (scale_left(a0, G).is_zero()) {
      // Case 1: strip the constant, fix the annihilator up afterwards
      f_levels.push_back(F);
      b0_levels.push_back(G.coeff(0));
      F = strip_constant(F);
      tb.record(step_kind::strip_f);
      if (!poly_mul(F, G).is_zero())
        fail(errc::claim_violated, "product not preserved by strip_f");
      continue;
    }
    // Case 2: a0*g != 0; find the exponent k and the duo witness
    std::size_t j = 0;
    while (R.mul(a0, G.coeff(j)) == 0) ++j;
    const elem bj = G.coeff(j);
    unsigned kexp = 0;
    elem pw = a0; // a0^e as e climbs
    for (unsigned e = 1; e <= R.order(); ++e) {
      if (R.mul(pw, bj) != 0 && R.mul(R.mul(a0, pw), bj) == 0) {
        kexp = e;
        break;
      }
      pw = R.mul(a0, pw);
    }
    if (kexp == 0)
      fail(errc::witness_not_found,
           "no k with a0^k*bj != 0 = a0^(k+1)*bj within |R| powers");
    const elem lhs = R.mul(R.pow(a0, kexp), bj);
    elem wit = 0;
    bool wfound = false;
    for (unsigned s = 0; s < R.order(); ++s)
      if (R.mul(bj, elem(s)) == lhs) { wit = elem(s); wfound = true; break; }
    if (!wfound)
      fail(errc::witness_not_found,
           "no r with a0^k*bj = bj*r; right-duo certification is suspect");
    tb.record(step_kind::duo_witness, wit, kexp);
    G = scale_right(G, wit);
    tb.record(step_kind::right_scale_g);
    if (G.is_zero())
      fail(errc::claim_violated, "g*r vanished though bj*r != 0 at index j");
    if (!poly_mul(F, G).is_zero())
      fail(errc::claim_violated, "product not preserved by g := g*r");
  }

  // Unwind the Case-1 strips, deepest first. The argument takes r*b0; when
  // that product is zero the un-multiplied r still works (a0 kills all of
  // I_g in Case 1), and both options are re-checked rather than trusted.
  for (std::size_t lvl = f_levels.size(); lvl-- > 0;) {
    const poly& Flvl = f_levels[lvl];
    const elem cand = R.mul(r, b0_levels[lvl]);
    if (cand != 0 && verify_annihilation(Flvl, cand))
      r = cand;
    else if (!verify_annihilation(Flvl, r))
      fail(errc::claim_violated, "case-1 unwind lost the annihilator");
  }

  if (r == 0 || !verify_annihilation(f, r))
    fail(errc::claim_violated, "procedure finished without a valid result");
  if (!left_ideal_generated_by(R, g.coeffs()).contains(r))
    fail(errc::claim_violated, "result escaped I_g");
  out.annihilator = r;
  tb.tr.result = r;
  out.trace = std::move(tb.tr);
  return out;
}

namespace {

// Lift bookkeeping for theorem-1 runs: what the pair looked like before
// each reduction, so the unwind can re-check every level.
enum class lift_kind { stripped_f, stripped_g, stripped_both, scaled };

struct lift_frame {
  lift_kind kind;
  poly F, G; // state before the reduction
  elem b0;   // g constant before the reduction
};

struct thm1_runner {
  const finite_ring& R;
  const poly& f_in;
  const poly& g_in;
  poly F, G;
  trace_builder tb;
  std::vector<lift_frame> frames;
  long budget;
  elem r = 0;
  std::string stall;

  thm1_runner(const finite_ring& ring, const poly& f, const poly& g,
              ann_method method)
      : R(ring), f_in(f), g_in(g), F(f), G(g) {
    tb.tr.method = method;
    tb.tr.ring_name = std::string(R.name());
    tb.tr.f_in = cvec(f);
    tb.tr.g_in = cvec(g);
    tb.F = &F;
    tb.G = &G;
    budget = long(R.order()) * long(f.degree() + g.degree() + 2);
  }

  // Terminal situations shared by both variants. Returns true when the
  // run should stop (r set, or stall set).
  bool terminal() {
    if (F.degree() == 0) {
      for (std::size_t j = 0; j < G.size(); ++j)
        if (G.coeff(j) != 0) { r = G.coeff(j); break; }
      if (!verify_annihilation(F, r)) stall = "base-coefficient-failed";
      return true;
    }
    if (G.degree() == 0) {
      r = G.coeff(0); // f*b0 is the whole product, already zero
      if (!verify_annihilation(F, r)) stall = "constant-g-failed";
      return true;
    }
    if (F.degree() <= 1 && G.degree() <= 1) {
      r = linear_base_annihilator(R, F, G);
      if (r == 0) stall = "linear-base-empty";
      return true;
    }
    return false;
  }

  bool spend() {
    if (--budget < 0) { stall = "step-budget-exhausted"; return false; }
    return true;
  }

  void strip_f_level() {
    frames.push_back({lift_kind::stripped_f, F, G, G.coeff(0)});
    F = strip_constant(F);
    tb.record(step_kind::strip_f);
    if (!poly_mul(F, G).is_zero()) stall = "strip-f-product-nonzero";
  }

  void strip_g_level() {
    frames.push_back({lift_kind::stripped_g, F, G, G.coeff(0)});
    G = strip_constant(G);
    tb.record(step_kind::strip_g);
    if (!poly_mul(F, G).is_zero()) stall = "strip-g-product-nonzero";
  }

  // Walk the frames from the deepest reduction back to the inputs,
  // re-validating (and where needed repairing) the annihilator at each
  // level. Candidate order: the element itself, the b0-multiplied repair
  // for strips, then a fresh scan of I_G at that level (the executable
  // form of "by the inductive hypothesis").
  void unwind() {
    for (std::size_t lvl = frames.size(); lvl-- > 0 && stall.empty();) {
      const lift_frame& fr = frames[lvl];
      if (verify_annihilation(fr.F, r)) continue;
      if (fr.kind == lift_kind::stripped_f ||
          fr.kind == lift_kind::stripped_both) {
        const elem cand = R.mul(r, fr.b0);
        if (cand != 0 && verify_annihilation(fr.F, cand)) {
          r = cand;
          continue;
        }
      }
      if (elem x = ideal_annihilator(R, fr.F, fr.G); x != 0) {
        r = x;
        continue;
      }
      stall = "lift-failed";
    }
    if (stall.empty() && (r == 0 || !verify_annihilation(f_in, r)))
      stall = "final-verification-failed";
  }

  procedure_result finish() {
    procedure_result out;
    if (!stall.empty()) {
      tb.tr.failure = "procedure-stalled: " + stall;
      tb.tr.fallback_used = true;
      for (elem x : oracle_right_annihilators(f_in))
        if (x != 0) { out.annihilator = x; break; }
    } else {
      out.annihilator = r;
      tb.tr.result = r;
    }
    out.trace = std::move(tb.tr);
    return out;
  }
};

procedure_result thm1_alternative_run(const finite_ring& R, const poly& f,
                                      const poly& g) {
  thm1_runner run(R, f, g, ann_method::thm1_alternative);
  while (run.stall.empty() && !run.terminal()) {
    if (!run.spend()) break;
    const elem a0 = run.F.coeff(0);
    const elem b0 = run.G.coeff(0);
    if (run.R.mul(a0, b0) != 0) { run.stall = "a0*b0-nonzero"; break; }
    const bool a_kills_g = scale_left(a0, run.G).is_zero();
    const bool b_kills_f = scale_right(run.F, b0).is_zero();
    if (a_kills_g && b_kills_f) {
      run.frames.push_back({lift_kind::stripped_both, run.F, run.G, b0});
      run.F = strip_constant(run.F);
      run.tb.record(step_kind::strip_f);
      run.G = strip_constant(run.G);
      run.tb.record(step_kind::strip_g);
      if (!poly_mul(run.F, run.G).is_zero())
        run.stall = "double-strip-product-nonzero";
      continue;
    }
    if (a_kills_g) { run.strip_f_level(); continue; }
    if (b_kills_f) { run.strip_g_level(); continue; }
    // neither constant kills across: scale both sides
    const poly fstar = scale_left(a0, run.F);
    const poly gstar = scale_right(run.G, b0);
    if (gstar.is_zero()) {
      // argument: all nonzero coefficients of g equal b0, so b0 already
      // right-annihilates f; checked, not assumed
      run.tb.record(step_kind::degenerate_g);
      if (b0 != 0 && verify_annihilation(run.F, b0)) {
        run.r = b0;
        break;
      }
      // claim refuted at runtime; scaling f alone is still sound
      // (f*b0... a0*t*b0 = 0 by semicommutativity forces f*:=a0*f to be
      // killed by b0, so the next round strips g) and the recorded
      // degenerate_g step keeps the divergence visible
      if (fstar.is_zero()) {
        run.stall = "degenerate-g-claim-failed";
        break;
      }
      run.frames.push_back({lift_kind::scaled, run.F, run.G, b0});
      run.F = fstar;
      run.tb.record(step_kind::left_scale_f);
      if (!poly_mul(run.F, run.G).is_zero())
        run.stall = "scale-f-product-nonzero";
      continue;
    }
    if (fstar.is_zero()) {
      // argument: all nonzero coefficients of f equal a0, forcing
      // a0*g = 0 and a return to the strip path; checked, not assumed
      run.tb.record(step_kind::degenerate_f);
      if (scale_left(a0, run.G).is_zero()) continue;
      // claim refuted; scaling g alone is sound (a0 kills g*b0 by
      // semicommutativity, so the next round strips f)
      run.frames.push_back({lift_kind::stripped_g, run.F, run.G, b0});
      run.G = gstar;
      run.tb.record(step_kind::right_scale_g);
      if (!poly_mul(run.F, run.G).is_zero())
        run.stall = "scale-g-product-nonzero";
      continue;
    }
    run.frames.push_back({lift_kind::scaled, run.F, run.G, b0});
    run.F = fstar;
    run.tb.record(step_kind::left_scale_f);
    run.G = gstar;
    run.tb.record(step_kind::right_scale_g);
    if (!poly_mul(run.F, run.G).is_zero())
      run.stall = "scale-product-nonzero";
    // by semicommutativity the next round has a0*g = 0 and f*b0 = 0 and
    // strips; the budget backstops that expectation
  }
  if (run.stall.empty()) run.unwind();
  return run.finish();
}

procedure_result thm1_induction_run(const finite_ring& R, const poly& f,
                                    const poly& g) {
  thm1_runner run(R, f, g, ann_method::thm1_induction);
  while (run.stall.empty() && !run.terminal()) {
    if (!run.spend()) break;
    const elem a0 = run.F.coeff(0);
    const elem b0 = run.G.coeff(0);
    if (run.R.mul(a0, b0) != 0) { run.stall = "a0*b0-nonzero"; break; }
    if (scale_left(a0, run.G).is_zero()) {
      run.strip_f_level();
      continue;
    }
    // f-degree move: g := g*b0, after which a0*g = 0 and the next round
    // strips f
    const poly gstar = scale_right(run.G, b0);
    if (!gstar.is_zero()) {
      run.frames.push_back({lift_kind::stripped_g, run.F, run.G, b0});
      // F unchanged, so this level lifts for free like a strip_g
      run.G = gstar;
      run.tb.record(step_kind::right_scale_g);
      if (!poly_mul(run.F, run.G).is_zero()) {
        run.stall = "scale-g-product-nonzero";
        break;
      }
      if (!scale_left(a0, run.G).is_zero()) {
        run.stall = "scale-g-claim-failed"; // a0*bj*b0 = 0 was promised
        break;
      }
      continue;
    }
    // g*b0 = 0: switch to the g-degree move
    if (scale_right(run.F, b0).is_zero()) {
      run.strip_g_level();
      continue;
    }
    const poly fstar = scale_left(a0, run.F);
    if (fstar.is_zero()) {
      run.stall = "both-scalings-degenerate";
      break;
    }
    run.frames.push_back({lift_kind::scaled, run.F, run.G, b0});
    run.F = fstar;
    run.tb.record(step_kind::left_scale_f);
    if (!poly_mul(run.F, run.G).is_zero()) {
      run.stall = "scale-f-product-nonzero";
      break;
    }
    if (!scale_right(run.F, b0).is_zero()) {
      run.stall = "scale-f-claim-failed"; // a0*ai*b0 = 0 was promised
      break;
    }
  }
  if (run.stall.empty()) run.unwind();
  return run.finish();
}

} // namespace

procedure_result thm1_right_annihilator(const poly& f, const poly& g,
                                        thm1_variant variant) {
  const finite_ring& R = common_ring(f, g);
  require_nonzero_pair(f, g);
  if (!R.unital())
    fail(errc::non_unital_unsupported, "I_g needs a unital ring");
  if (is_left_duo(R).kind != verdict_kind::holds)
    fail(errc::not_left_duo, std::string(R.name()));
  require_zero_product(f, g);
  return variant == thm1_variant::alternative ? thm1_alternative_run(R, f, g)
                                              : thm1_induction_run(R, f, g);
}

} // namespace ringlab
