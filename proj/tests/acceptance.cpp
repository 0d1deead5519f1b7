// End-to-end checks of the headline guarantees, printed one line each.
// Every numbered block rebuilds its evidence from scratch through the
// public API and a direct arithmetic recheck; the final block repeats the
// first six and insists the reports come out byte-identical.

#include <algorithm>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "ringlab/annihilators.hpp"
#include "ringlab/catalog.hpp"
#include "ringlab/diagram.hpp"
#include "ringlab/kernels.hpp"
#include "ringlab/polynomial.hpp"
#include "ringlab/properties.hpp"
#include "ringlab/ring_io.hpp"

using namespace ringlab;
using ringlab::testing::for_each_zero_pair;

namespace {

struct outcome {
  bool pass = true;
  std::string stats;      // short parenthetical for the summary line
  std::string transcript; // full deterministic report for the repeat check
  std::vector<std::string> problems;

  void fail(std::string what) {
    pass = false;
    problems.push_back(std::move(what));
  }
};

std::string poly_desc(const poly& p) { return format_poly(p); }

std::vector<const finite_ring*> rings_where(bool (*pred)(const finite_ring&)) {
  std::vector<const finite_ring*> out;
  const auto& c = builtin_corpus();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (pred(c[i])) out.push_back(&c[i]);
  return out;
}

unsigned pair_degree_cap(const finite_ring& r) {
  return r.order() <= 12 ? 2 : 1;
}

// 1: over every semicommutative builtin ring and every annihilating pair,
// the powers of the constant and leading coefficients of f kill g from the
// left, including the coefficientwise ladder a0^(j+1) * b_j = 0.
outcome check_left_power_annihilation() {
  outcome oc;
  auto rings = rings_where([](const finite_ring& r) {
    return is_semicommutative(r).kind == verdict_kind::holds;
  });
  unsigned long total = 0;
  for (const finite_ring* rp : rings) {
    const finite_ring& r = *rp;
    unsigned long pairs = 0;
    for_each_zero_pair(r, pair_degree_cap(r) + 1, [&](const poly& f,
                                                      const poly& g) {
      ++pairs;
      elem a0 = f.coeff(0), am = f.coeffs().back();
      unsigned n = unsigned(g.degree());
      for (unsigned j = 0; j <= n; ++j)
        if (r.mul(r.pow(a0, j + 1), g.coeff(j)) != 0)
          oc.fail("ladder a0^(j+1)*b_j != 0 on " + std::string(r.name()) +
                  " f=" + poly_desc(f) + " g=" + poly_desc(g) +
                  " j=" + std::to_string(j));
      if (!scale_left(r.pow(a0, n + 1), g).is_zero() ||
          !scale_left(r.pow(am, n + 1), g).is_zero())
        oc.fail("power does not annihilate g on " + std::string(r.name()) +
                " f=" + poly_desc(f) + " g=" + poly_desc(g));
      auto out = lemma1_left_annihilators(f, g);
      if (out.first != r.pow(a0, n + 1) || out.second != r.pow(am, n + 1) ||
          out.first_is_zero != (out.first == 0) ||
          out.second_is_zero != (out.second == 0))
        oc.fail("formula output mismatch on " + std::string(r.name()));
    });
    oc.transcript += "ring " + std::string(r.name()) +
                     " pairs=" + std::to_string(pairs) + "\n";
    total += pairs;
  }
  if (total < 1000) oc.fail("suspiciously few annihilating pairs");
  oc.stats = std::to_string(rings.size()) + " rings, " +
             std::to_string(total) + " pairs";
  return oc;
}

// 2: the right-handed mirror over certified left-duo rings, with the
// ladder a_k * b0^(k+1) = 0.
outcome check_right_power_annihilation() {
  outcome oc;
  auto rings = rings_where([](const finite_ring& r) {
    return is_left_duo(r).kind == verdict_kind::holds;
  });
  unsigned long total = 0;
  for (const finite_ring* rp : rings) {
    const finite_ring& r = *rp;
    unsigned long pairs = 0;
    for_each_zero_pair(r, pair_degree_cap(r) + 1, [&](const poly& f,
                                                      const poly& g) {
      ++pairs;
      elem b0 = g.coeff(0), bn = g.coeffs().back();
      unsigned m = unsigned(f.degree());
      for (unsigned k = 0; k <= m; ++k)
        if (r.mul(f.coeff(k), r.pow(b0, k + 1)) != 0)
          oc.fail("ladder a_k*b0^(k+1) != 0 on " + std::string(r.name()) +
                  " f=" + poly_desc(f) + " g=" + poly_desc(g) +
                  " k=" + std::to_string(k));
      if (!scale_right(f, r.pow(b0, m + 1)).is_zero() ||
          !scale_right(f, r.pow(bn, m + 1)).is_zero())
        oc.fail("power does not annihilate f on " + std::string(r.name()) +
                " f=" + poly_desc(f) + " g=" + poly_desc(g));
      auto out = thm3_right_annihilators(f, g);
      if (out.first != r.pow(b0, m + 1) || out.second != r.pow(bn, m + 1))
        oc.fail("formula output mismatch on " + std::string(r.name()));
    });
    oc.transcript += "ring " + std::string(r.name()) +
                     " pairs=" + std::to_string(pairs) + "\n";
    total += pairs;
  }
  if (total < 1000) oc.fail("suspiciously few annihilating pairs");
  oc.stats = std::to_string(rings.size()) + " rings, " +
             std::to_string(total) + " pairs";
  return oc;
}

// 3: the constructive procedures return a certified nonzero annihilator
// (f*r = 0, r in the left ideal of g's coefficients, r in the brute-force
// oracle set) on every annihilating pair over the small duo rings, with
// zero stalls or guard trips.
outcome check_procedures() {
  outcome oc;
  auto rings = rings_where([](const finite_ring& r) {
    return r.order() <= 8 && is_left_duo(r).kind == verdict_kind::holds &&
           is_right_duo(r).kind == verdict_kind::holds;
  });
  unsigned long total = 0, stalls = 0;
  for (const finite_ring* rp : rings) {
    const finite_ring& r = *rp;
    unsigned long pairs = 0;
    for_each_zero_pair(r, 3, [&](const poly& f, const poly& g) {
      ++pairs;
      auto oracle = oracle_right_annihilators(f);
      auto ideal = left_ideal_generated_by(r, g.coeffs());
      auto audit = [&](const char* label, const procedure_result& res) {
        oc.transcript += std::string(label) + " ring=" +
                         std::string(r.name()) + " f=" + poly_desc(f) +
                         " g=" + poly_desc(g) + "\n" + serialize(res.trace);
        if (res.stalled()) {
          ++stalls;
          oc.fail(std::string(label) + " stalled on " +
                  std::string(r.name()) + " f=" + poly_desc(f) +
                  " g=" + poly_desc(g) + "\n" + serialize(res.trace));
          return;
        }
        if (res.annihilator == 0 ||
            !verify_annihilation(f, res.annihilator) ||
            !ideal.contains(res.annihilator) ||
            std::find(oracle.begin(), oracle.end(), res.annihilator) ==
                oracle.end())
          oc.fail(std::string(label) + " returned an uncertified result on " +
                  std::string(r.name()) + " f=" + poly_desc(f) +
                  " g=" + poly_desc(g));
      };
      try {
        audit("lemma2", lemma2_right_annihilator(f, g));
        audit("thm1-alternative",
              thm1_right_annihilator(f, g, thm1_variant::alternative));
        audit("thm1-induction",
              thm1_right_annihilator(f, g, thm1_variant::induction));
      } catch (const ring_error& e) {
        oc.fail("guard tripped on " + std::string(r.name()) +
                " f=" + poly_desc(f) + " g=" + poly_desc(g) + ": " + e.what());
      }
    });
    oc.transcript += "ring " + std::string(r.name()) +
                     " pairs=" + std::to_string(pairs) + "\n";
    total += pairs;
  }
  if (total < 1000) oc.fail("suspiciously few annihilating pairs");
  oc.stats = std::to_string(rings.size()) + " rings, " +
             std::to_string(total) + " pairs, " + std::to_string(stalls) +
             " stalls";
  return oc;
}

// 4: the frozen implication diagram is consistent over the builtin corpus
// at bound (2,2), with the headline arrows actually exercised.
outcome check_diagram_consistency() {
  outcome oc;
  auto rep = check_diagram(builtin_corpus(), {2, 2});
  oc.transcript = serialize(rep);
  unsigned violated = 0;
  for (const auto& e : rep.edges)
    if (e.status == edge_status::violated) {
      ++violated;
      oc.fail("violated arrow " +
              std::string(property_name(e.edge.from)) + " -> " +
              std::string(property_name(e.edge.to)));
    }
  using P = property_id;
  const diagram_edge must_exercise[] = {{P::commutative, P::duo},
                                        {P::duo, P::left_duo},
                                        {P::left_duo, P::mccoy},
                                        {P::left_duo, P::right_mccoy}};
  for (const auto& want : must_exercise) {
    bool found = false;
    for (const auto& e : rep.edges)
      if (e.edge == want && e.status == edge_status::consistent) found = true;
    if (!found)
      oc.fail("arrow " + std::string(property_name(want.from)) + " -> " +
              std::string(property_name(want.to)) + " was not exercised");
  }
  oc.stats = std::to_string(rep.edges.size()) + " arrows, " +
             std::to_string(violated) + " violations";
  return oc;
}

// 5: enumeration finds exactly 1/1/4 unital rings at orders 2/3/4, all
// distinct under isomorphism and all revalidating from raw tables.
outcome check_enumeration() {
  outcome oc;
  const unsigned want[] = {0, 0, 1, 1, 4};
  for (unsigned order = 2; order <= 4; ++order) {
    auto rings = enumerate_unital_rings(order);
    oc.transcript += "order " + std::to_string(order) + " count " +
                     std::to_string(rings.size()) + "\n";
    if (rings.size() != want[order])
      oc.fail("order " + std::to_string(order) + ": got " +
              std::to_string(rings.size()) + " classes, expected " +
              std::to_string(want[order]));
    for (std::size_t i = 0; i < rings.size(); ++i) {
      raw_ring_tables t;
      t.order = order;
      for (unsigned a = 0; a < order; ++a)
        for (unsigned b = 0; b < order; ++b) {
          t.add.push_back(rings[i].add(elem(a), elem(b)));
          t.mul.push_back(rings[i].mul(elem(a), elem(b)));
        }
      try {
        validate_ring(t, true, std::string(rings[i].name()));
      } catch (const ring_error& e) {
        oc.fail(std::string(rings[i].name()) + " failed revalidation: " +
                e.what());
      }
      for (std::size_t j = i + 1; j < rings.size(); ++j)
        if (isomorphic(rings[i], rings[j]))
          oc.fail("duplicate isomorphism class at order " +
                  std::to_string(order));
    }
  }
  oc.stats = "orders 2/3/4 -> 1/1/4";
  return oc;
}

// 6: randomized agreement between the exhaustive oracle, the mask kernels
// on every available backend, and the constructive procedures.
outcome check_randomized_oracle_agreement() {
  outcome oc;
  auto rings = rings_where([](const finite_ring& r) {
    return r.order() <= 8 && is_left_duo(r).kind == verdict_kind::holds &&
           is_right_duo(r).kind == verdict_kind::holds;
  });
  std::mt19937 rng(20260825);
  std::uniform_int_distribution<std::size_t> pick(0, rings.size() - 1);
  const auto entry_backend = kernels::active_backend();
  unsigned long with_nonzero = 0;
  const unsigned draws = 1000;
  for (unsigned d = 0; d < draws; ++d) {
    const finite_ring& r = *rings[pick(rng)];
    std::uniform_int_distribution<unsigned> len(1, 3),
        coeff(0, r.order() - 1);
    std::vector<elem> c(len(rng));
    for (auto& x : c) x = elem(coeff(rng));
    poly f(r, c);
    if (f.is_zero()) f = poly::constant(r, 1);
    auto oracle = oracle_right_annihilators(f);

    std::uint64_t want_mask = 0;
    for (elem e : oracle) want_mask |= std::uint64_t(1) << e;
    namespace kn = ringlab::kernels;
    for (auto b : {kn::backend::scalar, kn::backend::avx2}) {
      if (!kn::backend_supported(b)) continue;
      kn::set_backend(b);
      if (kn::right_annihilator_mask(r, f.coeffs()) != want_mask)
        oc.fail("kernel mask disagrees with the oracle on " +
                std::string(r.name()) + " f=" + poly_desc(f));
    }

    oc.transcript += "draw " + std::to_string(d) + " ring=" +
                     std::string(r.name()) + " f=" + poly_desc(f);
    if (oracle.size() > 1) {
      ++with_nonzero;
      elem pivot = oracle[1]; // least nonzero annihilator
      poly g = poly::constant(r, pivot);
      auto l2 = lemma2_right_annihilator(f, g);
      auto ta = thm1_right_annihilator(f, g, thm1_variant::alternative);
      auto ti = thm1_right_annihilator(f, g, thm1_variant::induction);
      for (const auto* res : {&l2, &ta, &ti}) {
        if (res->stalled() || res->annihilator == 0 ||
            std::find(oracle.begin(), oracle.end(), res->annihilator) ==
                oracle.end())
          oc.fail("procedure missed the oracle set on " +
                  std::string(r.name()) + " f=" + poly_desc(f));
      }
      oc.transcript += " results=" + std::to_string(l2.annihilator) + "," +
                       std::to_string(ta.annihilator) + "," +
                       std::to_string(ti.annihilator);
    }
    oc.transcript += "\n";
  }
  kernels::set_backend(entry_backend);
  if (with_nonzero < draws / 10)
    oc.fail("too few draws produced zero divisors");
  oc.stats = std::to_string(draws) + " draws, " +
             std::to_string(with_nonzero) + " with nonzero annihilators";
  return oc;
}

} // namespace

int main() {
  struct entry {
    const char* label;
    outcome (*run)();
  };
  const entry entries[] = {
      {"left-annihilating powers on semicommutative rings",
       check_left_power_annihilation},
      {"right-annihilating powers on left-duo rings",
       check_right_power_annihilation},
      {"constructive annihilator procedures certified", check_procedures},
      {"implication diagram consistent over the builtin corpus",
       check_diagram_consistency},
      {"unital ring enumeration counts", check_enumeration},
      {"randomized oracle agreement", check_randomized_oracle_agreement},
  };

  int failures = 0;
  std::vector<std::string> first_transcripts;
  for (std::size_t i = 0; i < std::size(entries); ++i) {
    outcome oc = entries[i].run();
    first_transcripts.push_back(oc.transcript);
    std::printf("criterion %zu %s: %s (%s)\n", i + 1, entries[i].label,
                oc.pass ? "PASS" : "FAIL", oc.stats.c_str());
    if (!oc.pass) {
      ++failures;
      for (const auto& p : oc.problems) std::printf("  %s\n", p.c_str());
    }
  }

  bool repeat_ok = true;
  for (std::size_t i = 0; i < std::size(entries); ++i) {
    outcome oc = entries[i].run();
    if (oc.transcript != first_transcripts[i]) {
      repeat_ok = false;
      std::printf("  repeat of criterion %zu diverged\n", i + 1);
    }
  }
  std::printf("criterion 7 byte-identical repeat runs: %s (%zu reports)\n",
              repeat_ok ? "PASS" : "FAIL", std::size(entries));
  if (!repeat_ok) ++failures;

  return failures;
}
