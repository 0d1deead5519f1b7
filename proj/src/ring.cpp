#include "ringlab/ring.hpp"

#include <algorithm>
#include <deque>

namespace ringlab {

namespace {

std::string describe(unsigned a, unsigned b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::string describe(unsigned a, unsigned b, unsigned c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + ")";
}

// Relabel both tables by permutation p: new[p(a)][p(b)] = p(old[a][b]).
void apply_relabel(unsigned k, std::vector<elem>& table,
                   const std::vector<elem>& p) {
  std::vector<elem> out(table.size());
  for (unsigned a = 0; a < k; ++a)
    for (unsigned b = 0; b < k; ++b)
      out[p[a] * k + p[b]] = p[table[a * k + b]];
  table.swap(out);
}

} // namespace

finite_ring validate_ring(const raw_ring_tables& t, bool require_unital,
                          std::string name) {
  const unsigned k = t.order;
  if (k == 0 || k > max_order)
    fail(errc::order_too_large,
         "ring order " + std::to_string(k) + " outside [1," +
             std::to_string(max_order) + "]");
  if (t.add.size() != std::size_t(k) * k || t.mul.size() != std::size_t(k) * k)
    fail(errc::table_shape, "tables must be " + std::to_string(k) + "x" +
                                std::to_string(k));
  for (elem v : t.add)
    if (v >= k) fail(errc::table_shape, "addition entry out of range");
  for (elem v : t.mul)
    if (v >= k) fail(errc::table_shape, "multiplication entry out of range");

  std::vector<elem> add = t.add, mul = t.mul;

  // Locate the additive identity and renumber it to 0 if needed.
  int zero = -1;
  for (unsigned e = 0; e < k && zero < 0; ++e) {
    bool id = true;
    for (unsigned b = 0; b < k; ++b)
      if (add[e * k + b] != b || add[b * k + e] != b) { id = false; break; }
    if (id) zero = int(e);
  }
  if (zero < 0) fail(errc::not_a_group, "no additive identity");
  if (zero != 0) {
    std::vector<elem> p(k);
    for (unsigned i = 0; i < k; ++i) p[i] = elem(i);
    std::swap(p[0], p[zero]);
    apply_relabel(k, add, p);
    apply_relabel(k, mul, p);
  }

  // Abelian group axioms for addition.
  for (unsigned a = 0; a < k; ++a)
    for (unsigned b = 0; b < k; ++b)
      if (add[a * k + b] != add[b * k + a])
        fail(errc::not_a_group, "addition not commutative at " + describe(a, b));
  for (unsigned a = 0; a < k; ++a)
    for (unsigned b = 0; b < k; ++b)
      for (unsigned c = 0; c < k; ++c)
        if (add[add[a * k + b] * k + c] != add[a * k + add[b * k + c]])
          fail(errc::not_a_group,
               "addition not associative at " + describe(a, b, c));
  std::vector<elem> neg(k);
  for (unsigned a = 0; a < k; ++a) {
    int inv = -1;
    for (unsigned b = 0; b < k; ++b)
      if (add[a * k + b] == 0) { inv = int(b); break; }
    if (inv < 0)
      fail(errc::not_a_group, "no additive inverse for " + std::to_string(a));
    neg[a] = elem(inv);
  }

  // Multiplicative associativity.
  for (unsigned a = 0; a < k; ++a)
    for (unsigned b = 0; b < k; ++b) {
      const elem ab = mul[a * k + b];
      for (unsigned c = 0; c < k; ++c)
        if (mul[ab * k + c] != mul[a * k + mul[b * k + c]])
          fail(errc::not_associative, "at " + describe(a, b, c));
    }

  // Two-sided distributivity.
  for (unsigned a = 0; a < k; ++a)
    for (unsigned b = 0; b < k; ++b) {
      for (unsigned c = 0; c < k; ++c) {
        const elem bc = add[b * k + c];
        if (mul[a * k + bc] != add[mul[a * k + b] * k + mul[a * k + c]])
          fail(errc::not_distributive, "left at " + describe(a, b, c));
        if (mul[bc * k + a] != add[mul[b * k + a] * k + mul[c * k + a]])
          fail(errc::not_distributive, "right at " + describe(a, b, c));
      }
    }

  // Zero annihilates; implied by distributivity but asserted directly.
  for (unsigned a = 0; a < k; ++a)
    if (mul[a * k] != 0 || mul[a] != 0)
      fail(errc::not_distributive, "zero does not annihilate " + std::to_string(a));

  // Discover a two-sided identity, if any.
  std::optional<elem> one;
  for (unsigned e = 0; e < k && !one; ++e) {
    bool id = true;
    for (unsigned b = 0; b < k; ++b)
      if (mul[e * k + b] != b || mul[b * k + e] != b) { id = false; break; }
    if (id) one = elem(e);
  }
  if (require_unital && !one)
    fail(errc::no_unity, "ring '" + name + "' has no two-sided identity");

  finite_ring r;
  r.k_ = k;
  r.add_ = std::move(add);
  r.mul_ = std::move(mul);
  r.neg_ = std::move(neg);
  r.one_ = one;
  r.name_ = std::move(name);
  r.build_derived_tables();
  return r;
}

void finite_ring::build_derived_tables() {
  mul_t_.assign(std::size_t(k_) * k_, 0);
  for (unsigned a = 0; a < k_; ++a)
    for (unsigned b = 0; b < k_; ++b) mul_t_[b * k_ + a] = mul_[a * k_ + b];
  if (k_ <= 16) {
    add16_.assign(std::size_t(k_) * 16, 0);
    mul16_.assign(std::size_t(k_) * 16, 0);
    mul16t_.assign(std::size_t(k_) * 16, 0);
    for (unsigned a = 0; a < k_; ++a)
      for (unsigned b = 0; b < k_; ++b) {
        add16_[a * 16 + b] = add_[a * k_ + b];
        mul16_[a * 16 + b] = mul_[a * k_ + b];
        mul16t_[b * 16 + a] = mul_[a * k_ + b];
      }
  }
}

elem finite_ring::pow(elem a, unsigned e) const {
  elem acc = a;
  for (unsigned i = 1; i < e; ++i) acc = mul(acc, a);
  return acc;
}

finite_ring finite_ring::renamed(std::string new_name) const {
  finite_ring r = *this;
  r.name_ = std::move(new_name);
  return r;
}

left_ideal left_ideal_generated_by(const finite_ring& r,
                                   std::span<const elem> gens) {
  if (!r.unital())
    fail(errc::non_unital_unsupported,
         "left ideal closure needs a unital ring");
  const unsigned k = r.order();
  left_ideal i;
  i.generators_.assign(gens.begin(), gens.end());
  i.in_.assign(k, false);
  i.in_[0] = true;
  std::deque<elem> work;
  auto insert = [&](elem x) {
    if (!i.in_[x]) { i.in_[x] = true; work.push_back(x); }
  };
  for (elem g : gens) {
    if (g >= k) fail(errc::table_shape, "generator out of range");
    insert(g);
  }
  // Worklist closure under negation, sums with known members, and left
  // multiplication by arbitrary ring elements. Every inserted element is
  // popped once and paired against all members present at pop time, so the
  // later-popped element of any pair sees the earlier one: closure complete.
  while (!work.empty()) {
    const elem x = work.front();
    work.pop_front();
    insert(r.neg(x));
    for (unsigned s = 0; s < k; ++s) insert(r.mul(elem(s), x));
    for (unsigned s = 0; s < k; ++s)
      if (i.in_[s]) insert(r.add(elem(s), x));
  }
  for (unsigned x = 0; x < k; ++x)
    if (i.in_[x]) i.members_.push_back(elem(x));
  return i;
}

bool is_two_sided(const finite_ring& r, const left_ideal& i) {
  for (elem x : i.members())
    for (unsigned s = 0; s < r.order(); ++s)
      if (!i.contains(r.mul(x, elem(s)))) return false;
  return true;
}

} // namespace ringlab
