#pragma once

// Handmade fixture rings the builtin corpus does not cover, plus small
// enumeration helpers shared by the test binaries.

#include <cstdint>
#include <vector>

#include "ringlab/polynomial.hpp"
#include "ringlab/ring.hpp"

namespace ringlab::testing {

// F2[u,v]/(u^2, v^2): commutative local ring of order 16 on basis
// 1, u, v, uv; element index c0 + 2*c1 + 4*c2 + 8*c3 encodes
// c0 + c1*u + c2*v + c3*uv. Notable: (v + u x)^2 = 0 in the polynomial
// ring although vu != 0, so the ring is commutative yet not Armendariz,
// and the constant-scaling procedures hit their non-strip case here.
inline finite_ring make_f2uv() {
  const unsigned k = 16;
  raw_ring_tables t;
  t.order = k;
  t.add.resize(k * k);
  t.mul.resize(k * k);
  auto bit = [](unsigned x, unsigned i) -> unsigned { return (x >> i) & 1u; };
  for (unsigned a = 0; a < k; ++a)
    for (unsigned b = 0; b < k; ++b) {
      t.add[a * k + b] = elem(a ^ b);
      unsigned c0 = bit(a, 0) & bit(b, 0);
      unsigned c1 = (bit(a, 0) & bit(b, 1)) ^ (bit(a, 1) & bit(b, 0));
      unsigned c2 = (bit(a, 0) & bit(b, 2)) ^ (bit(a, 2) & bit(b, 0));
      unsigned c3 = (bit(a, 0) & bit(b, 3)) ^ (bit(a, 3) & bit(b, 0)) ^
                    (bit(a, 1) & bit(b, 2)) ^ (bit(a, 2) & bit(b, 1));
      t.mul[a * k + b] = elem(c0 | (c1 << 1) | (c2 << 2) | (c3 << 3));
    }
  return validate_ring(t, true, "F2uv");
}

// GF(4) multiplication on indices {0, 1, w, w+1} with w^2 = w + 1.
inline unsigned gf4_mul(unsigned a, unsigned b) {
  static const unsigned tab[4][4] = {
      {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  return tab[a][b];
}

// F4[u; a -> a^2]/(u^2): order 16, elements a + b*u with index a + 4*b and
// the twist u*c = c^2*u. Noncommutative (u*w = w^2*u != w*u) but every
// one-sided ideal is two-sided: the only proper nonzero one is F4*u.
inline finite_ring make_f4skew() {
  const unsigned k = 16;
  raw_ring_tables t;
  t.order = k;
  t.add.resize(k * k);
  t.mul.resize(k * k);
  auto sq = [](unsigned a) { return gf4_mul(a, a); };
  for (unsigned x = 0; x < k; ++x)
    for (unsigned y = 0; y < k; ++y) {
      unsigned a = x & 3, b = x >> 2, c = y & 3, d = y >> 2;
      t.add[x * k + y] = elem((a ^ c) + 4 * (b ^ d));
      // (a + b u)(c + d u) = ac + (ad + b c^2) u
      unsigned p0 = gf4_mul(a, c);
      unsigned p1 = gf4_mul(a, d) ^ gf4_mul(b, sq(c));
      t.mul[x * k + y] = elem(p0 + 4 * p1);
    }
  return validate_ring(t, true, "F4skew");
}

// The zero multiplication on the Klein four-group: a rng with no unity,
// for exercising the non-unital rejection paths.
inline finite_ring make_zero_mul_rng4() {
  const unsigned k = 4;
  raw_ring_tables t;
  t.order = k;
  t.add.resize(k * k);
  t.mul.assign(k * k, 0);
  for (unsigned a = 0; a < k; ++a)
    for (unsigned b = 0; b < k; ++b) t.add[a * k + b] = elem(a ^ b);
  return validate_ring(t, false, "zng4");
}

// Every nonzero polynomial over r with degree < len as a coefficient
// tuple, low coefficient fastest; trailing zeros trimmed by the poly ctor.
template <typename Fn>
void for_each_nonzero_poly(const finite_ring& r, unsigned len, Fn&& fn) {
  const unsigned k = r.order();
  unsigned long total = 1;
  for (unsigned i = 0; i < len; ++i) total *= k;
  std::vector<elem> c(len);
  for (unsigned long t = 1; t < total; ++t) {
    unsigned long v = t;
    for (unsigned i = 0; i < len; ++i) {
      c[i] = elem(v % k);
      v /= k;
    }
    std::vector<elem> trimmed = c;
    while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
    fn(poly(r, trimmed));
  }
}

// All ordered pairs of nonzero polynomials with f*g = 0, degrees < len.
template <typename Fn>
void for_each_zero_pair(const finite_ring& r, unsigned len, Fn&& fn) {
  std::vector<poly> polys;
  for_each_nonzero_poly(r, len, [&](const poly& p) { polys.push_back(p); });
  for (const poly& f : polys)
    for (const poly& g : polys)
      if (poly_mul(f, g).is_zero()) fn(f, g);
}

} // namespace ringlab::testing
