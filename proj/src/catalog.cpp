#include "ringlab/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ringlab {

finite_ring make_zn(unsigned n) {
  if (n < 1 || n > max_order)
    fail(errc::order_too_large, "Z" + std::to_string(n));
  raw_ring_tables t;
  t.order = n;
  t.add.resize(std::size_t(n) * n);
  t.mul.resize(std::size_t(n) * n);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) {
      t.add[a * n + b] = elem((a + b) % n);
      t.mul[a * n + b] = elem((a * b) % n);
    }
  return validate_ring(t, n > 1, "Z" + std::to_string(n));
}

finite_ring direct_product(const finite_ring& a, const finite_ring& b) {
  if (a.unital() != b.unital())
    fail(errc::mixed_unitality,
         std::string(a.name()) + " x " + std::string(b.name()));
  const unsigned ka = a.order(), kb = b.order();
  const unsigned k = ka * kb;
  if (k > max_order)
    fail(errc::order_too_large, "product order " + std::to_string(k));
  raw_ring_tables t;
  t.order = k;
  t.add.resize(std::size_t(k) * k);
  t.mul.resize(std::size_t(k) * k);
  for (unsigned xa = 0; xa < ka; ++xa)
    for (unsigned xb = 0; xb < kb; ++xb)
      for (unsigned ya = 0; ya < ka; ++ya)
        for (unsigned yb = 0; yb < kb; ++yb) {
          const unsigned x = xa * kb + xb, y = ya * kb + yb;
          t.add[x * k + y] =
              elem(a.add(elem(xa), elem(ya)) * kb + b.add(elem(xb), elem(yb)));
          t.mul[x * k + y] =
              elem(a.mul(elem(xa), elem(ya)) * kb + b.mul(elem(xb), elem(yb)));
        }
  return validate_ring(t, a.unital(),
                       std::string(a.name()) + "x" + std::string(b.name()));
}

namespace {

// Matrix entries packed most-significant-first so the zero matrix is 0.
struct mat_codec {
  unsigned q, n; // base order, number of stored entries
  std::vector<elem> decode(unsigned idx) const {
    std::vector<elem> e(n);
    for (unsigned i = n; i-- > 0;) {
      e[i] = elem(idx % q);
      idx /= q;
    }
    return e;
  }
  unsigned encode(const std::vector<elem>& e) const {
    unsigned idx = 0;
    for (unsigned i = 0; i < n; ++i) idx = idx * q + e[i];
    return idx;
  }
};

} // namespace

finite_ring make_matrix_ring(const finite_ring& base, matrix_shape shape) {
  if (!base.unital())
    fail(errc::non_unital_unsupported, "matrix ring needs a unital base");
  for (unsigned a = 0; a < base.order(); ++a)
    for (unsigned b = 0; b < base.order(); ++b)
      if (base.mul(elem(a), elem(b)) != base.mul(elem(b), elem(a)))
        throw std::invalid_argument("matrix ring needs a commutative base");

  const unsigned q = base.order();
  const bool full = shape == matrix_shape::full2x2;
  const mat_codec codec{q, full ? 4u : 3u};
  unsigned k = 1;
  for (unsigned i = 0; i < codec.n; ++i) k *= q;
  if (k > max_order)
    fail(errc::order_too_large, "matrix ring order " + std::to_string(k));

  auto madd = [&](const std::vector<elem>& x, const std::vector<elem>& y) {
    std::vector<elem> z(codec.n);
    for (unsigned i = 0; i < codec.n; ++i) z[i] = base.add(x[i], y[i]);
    return z;
  };
  // Stored entries: full (a11,a12,a21,a22); upper triangular (a11,a12,a22).
  auto mmul = [&](const std::vector<elem>& x, const std::vector<elem>& y) {
    std::vector<elem> z(codec.n);
    auto dot = [&](elem p, elem r, elem s, elem t) {
      return base.add(base.mul(p, r), base.mul(s, t));
    };
    if (full) {
      z[0] = dot(x[0], y[0], x[1], y[2]);
      z[1] = dot(x[0], y[1], x[1], y[3]);
      z[2] = dot(x[2], y[0], x[3], y[2]);
      z[3] = dot(x[2], y[1], x[3], y[3]);
    } else {
      z[0] = base.mul(x[0], y[0]);
      z[1] = dot(x[0], y[1], x[1], y[2]);
      z[2] = base.mul(x[2], y[2]);
    }
    return z;
  };

  raw_ring_tables t;
  t.order = k;
  t.add.resize(std::size_t(k) * k);
  t.mul.resize(std::size_t(k) * k);
  for (unsigned x = 0; x < k; ++x) {
    const auto xe = codec.decode(x);
    for (unsigned y = 0; y < k; ++y) {
      const auto ye = codec.decode(y);
      t.add[x * k + y] = elem(codec.encode(madd(xe, ye)));
      t.mul[x * k + y] = elem(codec.encode(mmul(xe, ye)));
    }
  }
  const std::string name =
      (full ? "M2" : "U2") + std::string(base.name());
  return validate_ring(t, true, name);
}

namespace {

// All permutations of [0,k) fixing 0, as full index vectors.
std::vector<std::vector<elem>> zero_fixing_perms(unsigned k) {
  std::vector<elem> rest(k - 1);
  std::iota(rest.begin(), rest.end(), elem(1));
  std::vector<std::vector<elem>> out;
  do {
    std::vector<elem> p(k);
    for (unsigned i = 1; i < k; ++i) p[i] = rest[i - 1];
    out.push_back(std::move(p));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

bool perm_is_isomorphism(const finite_ring& a, const finite_ring& b,
                         const std::vector<elem>& p) {
  const unsigned k = a.order();
  for (unsigned x = 0; x < k; ++x)
    for (unsigned y = 0; y < k; ++y) {
      if (p[a.add(elem(x), elem(y))] != b.add(p[x], p[y])) return false;
      if (p[a.mul(elem(x), elem(y))] != b.mul(p[x], p[y])) return false;
    }
  return true;
}

} // namespace

bool isomorphic(const finite_ring& a, const finite_ring& b) {
  if (a.order() != b.order()) return false;
  const unsigned k = a.order();
  if (k > 8)
    fail(errc::order_too_large, "isomorphism search capped at order 8");
  if (k == 1) return true;
  if (a.unital() != b.unital()) return false;
  for (const auto& p : zero_fixing_perms(k)) {
    // Identity must map to identity; cheap pre-filter.
    if (a.unital() && p[*a.one()] != *b.one()) continue;
    if (perm_is_isomorphism(a, b, p)) return true;
  }
  return false;
}

namespace {

// Lexicographically minimal relabeling of (add,mul) over 0-fixing
// permutations; equal keys iff isomorphic. Used to order enumerated classes.
std::string canonical_key(const finite_ring& r) {
  const unsigned k = r.order();
  std::string best;
  for (const auto& p : zero_fixing_perms(k)) {
    std::string s;
    s.reserve(2 * k * k);
    std::vector<elem> inv(k);
    for (unsigned i = 0; i < k; ++i) inv[p[i]] = elem(i);
    for (unsigned x = 0; x < k; ++x)
      for (unsigned y = 0; y < k; ++y)
        s += char(p[r.add(inv[x], inv[y])]);
    for (unsigned x = 0; x < k; ++x)
      for (unsigned y = 0; y < k; ++y)
        s += char(p[r.mul(inv[x], inv[y])]);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

// The abelian groups of order 1..4 as addition tables.
std::vector<std::vector<elem>> addition_tables(unsigned k) {
  std::vector<std::vector<elem>> out;
  std::vector<elem> cyc(std::size_t(k) * k);
  for (unsigned a = 0; a < k; ++a)
    for (unsigned b = 0; b < k; ++b) cyc[a * k + b] = elem((a + b) % k);
  out.push_back(std::move(cyc));
  if (k == 4) {
    std::vector<elem> klein(16);
    for (unsigned a = 0; a < 4; ++a)
      for (unsigned b = 0; b < 4; ++b) klein[a * 4 + b] = elem(a ^ b);
    out.push_back(std::move(klein));
  }
  return out;
}

// Scalar multiple n*x inside an addition table.
elem add_multiple(const std::vector<elem>& add, unsigned k, unsigned n, elem x) {
  elem acc = 0;
  for (unsigned i = 0; i < n; ++i) acc = add[acc * k + x];
  return acc;
}

} // namespace

std::vector<finite_ring> enumerate_unital_rings(unsigned order) {
  if (order < 1 || order > 4)
    fail(errc::order_too_large, "enumeration supports orders 1..4");

  std::vector<finite_ring> reps;
  auto consider = [&](const raw_ring_tables& t) {
    finite_ring r = validate_ring(t, true, "candidate");
    for (const auto& kept : reps)
      if (isomorphic(kept, r)) return;
    reps.push_back(std::move(r));
  };
  auto try_consider = [&](const raw_ring_tables& t) {
    // Bilinear extension guarantees the group and distributivity axioms;
    // associativity and unity are filtered here.
    try {
      consider(t);
    } catch (const ring_error&) {}
  };

  for (const auto& add : addition_tables(order)) {
    const unsigned k = order;
    // element 1 generates the whole group iff its additive order is k
    bool cyclic = true;
    if (k > 1) {
      unsigned ord = 1;
      elem acc = 1;
      while (acc != 0) { acc = add[acc * k + 1]; ++ord; }
      cyclic = ord == k;
    }
    raw_ring_tables t;
    t.order = k;
    t.add = add;
    t.mul.assign(std::size_t(k) * k, 0);
    if (k == 1) {
      try_consider(t);
      continue;
    }
    if (cyclic) {
      // Additive generator 1; the table is determined by c = 1*1 through
      // distributivity: (a*1)(b*1) = (a b) * c.
      for (unsigned c = 0; c < k; ++c) {
        for (unsigned a = 0; a < k; ++a)
          for (unsigned b = 0; b < k; ++b)
            t.mul[a * k + b] = add_multiple(add, k, a * b, elem(c));
        try_consider(t);
      }
    } else {
      // Klein group: generators e = 1, f = 2; choices for e*e, e*f, f*e,
      // f*f determine the table bilinearly (addition is XOR here).
      for (unsigned pe = 0; pe < 4; ++pe)
        for (unsigned qe = 0; qe < 4; ++qe)
          for (unsigned rf = 0; rf < 4; ++rf)
            for (unsigned sf = 0; sf < 4; ++sf) {
              for (unsigned a = 0; a < 4; ++a)
                for (unsigned b = 0; b < 4; ++b) {
                  const unsigned a1 = a & 1, a2 = (a >> 1) & 1;
                  const unsigned b1 = b & 1, b2 = (b >> 1) & 1;
                  unsigned v = 0;
                  if (a1 & b1) v ^= pe;
                  if (a1 & b2) v ^= qe;
                  if (a2 & b1) v ^= rf;
                  if (a2 & b2) v ^= sf;
                  t.mul[a * 4 + b] = elem(v);
                }
              try_consider(t);
            }
    }
  }

  std::sort(reps.begin(), reps.end(),
            [](const finite_ring& x, const finite_ring& y) {
              return canonical_key(x) < canonical_key(y);
            });
  std::vector<finite_ring> named;
  named.reserve(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i)
    named.push_back(reps[i].renamed("order" + std::to_string(order) + ":" +
                                    std::to_string(i + 1)));
  return named;
}

const finite_ring& ring_corpus::add(finite_ring r, provenance p) {
  if (find(r.name()))
    fail(errc::parse_error,
         "duplicate ring name '" + std::string(r.name()) + "' in corpus");
  rings_.push_back(std::move(r));
  prov_.push_back(p);
  return rings_.back();
}

const finite_ring* ring_corpus::find(std::string_view name) const {
  for (const auto& r : rings_)
    if (r.name() == name) return &r;
  return nullptr;
}

const ring_corpus& builtin_corpus() {
  static const ring_corpus corpus = [] {
    ring_corpus c;
    for (unsigned n = 2; n <= 12; ++n)
      c.add(make_zn(n), ring_corpus::provenance::builtin);
    const finite_ring z2 = make_zn(2);
    const finite_ring z4 = make_zn(4);
    c.add(direct_product(z2, z2), ring_corpus::provenance::builtin);
    c.add(direct_product(z2, z4), ring_corpus::provenance::builtin);
    c.add(make_matrix_ring(z2, matrix_shape::upper_triangular2x2).renamed("U2Z2"),
          ring_corpus::provenance::builtin);
    c.add(make_matrix_ring(z2, matrix_shape::full2x2).renamed("M2Z2"),
          ring_corpus::provenance::builtin);
    for (auto& r : enumerate_unital_rings(4))
      c.add(std::move(r), ring_corpus::provenance::enumerated);
    return c;
  }();
  return corpus;
}

const finite_ring* find_builtin(std::string_view name) {
  return builtin_corpus().find(name);
}

} // namespace ringlab
