#include "ringlab/polynomial.hpp"

#include <algorithm>
#include <charconv>

namespace ringlab {

namespace {

void normalize(std::vector<elem>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

void check_same_ring(const poly& f, const poly& g) {
  if (&f.ring() != &g.ring())
    fail(errc::ring_mismatch, "polynomial operands from different rings");
}

} // namespace

poly::poly(const finite_ring& r, std::vector<elem> coeffs) : ring_(&r) {
  for (elem c : coeffs)
    if (c >= r.order()) fail(errc::table_shape, "coefficient out of range");
  normalize(coeffs);
  coeffs_ = std::move(coeffs);
}

poly poly::constant(const finite_ring& r, elem c) {
  return poly(r, std::vector<elem>{c});
}

poly poly_add(const poly& f, const poly& g) {
  check_same_ring(f, g);
  const finite_ring& r = f.ring();
  std::vector<elem> out(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = r.add(f.coeff(i), g.coeff(i));
  return poly(r, std::move(out));
}

poly poly_mul(const poly& f, const poly& g) {
  check_same_ring(f, g);
  const finite_ring& r = f.ring();
  if (f.is_zero() || g.is_zero()) return poly::zero(r);
  std::vector<elem> out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const elem a = f.coeffs()[i];
    if (a == 0) continue;
    const elem* row = r.mul_row(a);
    for (std::size_t j = 0; j < g.size(); ++j)
      out[i + j] = r.add(out[i + j], row[g.coeffs()[j]]);
  }
  return poly(r, std::move(out));
}

poly reverse(coefficient_window w) {
  if (w.width < w.p.size())
    fail(errc::table_shape, "window narrower than the polynomial");
  std::vector<elem> out(w.width, 0);
  for (std::size_t i = 0; i < w.width; ++i) out[i] = w.p.coeff(w.width - 1 - i);
  return poly(w.p.ring(), std::move(out));
}

poly scale_left(elem a, const poly& f) {
  const finite_ring& r = f.ring();
  std::vector<elem> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = r.mul(a, f.coeffs()[i]);
  return poly(r, std::move(out));
}

poly scale_right(const poly& f, elem a) {
  const finite_ring& r = f.ring();
  std::vector<elem> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = r.mul(f.coeffs()[i], a);
  return poly(r, std::move(out));
}

poly strip_constant(const poly& f) {
  if (f.is_zero()) fail(errc::zero_polynomial, "cannot strip the zero polynomial");
  std::vector<elem> out(f.coeffs().begin() + 1, f.coeffs().end());
  return poly(f.ring(), std::move(out));
}

poly parse_poly(const finite_ring& r, std::string_view literal) {
  std::vector<elem> coeffs;
  std::size_t pos = 0;
  if (literal.empty()) fail(errc::parse_error, "empty polynomial literal");
  while (pos <= literal.size()) {
    std::size_t comma = literal.find(',', pos);
    std::string_view tok = literal.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t'))
      tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t'))
      tok.remove_suffix(1);
    unsigned v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
      fail(errc::parse_error,
           "bad coefficient '" + std::string(tok) + "' in polynomial literal");
    if (v >= r.order())
      fail(errc::parse_error, "coefficient " + std::to_string(v) +
                                  " out of range for ring of order " +
                                  std::to_string(r.order()));
    coeffs.push_back(elem(v));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return poly(r, std::move(coeffs));
}

std::string format_poly(const poly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(unsigned(f.coeffs()[i]));
  }
  return s;
}

} // namespace ringlab
