#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

// Dense polynomial over a finite ring, coefficients stored low-to-high and
// normalized: no stored coefficients means zero, otherwise the last stored
// coefficient is nonzero. The zero polynomial has no degree; degree()
// returns the sentinel -1 for it. Holds a non-owning pointer to its ring;
// binary operations require the same ring object (pointer identity).
class poly {
public:
  explicit poly(const finite_ring& r) : ring_(&r) {}
  poly(const finite_ring& r, std::vector<elem> coeffs);

  static poly zero(const finite_ring& r) { return poly(r); }
  static poly constant(const finite_ring& r, elem c);

  const finite_ring& ring() const { return *ring_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return int(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  std::span<const elem> coeffs() const { return coeffs_; }
  // Padded view: zero beyond the stored coefficients.
  elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

  bool operator==(const poly& o) const {
    return ring_ == o.ring_ && coeffs_ == o.coeffs_;
  }

private:
  const finite_ring* ring_;
  std::vector<elem> coeffs_;
};

poly poly_add(const poly& f, const poly& g);

// Order-preserving convolution: coefficient j is sum over i of a_i * b_{j-i},
// never b * a. x is central, coefficients need not commute.
poly poly_mul(const poly& f, const poly& g);

// A polynomial viewed through a fixed-width coefficient window (the frame the
// coefficient-reversal map acts on). width >= number of stored coefficients.
struct coefficient_window {
  const poly& p;
  std::size_t width;
};

// Reversal within the window: result coefficient i is coeff(width-1-i);
// f(x) -> x^(width-1) * f(1/x) as a formal operation, then renormalized.
poly reverse(coefficient_window w);
inline poly reverse(const poly& p, std::size_t width) {
  return reverse(coefficient_window{p, width});
}

poly scale_left(elem a, const poly& f);  // a * f, coefficientwise a*f_i
poly scale_right(const poly& f, elem a); // f * a, coefficientwise f_i*a

// (f - f(0)) / x: drops the constant coefficient, shifts the rest down.
// f must be nonzero; the result may be zero (f constant).
poly strip_constant(const poly& f);

// CLI literal: comma-separated coefficient indices, low-to-high ("2,2" is
// 2+2x). Whitespace around entries is ignored; indices are validated
// against the ring order.
poly parse_poly(const finite_ring& r, std::string_view literal);
std::string format_poly(const poly& f); // inverse of parse_poly, "0" for zero

} // namespace ringlab
