// Reference kernels. Plain loops over the operation tables; the AVX2
// variants must agree with these bit-for-bit on every input.

#include "ringlab/kernels.hpp"
#include "kernels_impl.hpp"

#include <cassert>

namespace ringlab::kernels::detail {

void gather_row_scalar(const finite_ring&, const elem* row, const elem* xs,
                       elem* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = row[xs[i]];
}

std::uint64_t right_annihilator_mask_scalar(const finite_ring& r,
                                            std::span<const elem> coeffs) {
  const unsigned k = r.order();
  assert(k <= 64);
  std::uint64_t mask = (k == 64) ? ~0ull : ((1ull << k) - 1);
  for (elem a : coeffs) {
    const elem* row = r.mul_row(a);
    std::uint64_t m = 0;
    for (unsigned c = 0; c < k; ++c)
      if (row[c] == 0) m |= 1ull << c;
    mask &= m;
    if (!mask) break;
  }
  return mask;
}

std::uint64_t left_annihilator_mask_scalar(const finite_ring& r,
                                           std::span<const elem> coeffs) {
  const unsigned k = r.order();
  assert(k <= 64);
  std::uint64_t mask = (k == 64) ? ~0ull : ((1ull << k) - 1);
  for (elem b : coeffs) {
    const elem* col = r.mul_col(b);
    std::uint64_t m = 0;
    for (unsigned c = 0; c < k; ++c)
      if (col[c] == 0) m |= 1ull << c;
    mask &= m;
    if (!mask) break;
  }
  return mask;
}

std::uint64_t conv_zero_right_mask_scalar(const finite_ring& r,
                                          std::span<const elem> fcoeffs,
                                          std::span<const elem> residual) {
  const unsigned k = r.order();
  assert(k <= 64);
  std::uint64_t mask = (k == 64) ? ~0ull : ((1ull << k) - 1);
  for (std::size_t j = 0; j < residual.size() && mask; ++j) {
    const elem aj = j < fcoeffs.size() ? fcoeffs[j] : 0;
    const elem cj = residual[j];
    if (aj == 0) {
      if (cj != 0) return 0;
      continue;
    }
    const elem* row = r.mul_row(aj);
    std::uint64_t m = 0;
    for (unsigned b0 = 0; b0 < k; ++b0)
      if (r.add(cj, row[b0]) == 0) m |= 1ull << b0;
    mask &= m;
  }
  return mask;
}

std::uint64_t conv_zero_left_mask_scalar(const finite_ring& r,
                                         std::span<const elem> gcoeffs,
                                         std::span<const elem> residual) {
  const unsigned k = r.order();
  assert(k <= 64);
  std::uint64_t mask = (k == 64) ? ~0ull : ((1ull << k) - 1);
  for (std::size_t j = 0; j < residual.size() && mask; ++j) {
    const elem bj = j < gcoeffs.size() ? gcoeffs[j] : 0;
    const elem cj = residual[j];
    if (bj == 0) {
      if (cj != 0) return 0;
      continue;
    }
    const elem* col = r.mul_col(bj);
    std::uint64_t m = 0;
    for (unsigned a0 = 0; a0 < k; ++a0)
      if (r.add(cj, col[a0]) == 0) m |= 1ull << a0;
    mask &= m;
  }
  return mask;
}

} // namespace ringlab::kernels::detail
