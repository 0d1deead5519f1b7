// AVX2 kernels for rings of order <= 16: a table row is one 16-byte lane
// set, so table lookup is a single vpshufb and a zero test is vpcmpeqb +
// vpmovmskb. The conv kernels fold two window positions per 256-bit step.
// Larger rings delegate to the scalar reference implementation.
//
// This translation unit is compiled with -mavx2; nothing here runs unless
// the dispatcher confirmed CPU support.

#include "kernels_impl.hpp"

#if defined(RINGLAB_HAVE_AVX2_BACKEND)

#include <immintrin.h>

#include <cassert>
#include <cstring>

namespace ringlab::kernels::detail {

namespace {

inline __m128i load_row16(const elem* p) {
  return _mm_loadu_si128(reinterpret_cast<const __m128i*>(p));
}

inline std::uint32_t order_mask(unsigned k) {
  return k == 16 ? 0xFFFFu : ((1u << k) - 1u);
}

inline __m256i pair256(__m128i lo, __m128i hi) {
  return _mm256_inserti128_si256(_mm256_castsi128_si256(lo), hi, 1);
}

// One window position of the conv kernels: values mul-row lookup, then an
// optional add-row shuffle folding in the b0-independent residual term.
inline __m128i conv_term(const finite_ring& r, const elem* mulrow, elem cj) {
  __m128i v = load_row16(mulrow);
  if (cj != 0) v = _mm_shuffle_epi8(load_row16(r.add_row16(cj)), v);
  return v;
}

template <class RowFn>
std::uint64_t conv_zero_mask_16(const finite_ring& r,
                                std::span<const elem> coeffs,
                                std::span<const elem> residual, RowFn row_of) {
  const unsigned k = r.order();
  const std::size_t w = residual.size();
  const __m128i zero = _mm_setzero_si128();

  // Window positions whose coefficient is 0 contribute a constant term.
  for (std::size_t j = 0; j < w; ++j) {
    const elem cj = j < coeffs.size() ? coeffs[j] : 0;
    if (cj == 0 && residual[j] != 0) return 0;
  }

  __m256i acc2 = _mm256_set1_epi8(char(0xFF));
  __m128i acc = _mm_set1_epi8(char(0xFF));
  std::size_t j = 0;
  // Two positions per 256-bit step (vpshufb shuffles each 128 half
  // independently, which is exactly the pairing needed here).
  for (; j + 1 < w; j += 2) {
    const elem c0 = j < coeffs.size() ? coeffs[j] : 0;
    const elem c1 = j + 1 < coeffs.size() ? coeffs[j + 1] : 0;
    if (c0 == 0 && c1 == 0) continue;
    if (c0 != 0 && c1 != 0) {
      __m256i v = pair256(conv_term(r, row_of(c0), residual[j]),
                          conv_term(r, row_of(c1), residual[j + 1]));
      acc2 = _mm256_and_si256(acc2, _mm256_cmpeq_epi8(v, _mm256_setzero_si256()));
    } else {
      const elem c = c0 ? c0 : c1;
      const std::size_t jj = c0 ? j : j + 1;
      __m128i v = conv_term(r, row_of(c), residual[jj]);
      acc = _mm_and_si128(acc, _mm_cmpeq_epi8(v, zero));
    }
  }
  if (j < w) {
    const elem c = j < coeffs.size() ? coeffs[j] : 0;
    if (c != 0) {
      __m128i v = conv_term(r, row_of(c), residual[j]);
      acc = _mm_and_si128(acc, _mm_cmpeq_epi8(v, zero));
    }
  }
  acc = _mm_and_si128(acc, _mm_and_si128(_mm256_castsi256_si128(acc2),
                                         _mm256_extracti128_si256(acc2, 1)));
  return std::uint32_t(_mm_movemask_epi8(acc)) & order_mask(k);
}

} // namespace

void gather_row_avx2(const finite_ring& r, const elem* row, const elem* xs,
                     elem* out, std::size_t n) {
  if (!r.has_simd_tables()) {
    gather_row_scalar(r, row, xs, out, n);
    return;
  }
  alignas(16) elem buf[16] = {0};
  std::memcpy(buf, row, r.order());
  const __m128i tbl = load_row16(buf);
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(xs + i));
    __m256i y = _mm256_shuffle_epi8(pair256(tbl, tbl), x);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), y);
  }
  for (; i + 16 <= n; i += 16) {
    __m128i x = _mm_loadu_si128(reinterpret_cast<const __m128i*>(xs + i));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out + i),
                     _mm_shuffle_epi8(tbl, x));
  }
  for (; i < n; ++i) out[i] = row[xs[i]];
}

std::uint64_t right_annihilator_mask_avx2(const finite_ring& r,
                                          std::span<const elem> coeffs) {
  if (!r.has_simd_tables()) return right_annihilator_mask_scalar(r, coeffs);
  const __m128i zero = _mm_setzero_si128();
  __m128i acc = _mm_set1_epi8(char(0xFF));
  for (elem a : coeffs)
    acc = _mm_and_si128(acc, _mm_cmpeq_epi8(load_row16(r.mul_row16(a)), zero));
  return std::uint32_t(_mm_movemask_epi8(acc)) & order_mask(r.order());
}

std::uint64_t left_annihilator_mask_avx2(const finite_ring& r,
                                         std::span<const elem> coeffs) {
  if (!r.has_simd_tables()) return left_annihilator_mask_scalar(r, coeffs);
  const __m128i zero = _mm_setzero_si128();
  __m128i acc = _mm_set1_epi8(char(0xFF));
  for (elem b : coeffs)
    acc = _mm_and_si128(acc, _mm_cmpeq_epi8(load_row16(r.mul_col16(b)), zero));
  return std::uint32_t(_mm_movemask_epi8(acc)) & order_mask(r.order());
}

std::uint64_t conv_zero_right_mask_avx2(const finite_ring& r,
                                        std::span<const elem> fcoeffs,
                                        std::span<const elem> residual) {
  if (!r.has_simd_tables())
    return conv_zero_right_mask_scalar(r, fcoeffs, residual);
  return conv_zero_mask_16(r, fcoeffs, residual,
                           [&](elem a) { return r.mul_row16(a); });
}

std::uint64_t conv_zero_left_mask_avx2(const finite_ring& r,
                                       std::span<const elem> gcoeffs,
                                       std::span<const elem> residual) {
  if (!r.has_simd_tables())
    return conv_zero_left_mask_scalar(r, gcoeffs, residual);
  return conv_zero_mask_16(r, gcoeffs, residual,
                           [&](elem b) { return r.mul_col16(b); });
}

} // namespace ringlab::kernels::detail

#endif // RINGLAB_HAVE_AVX2_BACKEND
