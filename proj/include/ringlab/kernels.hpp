#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "ringlab/ring.hpp"

// Batch kernels for the exhaustive table scans. The scalar implementations
// define the semantics; the AVX2 variants are drop-in replacements for rings
// of order <= 16 (one pshufb lane set per table row) and fall back to scalar
// above that. Backend is picked at startup from CPU support, overridable via
// RINGLAB_KERNELS=scalar|avx2 or set_backend (used by the equivalence tests).
//
// Mask conventions: bit c of a returned mask refers to candidate element c;
// masks require order <= 64 and bits >= order are zero.

namespace ringlab::kernels {

enum class backend { scalar, avx2 };

backend active_backend();
bool backend_supported(backend b);
// Returns false (and leaves the backend unchanged) if b is unsupported here.
bool set_backend(backend b);

// out[i] = row[xs[i]]; row is a table row of a ring of order k, xs[i] < k.
void gather_row(const finite_ring& r, const elem* row, const elem* xs,
                elem* out, std::size_t n);

// Bit c set iff mul(coeffs[i], c) == 0 for every i.
std::uint64_t right_annihilator_mask(const finite_ring& r,
                                     std::span<const elem> coeffs);

// Bit c set iff mul(c, coeffs[i]) == 0 for every i.
std::uint64_t left_annihilator_mask(const finite_ring& r,
                                    std::span<const elem> coeffs);

// Vectorized inner loop of the annihilating-pair scans, right version: for a
// product window residual[0..w) that already contains every convolution term
// not involving b0, bit b0 is set iff
//   add(residual[j], mul(f[j], b0)) == 0  for all j < w
// (f[j] treated as 0 beyond the span). Lanes are the b0 candidates.
std::uint64_t conv_zero_right_mask(const finite_ring& r,
                                   std::span<const elem> fcoeffs,
                                   std::span<const elem> residual);

// Left version: lanes are a0 candidates, terms are mul(a0, g[j]).
std::uint64_t conv_zero_left_mask(const finite_ring& r,
                                  std::span<const elem> gcoeffs,
                                  std::span<const elem> residual);

} // namespace ringlab::kernels
