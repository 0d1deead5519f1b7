#pragma once

// Internal: per-backend kernel entry points. Only kernels.cpp (dispatch) and
// the backend translation units include this.

#include "ringlab/kernels.hpp"

namespace ringlab::kernels::detail {

void gather_row_scalar(const finite_ring&, const elem* row, const elem* xs,
                       elem* out, std::size_t n);
std::uint64_t right_annihilator_mask_scalar(const finite_ring&,
                                            std::span<const elem>);
std::uint64_t left_annihilator_mask_scalar(const finite_ring&,
                                           std::span<const elem>);
std::uint64_t conv_zero_right_mask_scalar(const finite_ring&,
                                          std::span<const elem>,
                                          std::span<const elem>);
std::uint64_t conv_zero_left_mask_scalar(const finite_ring&,
                                         std::span<const elem>,
                                         std::span<const elem>);

#if defined(__x86_64__) || defined(_M_X64)
#define RINGLAB_HAVE_AVX2_BACKEND 1
void gather_row_avx2(const finite_ring&, const elem* row, const elem* xs,
                     elem* out, std::size_t n);
std::uint64_t right_annihilator_mask_avx2(const finite_ring&,
                                          std::span<const elem>);
std::uint64_t left_annihilator_mask_avx2(const finite_ring&,
                                         std::span<const elem>);
std::uint64_t conv_zero_right_mask_avx2(const finite_ring&,
                                        std::span<const elem>,
                                        std::span<const elem>);
std::uint64_t conv_zero_left_mask_avx2(const finite_ring&,
                                       std::span<const elem>,
                                       std::span<const elem>);
#endif

} // namespace ringlab::kernels::detail
