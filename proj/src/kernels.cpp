#include "ringlab/kernels.hpp"

#include <cstdlib>
#include <cstring>

#include "kernels_impl.hpp"

namespace ringlab::kernels {

namespace {

using detail::conv_zero_left_mask_scalar;
using detail::conv_zero_right_mask_scalar;
using detail::gather_row_scalar;
using detail::left_annihilator_mask_scalar;
using detail::right_annihilator_mask_scalar;

struct vtable {
  void (*gather)(const finite_ring&, const elem*, const elem*, elem*,
                 std::size_t);
  std::uint64_t (*rann)(const finite_ring&, std::span<const elem>);
  std::uint64_t (*lann)(const finite_ring&, std::span<const elem>);
  std::uint64_t (*convr)(const finite_ring&, std::span<const elem>,
                         std::span<const elem>);
  std::uint64_t (*convl)(const finite_ring&, std::span<const elem>,
                         std::span<const elem>);
};

constexpr vtable scalar_vt = {
    gather_row_scalar, right_annihilator_mask_scalar,
    left_annihilator_mask_scalar, conv_zero_right_mask_scalar,
    conv_zero_left_mask_scalar};

#if defined(RINGLAB_HAVE_AVX2_BACKEND)
constexpr vtable avx2_vt = {
    detail::gather_row_avx2, detail::right_annihilator_mask_avx2,
    detail::left_annihilator_mask_avx2, detail::conv_zero_right_mask_avx2,
    detail::conv_zero_left_mask_avx2};
#endif

struct dispatch_state {
  const vtable* vt;
  backend which;
};

dispatch_state initial_state() {
#if defined(RINGLAB_HAVE_AVX2_BACKEND)
  bool want_avx2 = __builtin_cpu_supports("avx2");
  if (const char* env = std::getenv("RINGLAB_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) want_avx2 = false;
    // "avx2" keeps the CPU-support decision; anything else is ignored.
  }
  if (want_avx2) return {&avx2_vt, backend::avx2};
#endif
  return {&scalar_vt, backend::scalar};
}

dispatch_state& state() {
  static dispatch_state s = initial_state();
  return s;
}

} // namespace

backend active_backend() { return state().which; }

bool backend_supported(backend b) {
  if (b == backend::scalar) return true;
#if defined(RINGLAB_HAVE_AVX2_BACKEND)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

bool set_backend(backend b) {
  if (!backend_supported(b)) return false;
  if (b == backend::scalar) {
    state() = {&scalar_vt, backend::scalar};
    return true;
  }
#if defined(RINGLAB_HAVE_AVX2_BACKEND)
  state() = {&avx2_vt, backend::avx2};
  return true;
#else
  return false;
#endif
}

void gather_row(const finite_ring& r, const elem* row, const elem* xs,
                elem* out, std::size_t n) {
  state().vt->gather(r, row, xs, out, n);
}

std::uint64_t right_annihilator_mask(const finite_ring& r,
                                     std::span<const elem> coeffs) {
  return state().vt->rann(r, coeffs);
}

std::uint64_t left_annihilator_mask(const finite_ring& r,
                                    std::span<const elem> coeffs) {
  return state().vt->lann(r, coeffs);
}

std::uint64_t conv_zero_right_mask(const finite_ring& r,
                                   std::span<const elem> fcoeffs,
                                   std::span<const elem> residual) {
  return state().vt->convr(r, fcoeffs, residual);
}

std::uint64_t conv_zero_left_mask(const finite_ring& r,
                                  std::span<const elem> gcoeffs,
                                  std::span<const elem> residual) {
  return state().vt->convl(r, gcoeffs, residual);
}

} // namespace ringlab::kernels
