#pragma once

// Exact-length discrete Fourier transform backed by FFTW.

#include <complex>
#include <cstring>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include <fftw3.h>

#include "resonlab/error.hpp"

namespace resonlab::dft {

namespace detail {

inline std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};

}  // namespace detail

/// out[j] = Σ_k in[k] e^{+2πi jk/n}, n = in.size(), any n >= 1.
///
/// Plans use FFTW_ESTIMATE on fftw_malloc'd buffers, so the codelet choice and
/// therefore the rounding are identical from call to call.
inline std::vector<std::complex<double>> transform_positive(std::span<const std::complex<double>> in) {
  const std::size_t n = in.size();
  std::vector<std::complex<double>> out(n);
  if (n == 0) return out;
  using Buffer = std::unique_ptr<fftw_complex, detail::FftwFree>;
  Buffer buf(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n)));
  if (!buf) throw ResourceError("fftw_malloc failed");
  fftw_plan plan;
  {
    std::lock_guard lock(detail::planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(n), buf.get(), buf.get(), FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  if (plan == nullptr) throw ResourceError("FFTW planning failed");
  std::memcpy(buf.get(), in.data(), sizeof(fftw_complex) * n);
  fftw_execute(plan);
  std::memcpy(out.data(), buf.get(), sizeof(fftw_complex) * n);
  {
    std::lock_guard lock(detail::planner_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

inline std::vector<std::complex<double>> transform_positive(std::span<const double> in) {
  std::vector<std::complex<double>> c(in.begin(), in.end());
  return transform_positive(std::span<const std::complex<double>>(c));
}

}  // namespace resonlab::dft
