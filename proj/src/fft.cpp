#include "ssbsim/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>

namespace ssbsim {

namespace {
std::mutex g_plan_mutex;  // fftw plan creation is not thread-safe
}

FftDouble::FftDouble(size_t n) : n_(n) {
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  in_ = fftw_malloc(sizeof(fftw_complex) * n_);
  out_ = fftw_malloc(sizeof(fftw_complex) * n_);
  plan_fwd_ = fftw_plan_dft_1d(static_cast<int>(n_), static_cast<fftw_complex*>(in_),
                               static_cast<fftw_complex*>(out_), FFTW_FORWARD, FFTW_ESTIMATE);
  plan_inv_ = fftw_plan_dft_1d(static_cast<int>(n_), static_cast<fftw_complex*>(in_),
                               static_cast<fftw_complex*>(out_), FFTW_BACKWARD, FFTW_ESTIMATE);
}

FftDouble::~FftDouble() {
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_inv_));
  fftw_free(in_);
  fftw_free(out_);
}

void FftDouble::forward(const cvec& in, cvec& out) {
  std::memcpy(in_, in.data(), sizeof(fftw_complex) * n_);
  fftw_execute(static_cast<fftw_plan>(plan_fwd_));
  out.resize(n_);
  std::memcpy(out.data(), out_, sizeof(fftw_complex) * n_);
}

void FftDouble::inverse(const cvec& in, cvec& out) {
  std::memcpy(in_, in.data(), sizeof(fftw_complex) * n_);
  fftw_execute(static_cast<fftw_plan>(plan_inv_));
  out.resize(n_);
  std::memcpy(out.data(), out_, sizeof(fftw_complex) * n_);
}

FftFloat::FftFloat(size_t n) : n_(n) {
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  in_ = fftwf_malloc(sizeof(fftwf_complex) * n_);
  out_ = fftwf_malloc(sizeof(fftwf_complex) * n_);
  plan_fwd_ = fftwf_plan_dft_1d(static_cast<int>(n_), static_cast<fftwf_complex*>(in_),
                                static_cast<fftwf_complex*>(out_), FFTW_FORWARD, FFTW_ESTIMATE);
  plan_inv_ = fftwf_plan_dft_1d(static_cast<int>(n_), static_cast<fftwf_complex*>(in_),
                                static_cast<fftwf_complex*>(out_), FFTW_BACKWARD, FFTW_ESTIMATE);
}

FftFloat::~FftFloat() {
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  fftwf_destroy_plan(static_cast<fftwf_plan>(plan_fwd_));
  fftwf_destroy_plan(static_cast<fftwf_plan>(plan_inv_));
  fftwf_free(in_);
  fftwf_free(out_);
}

void FftFloat::forward() { fftwf_execute(static_cast<fftwf_plan>(plan_fwd_)); }
void FftFloat::inverse() { fftwf_execute(static_cast<fftwf_plan>(plan_inv_)); }

}  // namespace ssbsim
