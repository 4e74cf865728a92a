#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "ssbsim/common.hpp"

namespace ssbsim {

// Thin FFTW wrappers. Plans are created with FFTW_ESTIMATE so the chosen
// algorithm is a pure function of the transform size: identical runs produce
// bit-identical results.
//
// Not thread-safe: one instance per thread (plan creation is serialized
// internally by a global mutex).

class FftDouble {
 public:
  explicit FftDouble(size_t n);
  ~FftDouble();
  FftDouble(const FftDouble&) = delete;
  FftDouble& operator=(const FftDouble&) = delete;

  size_t size() const { return n_; }
  // In-place transforms on caller buffers of length n (copied through the
  // aligned internal buffer).
  void forward(const cvec& in, cvec& out);
  void inverse(const cvec& in, cvec& out);  // unnormalized

 private:
  size_t n_;
  void* in_;
  void* out_;
  void* plan_fwd_;
  void* plan_inv_;
};

class FftFloat {
 public:
  explicit FftFloat(size_t n);
  ~FftFloat();
  FftFloat(const FftFloat&) = delete;
  FftFloat& operator=(const FftFloat&) = delete;

  size_t size() const { return n_; }
  std::complex<float>* in() { return reinterpret_cast<std::complex<float>*>(in_); }
  std::complex<float>* out() { return reinterpret_cast<std::complex<float>*>(out_); }
  void forward();   // in() -> out()
  void inverse();   // in() -> out(), unnormalized

 private:
  size_t n_;
  void* in_;
  void* out_;
  void* plan_fwd_;
  void* plan_inv_;
};

inline size_t next_pow2(size_t n) {
  size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace ssbsim
