#pragma once

#include <memory>

#include "ssbsim/common.hpp"
#include "ssbsim/fft.hpp"
#include "ssbsim/framing.hpp"
#include "ssbsim/pulse_shaping.hpp"

namespace ssbsim {

// Baseband training matched filters, precomputed once per frame plan.
struct TrainingMF {
  rvec s_tI;  // training symbols shaped by p
  rvec s_tQ;  // training symbols shaped by p_hat
};

TrainingMF precompute_training_mf(const FramePlan& plan, const RealFilter& p,
                                  const RealFilter& ph);

// Uniform mid-step quantizer grid: odd level count, symmetric about the
// center, center level present. Maximum quantization error is step()/2.
struct QuantizerGrid {
  double center = 0.0;
  double half_range = 0.0;
  int levels = 0;  // B, odd

  double step() const { return 2.0 * half_range / levels; }
  double level(int b) const { return center + (b - (levels - 1) / 2) * step(); }
};

// Smallest odd integer >= x.
int next_odd_at_least(double x);

struct DetectionResult {
  bool detected = false;
  long m_peak = 0;            // MF-output index of the last training symbol
  double omega_hat_c = 0.0;   // 2*pi*k_i/I + delta_hat_c
  double omega_hat_f = 0.0;   // omega_hat_c + delta_hat_f
  double delta_hat_c = 0.0;
  double delta_hat_f = 0.0;
  cdouble z_peak{0.0, 0.0};   // complex pre-magnitude value at the peak
  double pta = 0.0;
  bool outlier = false;       // set by the caller from the true offset
  long evals_coarse = 0;      // grid cells evaluated (levels)
  long evals_fine = 0;
};

// FFT-backed evaluator of the joint detection metric
//   Z(omega,m) = |(2 r cos(omega(n-ref))) corr s_tI - j (2 r sin(...)) corr s_tQ|
// over all buffer lags for one frequency hypothesis. One instance per thread.
class SearchEngine {
 public:
  // buf_len: received buffer length N; mf_len: training MF length.
  SearchEngine(size_t buf_len, size_t mf_len);

  void set_training_mf(const TrainingMF& mf);

  struct LevelScan {
    double z2_max = 0.0;
    long m_max = 0;
    cdouble z_at_max{0.0, 0.0};
    double z2_sum = 0.0;  // over all scanned lags
    long cells = 0;
  };

  // Scans lags m in [0, buf_len).
  LevelScan scan_level(const rvec& r, double omega, long phase_ref);

  size_t buf_len() const { return buf_len_; }

 private:
  size_t buf_len_;
  size_t mf_len_;
  size_t nfft_;
  FftFloat fft_;
  std::vector<std::complex<float>> si_spec_, sq_spec_, xspec_, gspec_;
};

// Coarse stage: B_c = next odd >= L_d/50 levels over [-delta_max, delta_max].
DetectionResult coarse_search(SearchEngine& eng, const rvec& r, int k_i, int interp,
                              int frame_len, long phase_ref);

// Fine stage: B_f levels over [delta_c - eps_c, delta_c + eps_c], joint argmax
// over (level, m); PTA is the peak Z^2 over the mean Z^2 of every cell
// evaluated in this stage.
DetectionResult fine_search(SearchEngine& eng, const rvec& r, const DetectionResult& coarse,
                            int b_fine, double pta_threshold, int frame_len, int interp,
                            long phase_ref);

// Single-stage reference search with B = next odd >= L_d/5 levels; used for
// the complexity/accuracy comparison experiments.
DetectionResult single_stage_search(SearchEngine& eng, const rvec& r, int k_i, int interp,
                                    int frame_len, double pta_threshold, long phase_ref);

// Reference-path metric (double precision) for tests and diagnostics: returns
// the complex pre-magnitude sequence over lags [0, len(r)).
cvec detection_metric_complex(const rvec& r, double omega, const TrainingMF& mf,
                              long phase_ref = 0);
rvec detection_metric(const rvec& r, double omega, const TrainingMF& mf, long phase_ref = 0);

// Symbol-rate matched filter outputs x_k in the canonical (1+j)-divided
// domain, sampled at m_peak - (L_d-1-k)*I for k = 0..L_d-1.
// Throws ParamError if the sample range leaves the buffer.
cvec matched_filter_demod(const rvec& r, double omega_f, const RealFilter& p,
                          const RealFilter& ph, long m_peak, const FramePlan& plan,
                          int interp, long phase_ref = 0);

}  // namespace ssbsim
