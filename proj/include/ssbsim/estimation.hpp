#pragma once

#include "ssbsim/common.hpp"

namespace ssbsim {

// ML channel estimate from the training matched-filter peak:
// H_hat = Z_max / ((1+j) L_d1).
cdouble estimate_channel(cdouble z_peak, int data_len);

// Noise variance from the training slots, in the canonical (1+j)-divided
// symbol domain: sigma2_hat = (1/(2 L_d1)) sum_k |x_k - H_hat s_k|^2.
// Estimates the per-real-sample AWGN variance sigma_w^2; the corresponding
// one-dimensional variance at the raw matched-filter output is 2*sigma2_hat.
double estimate_noise_var(const cvec& training_samples,
                          const std::vector<int8_t>& training_values, cdouble h_hat);

// One subcarrier's estimation outcome within a trial, with the ground truth
// the simulator knows.
struct Subcarrierrecord {
  bool detected = false;
  bool outlier = false;
  double omega_true = 0.0;
  double omega_hat_c = 0.0;
  double omega_hat_f = 0.0;
  double h_true_mag = 0.0;
  double h_hat_mag = 0.0;
  double sigma2_true = 0.0;
  double sigma2_hat = 0.0;
};

struct RmsReport {
  double cfo_coarse = 0.0;  // over all frames and subcarriers
  double cfo_fine = 0.0;    // over detected only
  double chan = 0.0;        // | |H| - |H_hat| |, detected only
  double noisevar = 0.0;    // 4*sigma_w^2 - 4*sigma2_hat, detected only
  long total = 0;
  long detected = 0;
};

RmsReport rms_metrics(const std::vector<SubcarrierRecord>& records);

}  // namespace ssbsim
