#pragma once

#include "ssbsim/common.hpp"

namespace ssbsim {

// Quasi-static real-valued frequency-selective channel: taps are i.i.d.
// N(0, 1/L_h), constant over one frame. ideal=true is the distortionless
// channel h = Kronecker delta.
struct ChannelRealization {
  rvec taps;
  double sigma2_w = 0.0;  // AWGN variance per real sample
  bool ideal = false;
};

ChannelRealization draw_channel(int chan_len, Rng& rng);
ChannelRealization ideal_channel(int chan_len);

// Linear convolution with the channel taps (noiseless).
rvec apply_channel(const rvec& s, const ChannelRealization& ch);

rvec add_awgn(const rvec& s, double sigma2, Rng& rng);

// sigma_w^2 = N_sc / 10^(snr_db/10), from the average-SNR-per-bit definition.
double sigma2_from_snr(double snr_db, int n_sc);

// H(omega) = sum_l h(l) e^{-j omega l}; ground-truth gain for RMS metrics.
cdouble channel_dtft(const ChannelRealization& ch, double omega);

}  // namespace ssbsim
