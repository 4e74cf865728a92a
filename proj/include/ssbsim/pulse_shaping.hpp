#pragma once

#include "ssbsim/common.hpp"

namespace ssbsim {

// Real symbol-shaping filter sampled at rate 1/Ts with interp = T/Ts samples
// per symbol. Taps are unit-energy and (anti)symmetric about the center tap.
struct RealFilter {
  rvec taps;    // span*interp + 1 samples, odd count
  int interp;   // I = T/Ts
  double rolloff;
  int span;     // symbol intervals covered

  int center() const { return span * interp / 2; }
  double energy() const;
};

// Complex single-sideband transmit filter p + j*p_hat.
struct ComplexFilter {
  cvec taps;
  int interp;
};

// Root-raised-cosine pulse, truncated to `span` symbols and energy-normalized.
// The removable singularities at t = 0 and t = +/-T/(4*rolloff) are evaluated
// by their analytic limits (gate: |t - t_sing| < 1e-9*T).
RealFilter design_rrc(double rolloff, int interp, int span);

// Companion pulse from the discrete frequency-domain Hilbert transform of p
// on a zero-padded grid (>= pad_factor * taps length): spectrum multiplied by
// -j*sgn(omega), DC and Nyquist bins zeroed, truncated back to the length of
// p and independently renormalized to unit energy. Output is anti-symmetric.
RealFilter design_mht_rrc(const RealFilter& p, int pad_factor = 8);

ComplexFilter make_complex_tx_filter(const RealFilter& p, const RealFilter& ph);

// Full linear convolution, output length len(x)+len(f)-1.
rvec convolve(const rvec& x, const rvec& f);
cvec convolve(const cvec& x, const cvec& f);
cvec convolve(const cvec& x, const rvec& f);

rvec reversed(const rvec& f);

// Smallest omega such that the cumulative spectral energy of f over [0, omega]
// reaches energy_fraction of the total, via dense DFT.
double occupied_bandwidth(const ComplexFilter& f, double energy_fraction = 0.99);

// Fraction of the analytic filter's spectral energy on the negative-frequency
// half (sideband suppression diagnostic).
double negative_band_energy_fraction(const ComplexFilter& f);

}  // namespace ssbsim
