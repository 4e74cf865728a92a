#pragma once

#include "ssbsim/common.hpp"
#include "ssbsim/framing.hpp"
#include "ssbsim/pulse_shaping.hpp"

namespace ssbsim {

// Subcarrier allocation: integer indices 1 <= k_i < I/2 with pairwise spacing
// a multiple of I/gcd(I,L_h) so the per-subcarrier fading gains decorrelate.
struct SubcarrierSet {
  std::vector<int> indices;  // k_i
  rvec offsets;              // delta_i, radians per sample
  int interp = 0;

  double omega(size_t i) const {
    return 2.0 * kPi * indices[i] / interp + offsets[i];
  }
};

// s(m) = sum_k S_k p~(m - k*I): upsample by I, convolve with the complex
// transmit filter. Output length frame_len*I + filter_len - 1.
cvec synthesize_baseband(const FrameSymbols& symbols, const ComplexFilter& f);

// Re{ s(m) e^{j omega_i m} } with omega_i = 2*pi*k_i/I + delta_i.
rvec modulate_subcarrier(const cvec& s, int k_i, double delta_i, int interp);

rvec compose_multicarrier(const std::vector<rvec>& signals);

// Defaults to {3,5,7,1} for I=16, L_h=8: index 3 first (the second-subcarrier
// example value), stepping by the decorrelation spacing, wrapping to fill.
std::vector<int> assign_subcarriers(int n_sc, int interp, int chan_len);

double cfo_max(int interp);  // pi/(50*I)
double draw_cfo(int interp, Rng& rng);

}  // namespace ssbsim
