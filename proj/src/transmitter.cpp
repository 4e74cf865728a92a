#include "ssbsim/transmitter.hpp"

#include <cmath>
#include <numeric>

namespace ssbsim {

cvec synthesize_baseband(const FrameSymbols& symbols, const ComplexFilter& f) {
  require(!symbols.s.empty(), "synthesize_baseband: empty frame");
  const int I = f.interp;
  const size_t n_up = symbols.s.size() * static_cast<size_t>(I);
  cvec out(n_up + f.taps.size() - 1, cdouble{0.0, 0.0});
  // sparse upsampled convolution: one filter copy per symbol
  for (size_t k = 0; k < symbols.s.size(); ++k) {
    const double sk = symbols.s[k];
    if (sk == 0.0) continue;
    const size_t base = k * static_cast<size_t>(I);
    for (size_t j = 0; j < f.taps.size(); ++j) out[base + j] += sk * f.taps[j];
  }
  return out;
}

rvec modulate_subcarrier(const cvec& s, int k_i, double delta_i, int interp) {
  require(k_i >= 1 && 2 * k_i < interp, "modulate_subcarrier: k_i must satisfy 1 <= k_i < I/2");
  require(std::abs(delta_i) <= cfo_max(interp) + 1e-15,
          "modulate_subcarrier: |delta_i| exceeds pi/(50*I)");
  const double omega = 2.0 * kPi * k_i / interp + delta_i;
  rvec out(s.size());
  // phasor recurrence, renormalized periodically to hold |w| = 1
  cdouble w{1.0, 0.0};
  const cdouble step = std::polar(1.0, omega);
  for (size_t m = 0; m < s.size(); ++m) {
    out[m] = (s[m] * w).real();
    w *= step;
    if ((m & 0xFFF) == 0xFFF) w /= std::abs(w);
  }
  return out;
}

rvec compose_multicarrier(const std::vector<rvec>& signals) {
  require(!signals.empty(), "compose_multicarrier: no signals");
  const size_t n = signals.front().size();
  for (const auto& s : signals) {
    require(s.size() == n, "compose_multicarrier: length mismatch");
  }
  rvec out(n, 0.0);
  for (const auto& s : signals) {
    for (size_t m = 0; m < n; ++m) out[m] += s[m];
  }
  return out;
}

std::vector<int> assign_subcarriers(int n_sc, int interp, int chan_len) {
  require(n_sc >= 1, "assign_subcarriers: n_sc must be >= 1");
  require(interp >= 4, "assign_subcarriers: interp too small");
  require(chan_len >= 1, "assign_subcarriers: chan_len must be >= 1");

  const int spacing = interp / std::gcd(interp, chan_len);
  std::vector<int> candidates;
  const int start = std::min(3, (interp - 1) / 2);
  for (int k = start; k < (interp + 1) / 2; k += spacing) candidates.push_back(k);
  for (int k = start - spacing; k >= 1; k -= spacing) candidates.push_back(k);
  require(static_cast<int>(candidates.size()) >= n_sc,
          "assign_subcarriers: not enough indices in [1, I/2) at the required spacing");
  candidates.resize(n_sc);
  return candidates;
}

double cfo_max(int interp) { return kPi / (50.0 * interp); }

double draw_cfo(int interp, Rng& rng) {
  require(interp >= 2, "draw_cfo: interp must be >= 2");
  std::uniform_real_distribution<double> u(-cfo_max(interp), cfo_max(interp));
  return u(rng);
}

}  // namespace ssbsim
