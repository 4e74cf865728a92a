#include "ssbsim/pulse_shaping.hpp"

#include <algorithm>
#include <cmath>

#include "ssbsim/fft.hpp"

namespace ssbsim {

double RealFilter::energy() const {
  double e = 0.0;
  for (double t : taps) e += t * t;
  return e;
}

namespace {

void normalize_energy(rvec& taps) {
  double e = 0.0;
  for (double t : taps) e += t * t;
  const double s = 1.0 / std::sqrt(e);
  for (double& t : taps) t *= s;
}

// RRC impulse response at t (in symbol periods, T = 1).
double rrc_at(double t, double rho) {
  const double tol = 1e-9;
  if (std::abs(t) < tol) {
    return 1.0 + rho * (4.0 / kPi - 1.0);
  }
  const double ts = 1.0 / (4.0 * rho);
  if (std::abs(std::abs(t) - ts) < tol) {
    const double a = kPi / (4.0 * rho);
    return (rho / std::sqrt(2.0)) *
           ((1.0 + 2.0 / kPi) * std::sin(a) + (1.0 - 2.0 / kPi) * std::cos(a));
  }
  const double num = std::sin(kPi * t * (1.0 - rho)) +
                     4.0 * rho * t * std::cos(kPi * t * (1.0 + rho));
  const double den = kPi * t * (1.0 - 16.0 * rho * rho * t * t);
  return num / den;
}

}  // namespace

RealFilter design_rrc(double rolloff, int interp, int span) {
  require(rolloff > 0.0 && rolloff <= 1.0, "design_rrc: rolloff must be in (0,1]");
  require(interp >= 2, "design_rrc: interp must be >= 2");
  require(span >= 4 && span % 2 == 0, "design_rrc: span must be even and >= 4");

  RealFilter f;
  f.interp = interp;
  f.rolloff = rolloff;
  f.span = span;
  const int n = span * interp + 1;
  const int c = span * interp / 2;
  f.taps.resize(n);
  for (int m = 0; m < n; ++m) {
    f.taps[m] = rrc_at(static_cast<double>(m - c) / interp, rolloff);
  }
  normalize_energy(f.taps);
  return f;
}

RealFilter design_mht_rrc(const RealFilter& p, int pad_factor) {
  require(pad_factor >= 8, "design_mht_rrc: pad_factor must be >= 8");
  const size_t n = p.taps.size();
  const size_t nfft = next_pow2(n * static_cast<size_t>(pad_factor));

  cvec buf(nfft, cdouble{0.0, 0.0});
  for (size_t i = 0; i < n; ++i) buf[i] = cdouble{p.taps[i], 0.0};

  FftDouble fft(nfft);
  cvec spec;
  fft.forward(buf, spec);

  // -j*sgn(omega) with DC and Nyquist bins zeroed.
  spec[0] = 0.0;
  spec[nfft / 2] = 0.0;
  for (size_t k = 1; k < nfft / 2; ++k) spec[k] *= cdouble{0.0, -1.0};
  for (size_t k = nfft / 2 + 1; k < nfft; ++k) spec[k] *= cdouble{0.0, 1.0};

  cvec time;
  fft.inverse(spec, time);

  RealFilter out;
  out.interp = p.interp;
  out.rolloff = p.rolloff;
  out.span = p.span;
  out.taps.resize(n);
  const double scale = 1.0 / static_cast<double>(nfft);
  for (size_t i = 0; i < n; ++i) out.taps[i] = time[i].real() * scale;

  // The transform of the symmetric input is anti-symmetric up to rounding;
  // enforce it exactly so downstream symmetry checks are bit-clean.
  const size_t c = n / 2;
  out.taps[c] = 0.0;
  for (size_t m = 1; m <= c; ++m) {
    const double v = 0.5 * (out.taps[c + m] - out.taps[c - m]);
    out.taps[c + m] = v;
    out.taps[c - m] = -v;
  }
  normalize_energy(out.taps);
  return out;
}

ComplexFilter make_complex_tx_filter(const RealFilter& p, const RealFilter& ph) {
  require(p.taps.size() == ph.taps.size(), "make_complex_tx_filter: length mismatch");
  require(p.interp == ph.interp, "make_complex_tx_filter: interp mismatch");
  ComplexFilter f;
  f.interp = p.interp;
  f.taps.resize(p.taps.size());
  for (size_t i = 0; i < p.taps.size(); ++i) f.taps[i] = cdouble{p.taps[i], ph.taps[i]};
  return f;
}

rvec convolve(const rvec& x, const rvec& f) {
  require(!x.empty() && !f.empty(), "convolve: empty input");
  rvec y(x.size() + f.size() - 1, 0.0);
  for (size_t i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    for (size_t j = 0; j < f.size(); ++j) y[i + j] += xi * f[j];
  }
  return y;
}

cvec convolve(const cvec& x, const cvec& f) {
  require(!x.empty() && !f.empty(), "convolve: empty input");
  cvec y(x.size() + f.size() - 1, cdouble{0.0, 0.0});
  for (size_t i = 0; i < x.size(); ++i) {
    const cdouble xi = x[i];
    for (size_t j = 0; j < f.size(); ++j) y[i + j] += xi * f[j];
  }
  return y;
}

cvec convolve(const cvec& x, const rvec& f) {
  require(!x.empty() && !f.empty(), "convolve: empty input");
  cvec y(x.size() + f.size() - 1, cdouble{0.0, 0.0});
  for (size_t i = 0; i < x.size(); ++i) {
    const cdouble xi = x[i];
    for (size_t j = 0; j < f.size(); ++j) y[i + j] += xi * f[j];
  }
  return y;
}

rvec reversed(const rvec& f) {
  rvec g(f.rbegin(), f.rend());
  return g;
}

namespace {

// Power spectrum of the filter on a dense grid; bin k is omega = 2*pi*k/nfft.
rvec power_spectrum(const ComplexFilter& f, size_t nfft) {
  cvec buf(nfft, cdouble{0.0, 0.0});
  for (size_t i = 0; i < f.taps.size(); ++i) buf[i] = f.taps[i];
  FftDouble fft(nfft);
  cvec spec;
  fft.forward(buf, spec);
  rvec pow(nfft);
  for (size_t k = 0; k < nfft; ++k) pow[k] = std::norm(spec[k]);
  return pow;
}

}  // namespace

double occupied_bandwidth(const ComplexFilter& f, double energy_fraction) {
  require(energy_fraction > 0.0 && energy_fraction < 1.0,
          "occupied_bandwidth: energy_fraction must be in (0,1)");
  const size_t nfft = next_pow2(std::max<size_t>(f.taps.size() * 16, 8192));
  const rvec pow = power_spectrum(f, nfft);
  double total = 0.0;
  for (double v : pow) total += v;
  double acc = 0.0;
  for (size_t k = 0; k < nfft; ++k) {
    acc += pow[k];
    if (acc >= energy_fraction * total) return 2.0 * kPi * static_cast<double>(k) / nfft;
  }
  return 2.0 * kPi;
}

double negative_band_energy_fraction(const ComplexFilter& f) {
  const size_t nfft = next_pow2(std::max<size_t>(f.taps.size() * 16, 8192));
  const rvec pow = power_spectrum(f, nfft);
  double total = 0.0, neg = 0.0;
  for (size_t k = 0; k < nfft; ++k) {
    total += pow[k];
    if (k > nfft / 2) neg += pow[k];  // omega in (-pi, 0)
  }
  return neg / total;
}

}  // namespace ssbsim
