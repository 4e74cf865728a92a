#include "ssbsim/receiver_sync.hpp"

#include <algorithm>
#include <cmath>

#include "ssbsim/transmitter.hpp"

namespace ssbsim {

TrainingMF precompute_training_mf(const FramePlan& plan, const RealFilter& p,
                                  const RealFilter& ph) {
  require(p.taps.size() == ph.taps.size() && p.interp == ph.interp,
          "precompute_training_mf: filter mismatch");
  const int I = p.interp;
  const size_t n = static_cast<size_t>(plan.frame_len) * I + p.taps.size() - 1;
  TrainingMF mf;
  mf.s_tI.assign(n, 0.0);
  mf.s_tQ.assign(n, 0.0);
  for (size_t i = 0; i < plan.training_positions.size(); ++i) {
    const double v = plan.training_values[i];
    const size_t base = static_cast<size_t>(plan.training_positions[i]) * I;
    for (size_t j = 0; j < p.taps.size(); ++j) {
      mf.s_tI[base + j] += v * p.taps[j];
      mf.s_tQ[base + j] += v * ph.taps[j];
    }
  }
  return mf;
}

int next_odd_at_least(double x) {
  int b = static_cast<int>(std::ceil(x));
  if (b % 2 == 0) ++b;
  return b;
}

namespace {

// 2 r(n) cos/sin(omega (n - ref)) via a double-precision phasor recurrence;
// the recurrence is renormalized periodically so the amplitude cannot drift.
void downconvert(const rvec& r, double omega, long phase_ref, rvec& a, rvec& b) {
  const size_t n = r.size();
  a.resize(n);
  b.resize(n);
  cdouble w = std::polar(1.0, -omega * static_cast<double>(phase_ref));
  const cdouble step = std::polar(1.0, omega);
  for (size_t m = 0; m < n; ++m) {
    const double rr = 2.0 * r[m];
    a[m] = rr * w.real();
    b[m] = rr * w.imag();
    w *= step;
    if ((m & 0xFFF) == 0xFFF) w /= std::abs(w);
  }
}

}  // namespace

SearchEngine::SearchEngine(size_t buf_len, size_t mf_len)
    : buf_len_(buf_len),
      mf_len_(mf_len),
      nfft_(next_pow2(buf_len + mf_len - 1)),
      fft_(nfft_),
      si_spec_(nfft_),
      sq_spec_(nfft_),
      xspec_(nfft_),
      gspec_(nfft_) {}

void SearchEngine::set_training_mf(const TrainingMF& mf) {
  require(mf.s_tI.size() == mf_len_ && mf.s_tQ.size() == mf_len_,
          "SearchEngine: training MF length mismatch");
  // One packed transform gives both filter spectra.
  auto* in = fft_.in();
  for (size_t i = 0; i < nfft_; ++i) {
    in[i] = (i < mf_len_)
                ? std::complex<float>(static_cast<float>(mf.s_tI[i]), static_cast<float>(mf.s_tQ[i]))
                : std::complex<float>(0.0f, 0.0f);
  }
  fft_.forward();
  const auto* out = fft_.out();
  for (size_t k = 0; k < nfft_; ++k) {
    const std::complex<float> xk = out[k];
    const std::complex<float> xm = std::conj(out[(nfft_ - k) & (nfft_ - 1)]);
    si_spec_[k] = 0.5f * (xk + xm);
    sq_spec_[k] = std::complex<float>(0.0f, -0.5f) * (xk - xm);
  }
}

SearchEngine::LevelScan SearchEngine::scan_level(const rvec& r, double omega, long phase_ref) {
  require(r.size() == buf_len_, "SearchEngine: buffer length mismatch");

  rvec a, b;
  downconvert(r, omega, phase_ref, a, b);

  auto* in = fft_.in();
  for (size_t i = 0; i < buf_len_; ++i) {
    in[i] = std::complex<float>(static_cast<float>(a[i]), static_cast<float>(b[i]));
  }
  std::fill(in + buf_len_, in + nfft_, std::complex<float>(0.0f, 0.0f));
  fft_.forward();
  std::copy(fft_.out(), fft_.out() + nfft_, xspec_.begin());

  // Split the packed spectrum into the spectra of a and b, then form
  // G = (FFT(a) conj(S_I) - j FFT(b) conj(S_Q)) / nfft; the inverse transform
  // is the complex correlation sequence C_a(m) - j C_b(m).
  const float invn = 1.0f / static_cast<float>(nfft_);
  for (size_t k = 0; k < nfft_; ++k) {
    const std::complex<float> xk = xspec_[k];
    const std::complex<float> xm = std::conj(xspec_[(nfft_ - k) & (nfft_ - 1)]);
    const std::complex<float> ak = 0.5f * (xk + xm);
    const std::complex<float> bk = std::complex<float>(0.0f, -0.5f) * (xk - xm);
    gspec_[k] = (ak * std::conj(si_spec_[k]) -
                 std::complex<float>(0.0f, 1.0f) * bk * std::conj(sq_spec_[k])) *
                invn;
  }
  std::copy(gspec_.begin(), gspec_.end(), fft_.in());
  fft_.inverse();

  const auto* z = fft_.out();
  LevelScan res;
  res.cells = static_cast<long>(buf_len_);
  double best = -1.0;
  long best_m = 0;
  double sum = 0.0;
  for (size_t m = 0; m < buf_len_; ++m) {
    const double z2 = static_cast<double>(z[m].real()) * z[m].real() +
                      static_cast<double>(z[m].imag()) * z[m].imag();
    sum += z2;
    if (z2 > best) {
      best = z2;
      best_m = static_cast<long>(m);
    }
  }
  res.z2_max = best;
  res.m_max = best_m;
  res.z_at_max = cdouble(z[best_m].real(), z[best_m].imag());
  res.z2_sum = sum;
  return res;
}

DetectionResult coarse_search(SearchEngine& eng, const rvec& r, int k_i, int interp,
                              int frame_len, long phase_ref) {
  const double dmax = cfo_max(interp);
  QuantizerGrid grid{0.0, dmax, next_odd_at_least(frame_len / 50.0)};
  const double omega0 = 2.0 * kPi * k_i / interp;

  DetectionResult res;
  double best = -1.0;
  for (int b = 0; b < grid.levels; ++b) {
    const double delta = grid.level(b);
    const auto scan = eng.scan_level(r, omega0 + delta, phase_ref);
    ++res.evals_coarse;
    if (scan.z2_max > best) {
      best = scan.z2_max;
      res.delta_hat_c = delta;
      res.m_peak = scan.m_max;  // refined by the fine stage
      res.z_peak = scan.z_at_max;
    }
  }
  res.omega_hat_c = omega0 + res.delta_hat_c;
  return res;
}

DetectionResult fine_search(SearchEngine& eng, const rvec& r, const DetectionResult& coarse,
                            int b_fine, double pta_threshold, int frame_len, int interp,
                            long phase_ref) {
  require(b_fine >= 3 && b_fine % 2 == 1, "fine_search: B_f must be odd and >= 3");
  const double dmax = cfo_max(interp);
  const double eps_c = 2.0 * dmax / next_odd_at_least(frame_len / 50.0);
  QuantizerGrid grid{coarse.delta_hat_c, eps_c, b_fine};

  DetectionResult res = coarse;
  double best = -1.0;
  double z2_sum = 0.0;
  long cells = 0;
  for (int b = 0; b < grid.levels; ++b) {
    const double delta = grid.level(b);
    const auto scan = eng.scan_level(r, res.omega_hat_c - coarse.delta_hat_c + delta, phase_ref);
    ++res.evals_fine;
    z2_sum += scan.z2_sum;
    cells += scan.cells;
    if (scan.z2_max > best) {
      best = scan.z2_max;
      res.delta_hat_f = delta - coarse.delta_hat_c;
      res.m_peak = scan.m_max;
      res.z_peak = scan.z_at_max;
    }
  }
  res.omega_hat_f = res.omega_hat_c + res.delta_hat_f;
  res.pta = best / (z2_sum / static_cast<double>(cells));
  res.detected = res.pta > pta_threshold;
  // Report the peak in last-training-symbol coordinates.
  res.m_peak += static_cast<long>(frame_len - 1) * interp;
  return res;
}

DetectionResult single_stage_search(SearchEngine& eng, const rvec& r, int k_i, int interp,
                                    int frame_len, double pta_threshold, long phase_ref) {
  const double dmax = cfo_max(interp);
  QuantizerGrid grid{0.0, dmax, next_odd_at_least(frame_len / 5.0)};
  const double omega0 = 2.0 * kPi * k_i / interp;

  DetectionResult res;
  double best = -1.0;
  double z2_sum = 0.0;
  long cells = 0;
  for (int b = 0; b < grid.levels; ++b) {
    const double delta = grid.level(b);
    const auto scan = eng.scan_level(r, omega0 + delta, phase_ref);
    ++res.evals_coarse;
    z2_sum += scan.z2_sum;
    cells += scan.cells;
    if (scan.z2_max > best) {
      best = scan.z2_max;
      res.delta_hat_c = delta;
      res.delta_hat_f = 0.0;
      res.m_peak = scan.m_max;
      res.z_peak = scan.z_at_max;
    }
  }
  res.omega_hat_c = omega0 + res.delta_hat_c;
  res.omega_hat_f = res.omega_hat_c;
  res.pta = best / (z2_sum / static_cast<double>(cells));
  res.detected = res.pta > pta_threshold;
  res.m_peak += static_cast<long>(frame_len - 1) * interp;
  return res;
}

cvec detection_metric_complex(const rvec& r, double omega, const TrainingMF& mf,
                              long phase_ref) {
  require(!r.empty(), "detection_metric: empty input");
  rvec a, b;
  downconvert(r, omega, phase_ref, a, b);
  // Reference path: direct correlations in double precision.
  const size_t n = r.size();
  const size_t mflen = mf.s_tI.size();
  cvec z(n, cdouble{0.0, 0.0});
  for (size_t m = 0; m < n; ++m) {
    const size_t umax = std::min(mflen, n - m);
    double ca = 0.0, cb = 0.0;
    const double* ap = a.data() + m;
    const double* bp = b.data() + m;
    for (size_t u = 0; u < umax; ++u) {
      ca += ap[u] * mf.s_tI[u];
      cb += bp[u] * mf.s_tQ[u];
    }
    z[m] = cdouble(ca, -cb);
  }
  return z;
}

rvec detection_metric(const rvec& r, double omega, const TrainingMF& mf, long phase_ref) {
  const cvec z = detection_metric_complex(r, omega, mf, phase_ref);
  rvec mag(z.size());
  for (size_t i = 0; i < z.size(); ++i) mag[i] = std::abs(z[i]);
  return mag;
}

cvec matched_filter_demod(const rvec& r, double omega_f, const RealFilter& p,
                          const RealFilter& ph, long m_peak, const FramePlan& plan,
                          int interp, long phase_ref) {
  const long frame_len = plan.frame_len;
  const long taps = static_cast<long>(p.taps.size());
  const long m0 = m_peak - (frame_len - 1) * interp;  // first-symbol lag
  require(m0 >= 0 && m_peak + taps <= static_cast<long>(r.size()),
          "matched_filter_demod: sampling indices out of buffer");

  // Downconvert only the segment the symbol correlations touch.
  const long seg_len = (frame_len - 1) * interp + taps;
  rvec a(seg_len), b(seg_len);
  cdouble w = std::polar(1.0, omega_f * static_cast<double>(m0 - phase_ref));
  const cdouble step = std::polar(1.0, omega_f);
  for (long i = 0; i < seg_len; ++i) {
    const double rr = 2.0 * r[m0 + i];
    a[i] = rr * w.real();
    b[i] = rr * w.imag();
    w *= step;
    if ((i & 0xFFF) == 0xFFF) w /= std::abs(w);
  }

  cvec x(frame_len);
  for (long k = 0; k < frame_len; ++k) {
    const long base = k * interp;
    double yi = 0.0, yq = 0.0;
    for (long j = 0; j < taps; ++j) {
      yi += a[base + j] * p.taps[j];
      yq += b[base + j] * ph.taps[j];
    }
    x[k] = cdouble(yi, -yq) / kOnePlusJ;
  }
  return x;
}

}  // namespace ssbsim
