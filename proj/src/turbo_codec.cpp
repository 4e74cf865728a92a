#include "ssbsim/turbo_codec.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ssbsim {

namespace {

constexpr double kGammaFloor = 1e-290;  // keeps logs finite after underflow

inline int sym_index(int symbol) { return symbol > 0 ? 0 : 1; }

// log P(0)/P(1) -> (P(0), P(1)) with clamping for large magnitudes.
inline std::array<double, 2> llr_to_prob(double llr) {
  const double l = std::clamp(llr, -600.0, 600.0);
  const double e = std::exp(l);
  return {e / (1.0 + e), 1.0 / (1.0 + e)};
}

}  // namespace

int rsc_next_state(int state, int input) {
  const int s1 = (state >> 1) & 1;
  const int s2 = state & 1;
  const int a = input ^ s1 ^ s2;  // 1/(1+D+D^2) feedback
  return (a << 1) | s1;
}

int rsc_parity_bit(int state, int input) {
  const int s1 = (state >> 1) & 1;
  const int s2 = state & 1;
  const int a = input ^ s1 ^ s2;
  return a ^ s2;  // (1+D^2) numerator on the internal sequence
}

std::vector<int> make_random_interleaver(int len, Rng& rng) {
  require(len >= 1, "make_random_interleaver: len must be >= 1");
  std::vector<int> pi(len);
  std::iota(pi.begin(), pi.end(), 0);
  for (int i = len - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(pi[i], pi[pick(rng)]);
  }
  return pi;
}

bitvec rsc_encode(const bitvec& bits) {
  require(!bits.empty(), "rsc_encode: empty input");
  bitvec parity(bits.size());
  int state = 0;
  for (size_t k = 0; k < bits.size(); ++k) {
    const int u = bits[k] & 1;
    parity[k] = static_cast<uint8_t>(rsc_parity_bit(state, u));
    state = rsc_next_state(state, u);
  }
  return parity;
}

CodedFrameBits turbo_encode(const bitvec& data, const TurboConfig& cfg) {
  require(static_cast<int>(data.size()) == cfg.data_len, "turbo_encode: data length mismatch");
  require(static_cast<int>(cfg.interleaver.size()) == cfg.data_len,
          "turbo_encode: interleaver length mismatch");

  bitvec interleaved(data.size());
  for (size_t k = 0; k < data.size(); ++k) interleaved[k] = data[cfg.interleaver[k]];

  const bitvec p1 = rsc_encode(data);
  const bitvec p2 = rsc_encode(interleaved);

  CodedFrameBits coded;
  coded.data = data;
  coded.parity.resize(data.size());
  for (size_t k = 0; k < data.size(); ++k) {
    coded.parity[k] = (k % 2 == 0) ? p1[k] : p2[k];
  }
  return coded;
}

double branch_distance2(const cvec& x, const cvec& h_hat, const rvec& sigma2_hat, int symbol) {
  require(!x.empty() && x.size() == h_hat.size() && x.size() == sigma2_hat.size(),
          "branch_distance2: per-subcarrier lists must have equal nonzero length");
  double d2 = 0.0;
  const double s = static_cast<double>(symbol);
  for (size_t i = 0; i < x.size(); ++i) {
    require(sigma2_hat[i] > 0.0, "branch_distance2: noise variance must be positive");
    d2 += std::norm(x[i] - h_hat[i] * s) / (2.0 * sigma2_hat[i]);
  }
  return d2;
}

double compute_gamma_sys(const cvec& x_data, const cvec& h_hat, const rvec& sigma2_hat, int s_b) {
  return std::exp(-branch_distance2(x_data, h_hat, sigma2_hat, s_b));
}

double compute_gamma_par(const cvec& x_parity, const cvec& h_hat, const rvec& sigma2_hat,
                         int s_c, int k_r, int decoder) {
  require(decoder == 1 || decoder == 2, "compute_gamma_par: decoder must be 1 or 2");
  const bool active = (decoder == 1) ? (k_r % 2 == 0) : (k_r % 2 == 1);
  if (!active) return 1.0;
  return std::exp(-branch_distance2(x_parity, h_hat, sigma2_hat, s_c));
}

BcjrResult bcjr_decode(const DecoderMetrics& metrics, const rvec& apriori_llr) {
  const size_t n = metrics.gamma_sys.size();
  require(n > 0 && metrics.gamma_par.size() == n && apriori_llr.size() == n,
          "bcjr_decode: metric/apriori length mismatch");

  // gamma(k, e, u) = P_apriori(u) * gamma_sys(S_b) * gamma_par(S_c)
  std::vector<std::array<double, kTurboStates * 2>> gamma(n);
  for (size_t k = 0; k < n; ++k) {
    const auto ap = llr_to_prob(apriori_llr[k]);
    for (int e = 0; e < kTurboStates; ++e) {
      for (int u = 0; u < 2; ++u) {
        const int sb = 1 - 2 * u;
        const int sc = 1 - 2 * rsc_parity_bit(e, u);
        double g = ap[u] * metrics.gamma_sys[k][sym_index(sb)] * metrics.gamma_par[k][sym_index(sc)];
        gamma[k][e * 2 + u] = std::max(g, 0.0);
      }
    }
  }

  std::vector<std::array<double, kTurboStates>> alpha(n + 1), beta(n + 1);
  alpha[0] = {1.0, 0.0, 0.0, 0.0};
  for (size_t k = 0; k < n; ++k) {
    alpha[k + 1].fill(0.0);
    for (int e = 0; e < kTurboStates; ++e) {
      const double a = alpha[k][e];
      if (a == 0.0) continue;
      for (int u = 0; u < 2; ++u) {
        alpha[k + 1][rsc_next_state(e, u)] += a * gamma[k][e * 2 + u];
      }
    }
    double norm = 0.0;
    for (double v : alpha[k + 1]) norm += v;
    require(norm > 0.0, "bcjr_decode: all-zero branch metric column");
    for (double& v : alpha[k + 1]) v /= norm;
  }

  beta[n].fill(1.0 / kTurboStates);
  for (size_t k = n; k-- > 0;) {
    beta[k].fill(0.0);
    for (int e = 0; e < kTurboStates; ++e) {
      double acc = 0.0;
      for (int u = 0; u < 2; ++u) {
        acc += gamma[k][e * 2 + u] * beta[k + 1][rsc_next_state(e, u)];
      }
      beta[k][e] = acc;
    }
    double norm = 0.0;
    for (double v : beta[k]) norm += v;
    require(norm > 0.0, "bcjr_decode: all-zero branch metric column");
    for (double& v : beta[k]) v /= norm;
  }

  BcjrResult res;
  res.llr.resize(n);
  res.extrinsic.resize(n);
  for (size_t k = 0; k < n; ++k) {
    double p[2] = {0.0, 0.0};
    for (int e = 0; e < kTurboStates; ++e) {
      for (int u = 0; u < 2; ++u) {
        p[u] += alpha[k][e] * gamma[k][e * 2 + u] * beta[k + 1][rsc_next_state(e, u)];
      }
    }
    const double p0 = std::max(p[0], kGammaFloor);
    const double p1 = std::max(p[1], kGammaFloor);
    res.llr[k] = std::log(p0) - std::log(p1);
    const double lsys = std::log(std::max(metrics.gamma_sys[k][0], kGammaFloor)) -
                        std::log(std::max(metrics.gamma_sys[k][1], kGammaFloor));
    res.extrinsic[k] = res.llr[k] - apriori_llr[k] - lsys;
  }
  return res;
}

BranchMetrics assemble_branch_metrics(const std::vector<SubcarrierObservations>& obs,
                                      const SubcarrierEstimatesView& est,
                                      const TurboConfig& cfg) {
  const size_t n = static_cast<size_t>(cfg.data_len);
  require(!obs.empty(), "assemble_branch_metrics: no detected subcarriers");
  for (const auto& o : obs) {
    require(o.data.size() == n && o.parity.size() == n,
            "assemble_branch_metrics: observation length mismatch");
  }
  require(obs.size() == est.h_hat.size() && obs.size() == est.sigma2_hat.size(),
          "assemble_branch_metrics: estimate count mismatch");

  // Distances per slot for S=+1/-1; a per-slot constant shift of d^2 rescales
  // every branch equally and leaves BCJR posteriors unchanged.
  auto shifted_exp = [](double d_plus, double d_minus) -> std::array<double, 2> {
    const double m = std::min(d_plus, d_minus);
    return {std::max(std::exp(-(d_plus - m)), kGammaFloor),
            std::max(std::exp(-(d_minus - m)), kGammaFloor)};
  };

  const size_t nsc = obs.size();
  cvec xd(nsc), xp(nsc);
  BranchMetrics bm;
  bm.dec1.gamma_sys.resize(n);
  bm.dec1.gamma_par.resize(n);
  bm.dec2.gamma_sys.resize(n);
  bm.dec2.gamma_par.resize(n);

  std::vector<std::array<double, 2>> sys_raw(n);
  for (size_t k = 0; k < n; ++k) {
    for (size_t i = 0; i < nsc; ++i) xd[i] = obs[i].data[k];
    sys_raw[k] = {branch_distance2(xd, est.h_hat, est.sigma2_hat, +1),
                  branch_distance2(xd, est.h_hat, est.sigma2_hat, -1)};
    bm.dec1.gamma_sys[k] = shifted_exp(sys_raw[k][0], sys_raw[k][1]);

    for (size_t i = 0; i < nsc; ++i) xp[i] = obs[i].parity[k];
    const double dp = branch_distance2(xp, est.h_hat, est.sigma2_hat, +1);
    const double dm = branch_distance2(xp, est.h_hat, est.sigma2_hat, -1);
    if (k % 2 == 0) {
      bm.dec1.gamma_par[k] = shifted_exp(dp, dm);
      bm.dec2.gamma_par[k] = {1.0, 1.0};
    } else {
      bm.dec1.gamma_par[k] = {1.0, 1.0};
      bm.dec2.gamma_par[k] = shifted_exp(dp, dm);
    }
  }
  for (size_t k = 0; k < n; ++k) {
    const auto& s = sys_raw[cfg.interleaver[k]];
    bm.dec2.gamma_sys[k] = shifted_exp(s[0], s[1]);
  }
  return bm;
}

bitvec turbo_decode(const std::vector<SubcarrierObservations>& obs,
                    const SubcarrierEstimatesView& est, const TurboConfig& cfg) {
  require(cfg.iterations >= 1, "turbo_decode: iterations must be >= 1");
  const size_t n = static_cast<size_t>(cfg.data_len);
  const BranchMetrics bm = assemble_branch_metrics(obs, est, cfg);

  rvec apriori1(n, 0.0), apriori2(n, 0.0);
  BcjrResult r2;
  for (int it = 0; it < cfg.iterations; ++it) {
    const BcjrResult r1 = bcjr_decode(bm.dec1, apriori1);
    for (size_t k = 0; k < n; ++k) apriori2[k] = r1.extrinsic[cfg.interleaver[k]];
    r2 = bcjr_decode(bm.dec2, apriori2);
    for (size_t k = 0; k < n; ++k) apriori1[cfg.interleaver[k]] = r2.extrinsic[k];
  }

  bitvec bits(n);
  for (size_t k = 0; k < n; ++k) {
    // decoder-2 aposteriori, deinterleaved; LLR >= 0 means bit 0 (symbol +1)
    bits[cfg.interleaver[k]] = r2.llr[k] >= 0.0 ? 0 : 1;
  }
  return bits;
}

}  // namespace ssbsim
