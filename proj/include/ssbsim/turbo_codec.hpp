#pragma once

#include <array>

#include "ssbsim/common.hpp"
#include "ssbsim/framing.hpp"

namespace ssbsim {

// Rate-1/2 turbo code. Constituent encoder G(D) = [1, (1+D^2)/(1+D+D^2)],
// memory 2 (4-state trellis), started in the all-zero state and left
// unterminated. Parity is alternately punctured: even re-arranged slots k_r
// keep encoder-1 parity, odd slots keep encoder-2 parity.
struct TurboConfig {
  int data_len = 0;               // L_d1
  std::vector<int> interleaver;   // bijection; encoder-2 input k is data[interleaver[k]]
  int iterations = 8;
};

std::vector<int> make_random_interleaver(int len, Rng& rng);

// Parity stream of the constituent recursive systematic encoder.
bitvec rsc_encode(const bitvec& bits);

CodedFrameBits turbo_encode(const bitvec& data, const TurboConfig& cfg);

// Squared-distance sum over detected subcarriers for a candidate symbol,
// in the canonical (1+j)-divided symbol domain: sum_i |x_i - H_i*S|^2 / (2*sigma2_i).
double branch_distance2(const cvec& x, const cvec& h_hat, const rvec& sigma2_hat, int symbol);

// exp(-d^2) for the systematic bit of a trellis transition.
double compute_gamma_sys(const cvec& x_data, const cvec& h_hat, const rvec& sigma2_hat, int s_b);

// Parity branch metric: decoder 1 applies exp(-d^2) on even k_r and 1 on odd;
// decoder 2 the other way around.
double compute_gamma_par(const cvec& x_parity, const cvec& h_hat, const rvec& sigma2_hat,
                         int s_c, int k_r, int decoder);

// Per-slot branch factors for one constituent decoder, indexed by symbol
// (index 0 <-> S=+1, index 1 <-> S=-1). Values are strictly positive.
struct DecoderMetrics {
  std::vector<std::array<double, 2>> gamma_sys;
  std::vector<std::array<double, 2>> gamma_par;
};

struct BranchMetrics {
  DecoderMetrics dec1;
  DecoderMetrics dec2;
};

struct BcjrResult {
  rvec llr;        // log P(bit=0)/P(bit=1) aposteriori
  rvec extrinsic;  // llr minus apriori and systematic channel terms
};

// Forward/backward MAP recursions in the probability domain with per-step
// normalization. alpha starts certain in state 0; beta is uniform at the
// final slot (unterminated trellis).
BcjrResult bcjr_decode(const DecoderMetrics& metrics, const rvec& apriori_llr);

// Observations entering the decoder for one detected subcarrier, re-arranged
// to k_r order (framing::extract_payload output).
struct SubcarrierObservations {
  cvec data;    // L_d1 samples
  cvec parity;  // L_d1 samples, c1 at even k_r / c2 at odd k_r
};

struct SubcarrierEstimatesView {
  cvec h_hat;       // one per detected subcarrier
  rvec sigma2_hat;  // one per detected subcarrier
};

// Full iterative decoder; returns hard decisions on the L_d1 data bits from
// the deinterleaved decoder-2 aposteriori.
bitvec turbo_decode(const std::vector<SubcarrierObservations>& obs,
                    const SubcarrierEstimatesView& est, const TurboConfig& cfg);

// Assembles per-slot branch metrics for both decoders. Each slot's distances
// are shifted by their minimum before exponentiation; posteriors are
// unchanged and the metrics cannot all underflow to zero.
BranchMetrics assemble_branch_metrics(const std::vector<SubcarrierObservations>& obs,
                                      const SubcarrierEstimatesView& est,
                                      const TurboConfig& cfg);

// 4-state trellis helpers (state = (a_{k-1} << 1) | a_{k-2}).
constexpr int kTurboStates = 4;
int rsc_next_state(int state, int input);
int rsc_parity_bit(int state, int input);

}  // namespace ssbsim
