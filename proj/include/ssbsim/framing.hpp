#pragma once

#include "ssbsim/common.hpp"

namespace ssbsim {

// Rate-1/2 coded frame content: systematic bits plus the punctured parity
// stream (even slot index from encoder 1, odd from encoder 2).
struct CodedFrameBits {
  bitvec data;    // L_d1 bits
  bitvec parity;  // L_d1 bits, indexed by re-arranged slot k_r
};

// Placement of training/data/parity over the L_d frame slots. The frame is
// one third training (first and last slot always training, the rest at random
// interior slots), and the remaining slots alternate data,parity,... in
// increasing slot order; payload pair k_r lives at (data_slots[k_r],
// parity_slots[k_r]).
struct FramePlan {
  int frame_len = 0;                  // L_d
  std::vector<int> training_positions;  // sorted, size L_d1
  std::vector<int8_t> training_values;  // +/-1, aligned with positions
  std::vector<int> data_slots;          // size L_d1, increasing
  std::vector<int> parity_slots;        // size L_d1, increasing

  int data_len() const { return frame_len / 3; }  // L_d1
};

// BPSK frame: bit 0 -> +1, bit 1 -> -1.
struct FrameSymbols {
  std::vector<int8_t> s;  // values in {+1,-1}
};

FramePlan make_frame_plan(int frame_len, Rng& rng);

FrameSymbols build_frame(const CodedFrameBits& coded, const FramePlan& plan);

// Training-only reference sequence S_{k,t}: training values on training slots,
// zero elsewhere.
rvec training_only(const FramePlan& plan);

struct ExtractedPayload {
  cvec data;      // x at data slots, k_r order
  cvec parity;    // x at parity slots, k_r order (c1 even k_r / c2 odd k_r)
  cvec training;  // x at training slots, position order
};

ExtractedPayload extract_payload(const cvec& x, const FramePlan& plan);

inline int8_t bit_to_symbol(uint8_t bit) { return bit ? -1 : 1; }
inline uint8_t symbol_to_bit(double s) { return s >= 0.0 ? 0 : 1; }

}  // namespace ssbsim
