#include "ssbsim/framing.hpp"

#include <algorithm>
#include <numeric>

namespace ssbsim {

FramePlan make_frame_plan(int frame_len, Rng& rng) {
  require(frame_len >= 6 && frame_len % 3 == 0, "make_frame_plan: frame_len must be >= 6 and divisible by 3");
  const int ld1 = frame_len / 3;
  require(ld1 % 2 == 0 || ld1 == 2, "make_frame_plan: L_d/3 must be even for puncturing symmetry");

  FramePlan plan;
  plan.frame_len = frame_len;

  // First and last slots are always training; the other L_d1-2 training slots
  // are drawn uniformly without replacement from the interior.
  std::vector<int> interior(frame_len - 2);
  std::iota(interior.begin(), interior.end(), 1);
  const int extra = ld1 - 2;
  for (int i = 0; i < extra; ++i) {
    std::uniform_int_distribution<int> pick(i, static_cast<int>(interior.size()) - 1);
    std::swap(interior[i], interior[pick(rng)]);
  }
  plan.training_positions.assign(interior.begin(), interior.begin() + extra);
  plan.training_positions.push_back(0);
  plan.training_positions.push_back(frame_len - 1);
  std::sort(plan.training_positions.begin(), plan.training_positions.end());

  plan.training_values.resize(ld1);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < ld1; ++i) plan.training_values[i] = coin(rng) ? 1 : -1;

  // Remaining slots alternate data,parity,data,parity,... in slot order.
  std::vector<uint8_t> is_training(frame_len, 0);
  for (int pos : plan.training_positions) is_training[pos] = 1;
  plan.data_slots.reserve(ld1);
  plan.parity_slots.reserve(ld1);
  int payload_index = 0;
  for (int k = 0; k < frame_len; ++k) {
    if (is_training[k]) continue;
    if (payload_index % 2 == 0) {
      plan.data_slots.push_back(k);
    } else {
      plan.parity_slots.push_back(k);
    }
    ++payload_index;
  }
  return plan;
}

FrameSymbols build_frame(const CodedFrameBits& coded, const FramePlan& plan) {
  const size_t ld1 = static_cast<size_t>(plan.data_len());
  require(coded.data.size() == ld1 && coded.parity.size() == ld1,
          "build_frame: coded lengths do not match plan");
  FrameSymbols frame;
  frame.s.assign(plan.frame_len, 0);
  for (size_t i = 0; i < ld1; ++i) {
    frame.s[plan.training_positions[i]] = plan.training_values[i];
    frame.s[plan.data_slots[i]] = bit_to_symbol(coded.data[i]);
    frame.s[plan.parity_slots[i]] = bit_to_symbol(coded.parity[i]);
  }
  return frame;
}

rvec training_only(const FramePlan& plan) {
  rvec s(plan.frame_len, 0.0);
  for (size_t i = 0; i < plan.training_positions.size(); ++i) {
    s[plan.training_positions[i]] = plan.training_values[i];
  }
  return s;
}

ExtractedPayload extract_payload(const cvec& x, const FramePlan& plan) {
  require(x.size() == static_cast<size_t>(plan.frame_len),
          "extract_payload: sequence length does not match plan");
  const size_t ld1 = static_cast<size_t>(plan.data_len());
  ExtractedPayload out;
  out.data.resize(ld1);
  out.parity.resize(ld1);
  out.training.resize(ld1);
  for (size_t i = 0; i < ld1; ++i) {
    out.data[i] = x[plan.data_slots[i]];
    out.parity[i] = x[plan.parity_slots[i]];
    out.training[i] = x[plan.training_positions[i]];
  }
  return out;
}

}  // namespace ssbsim
