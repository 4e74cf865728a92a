#include "ssbsim/channel.hpp"

#include <cmath>

namespace ssbsim {

ChannelRealization draw_channel(int chan_len, Rng& rng) {
  require(chan_len >= 1, "draw_channel: chan_len must be >= 1");
  ChannelRealization ch;
  ch.taps.resize(chan_len);
  std::normal_distribution<double> gauss(0.0, std::sqrt(1.0 / chan_len));
  for (double& t : ch.taps) t = gauss(rng);
  return ch;
}

ChannelRealization ideal_channel(int chan_len) {
  require(chan_len >= 1, "ideal_channel: chan_len must be >= 1");
  ChannelRealization ch;
  ch.taps.assign(chan_len, 0.0);
  ch.taps[0] = 1.0;
  ch.ideal = true;
  return ch;
}

rvec apply_channel(const rvec& s, const ChannelRealization& ch) {
  require(!s.empty(), "apply_channel: empty input");
  rvec y(s.size() + ch.taps.size() - 1, 0.0);
  for (size_t l = 0; l < ch.taps.size(); ++l) {
    const double h = ch.taps[l];
    if (h == 0.0) continue;
    for (size_t i = 0; i < s.size(); ++i) y[i + l] += h * s[i];
  }
  return y;
}

rvec add_awgn(const rvec& s, double sigma2, Rng& rng) {
  require(sigma2 >= 0.0, "add_awgn: negative variance");
  rvec y = s;
  if (sigma2 == 0.0) return y;
  std::normal_distribution<double> gauss(0.0, std::sqrt(sigma2));
  for (double& v : y) v += gauss(rng);
  return y;
}

double sigma2_from_snr(double snr_db, int n_sc) {
  require(n_sc >= 1, "sigma2_from_snr: n_sc must be >= 1");
  return static_cast<double>(n_sc) / std::pow(10.0, snr_db / 10.0);
}

cdouble channel_dtft(const ChannelRealization& ch, double omega) {
  cdouble h{0.0, 0.0};
  for (size_t l = 0; l < ch.taps.size(); ++l) {
    h += ch.taps[l] * std::polar(1.0, -omega * static_cast<double>(l));
  }
  return h;
}

}  // namespace ssbsim
