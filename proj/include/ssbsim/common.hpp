#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace ssbsim {

using cdouble = std::complex<double>;
using rvec = std::vector<double>;
using cvec = std::vector<cdouble>;
using bitvec = std::vector<uint8_t>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Canonical symbol-domain constant: matched-filter outputs are divided by
// (1+j) once, so estimators and branch metrics all operate on the model
// x = H*S + z with one-dimensional noise variance sigma_w^2.
inline constexpr cdouble kOnePlusJ{1.0, 1.0};

struct ParamError : std::invalid_argument {
  explicit ParamError(const std::string& msg) : std::invalid_argument(msg) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw ParamError(msg);
}

// splitmix64, used to derive decorrelated per-purpose / per-trial seeds from
// one master seed. Trials own their streams, so execution order is free.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline uint64_t mix_seed(uint64_t seed, uint64_t id) {
  return splitmix64(seed ^ (id * 0xD1B54A32D192ED03ull + 0x8CB92BA72F3D8DD7ull));
}

using Rng = std::mt19937_64;

}  // namespace ssbsim
