#include "fracdoe/rng.hpp"

#include <cmath>

namespace fracdoe {

namespace {
constexpr std::uint64_t kIncrement = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
} // namespace

std::uint64_t SplitMix64::next_u64() {
  state_ += kIncrement;
  return mix(state_);
}

double SplitMix64::next_double() {
  // 53-bit mantissa mapped to (0, 1]; never 0 so logs are safe.
  return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

double SplitMix64::next_gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = next_double();
  const double u2 = next_double();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * M_PI * u2;
  spare_ = r * std::sin(phi);
  have_spare_ = true;
  return r * std::cos(phi);
}

std::uint64_t derive_stream_seed(std::uint64_t base_seed, std::uint64_t index) {
  return mix(mix(base_seed + kIncrement * (index + 1)));
}

} // namespace fracdoe
