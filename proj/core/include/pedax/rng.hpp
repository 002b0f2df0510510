#pragma once

#include <cstdint>
#include <string_view>

#include "pedax/triangle.hpp"

namespace pedax {

/// Counter-based generator: every value is a pure function of
/// (seed, stream, counter), so draws are reproducible across platforms and
/// independent of call order between streams. Uses the splitmix64 finalizer;
/// no libm involved.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();
  /// Uniform in [0, 1) with 53 random bits.
  double next_double();
  double uniform(double lo, double hi);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// FNV-1a, used to derive stream ids from check identifiers.
std::uint64_t fnv1a64(std::string_view s);

/// Random triangle with vertices in [0,10]^2, minimum side length 1 and
/// minimum angle 0.25 rad. Deterministic in (seed, index); rejection
/// resamples internally and raises SamplingFailed if the bounded retry
/// budget is exhausted.
Triangle sample_triangle(std::uint64_t seed, std::uint64_t index);

}  // namespace pedax
