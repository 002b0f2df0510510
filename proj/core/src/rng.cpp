#include "pedax/rng.hpp"

#include <cmath>

namespace pedax {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

std::uint64_t splitmix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// cos(0.25 rad); angle >= 0.25 iff cos(angle) <= this.
constexpr double kCosMinAngle = 0.96891242171064975;

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(splitmix(seed + kGolden) ^ splitmix(stream * kGolden + 0x6a09e667f3bcc909ull)) {}

std::uint64_t CounterRng::next_u64() { return splitmix(splitmix(key_ + kGolden * ++counter_)); }

double CounterRng::next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double CounterRng::uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

Triangle sample_triangle(std::uint64_t seed, std::uint64_t index) {
  CounterRng rng(seed, index);
  for (int attempt = 0; attempt < 1024; ++attempt) {
    const double ax = rng.uniform(0.0, 10.0), ay = rng.uniform(0.0, 10.0);
    const double bx = rng.uniform(0.0, 10.0), by = rng.uniform(0.0, 10.0);
    const double cx = rng.uniform(0.0, 10.0), cy = rng.uniform(0.0, 10.0);

    const double ab2 = (bx - ax) * (bx - ax) + (by - ay) * (by - ay);
    const double bc2 = (cx - bx) * (cx - bx) + (cy - by) * (cy - by);
    const double ca2 = (ax - cx) * (ax - cx) + (ay - cy) * (ay - cy);
    if (ab2 < 1.0 || bc2 < 1.0 || ca2 < 1.0) continue;

    // Min-angle test on cosines (avoids acos for reproducibility).
    const double ab = std::sqrt(ab2), bc = std::sqrt(bc2), ca = std::sqrt(ca2);
    const double cos_a = (ab2 + ca2 - bc2) / (2.0 * ab * ca);
    const double cos_b = (ab2 + bc2 - ca2) / (2.0 * ab * bc);
    const double cos_c = (bc2 + ca2 - ab2) / (2.0 * bc * ca);
    if (cos_a > kCosMinAngle || cos_b > kCosMinAngle || cos_c > kCosMinAngle) continue;

    return Triangle(HPoint(ax, ay), HPoint(bx, by), HPoint(cx, cy));
  }
  raise(ErrorCode::SamplingFailed, "triangle rejection budget exhausted");
}

}  // namespace pedax
