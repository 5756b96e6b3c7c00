#pragma once

#include <cstddef>
#include <cstring>
#include <random>

#include "jumpdet/funcspec.hpp"

namespace testing_util {

// (pi - x)/2 on (0, 2pi) moved to [-pi, pi]: jump pi at 0.
inline constexpr const char* kSawtoothSpec =
    "domain [-pi, pi] periodic;\n"
    "piece (-pi - x)/2 on (-pi, 0);\n"
    "piece (pi - x)/2 on (0, pi)\n";

inline constexpr const char* kSquareWaveSpec =
    "domain [-pi, pi] periodic; piece -1 on (-pi, 0); piece 1 on (0, pi)";

inline constexpr const char* kSignSpec = "domain [-1, 1]; piece -1 on [-1, 0); piece 1 on (0, 1]";

inline jumpdet::PiecewiseFunction sawtooth() { return jumpdet::parse_function_spec(kSawtoothSpec); }
inline jumpdet::PiecewiseFunction square_wave() {
  return jumpdet::parse_function_spec(kSquareWaveSpec);
}
inline jumpdet::PiecewiseFunction sign() { return jumpdet::parse_function_spec(kSignSpec); }

inline bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace testing_util
