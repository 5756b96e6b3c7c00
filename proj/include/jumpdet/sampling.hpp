#pragma once

#include <cstddef>

#include "jumpdet/funcspec.hpp"
#include "jumpdet/variation.hpp"

namespace jumpdet {

/// Samples f over its domain for the variation functionals: the uniform grid
/// lo + i (hi - lo)/density (i = 0..density), every breakpoint as its two
/// one-sided limits (left then right), and local extrema of each piece located
/// by a sign scan of grid differences refined by golden-section search.
/// Domain ends contribute their inner one-sided limits. ArgumentError if
/// density < 2.
SampleSequence sample_for_variation(const PiecewiseFunction& f, std::size_t density);

}  // namespace jumpdet
