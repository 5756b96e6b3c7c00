#pragma once

#include <string>

namespace jumpdet {

/// Shortest decimal text that reads back to the same double ("nan"/"inf" for
/// non-finite values).
std::string format_double(double value);

}  // namespace jumpdet
