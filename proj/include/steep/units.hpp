#pragma once

#include <cmath>

namespace steep {

// All internal quantities are linear-scale; dB conversion belongs at the
// CLI boundary and nowhere else.
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

}  // namespace steep
