#pragma once

#include <boost/multiprecision/float128.hpp>

#include <string>

namespace hasym {

/// Working floating-point type of the numerics layer: IEEE binary128
/// (113-bit significand, unit roundoff ~1e-34).
using Real = boost::multiprecision::float128;

inline Real real_from_string(const char* s) { return Real(s); }

/// Decimal rendering with `digits` significant digits in scientific form.
std::string format_real(const Real& x, int digits = 17);

inline double to_double(const Real& x) { return x.convert_to<double>(); }

}  // namespace hasym
