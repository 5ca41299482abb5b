#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace vilenkin {

// Exact integer/rational arithmetic. Scales, spectral indices and interval
// measures are kept exact; only complex amplitudes live in floating point.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }
inline double to_double(const BigRat& v) { return v.convert_to<double>(); }

/// Parses a non-negative decimal integer; rejects anything else.
BigInt parse_decimal(std::string_view text);

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace vilenkin
