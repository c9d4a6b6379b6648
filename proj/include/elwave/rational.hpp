#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace elwave {

// Exact rational scalar used by the operator derivation and by the exact
// verification paths. Values are always kept in canonical form.
using Rational = mpq_class;

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

inline double to_double(const Rational& q) { return q.get_d(); }

// "p/q" (or plain "p" when the denominator is 1), matching the operator dump
// format.
inline std::string rat_str(const Rational& q) { return q.get_str(); }

inline RatMat rat_zeros(std::size_t rows, std::size_t cols) {
  return RatMat(rows, RatVec(cols, Rational(0)));
}

}  // namespace elwave
