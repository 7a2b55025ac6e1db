#pragma once

#include <gmpxx.h>

#include "iset/errors.hpp"

namespace iset {

/// Default absolute tolerance for log2-space comparisons, in bits.
inline constexpr double kDefaultTolerance = 1e-9;

/// log2 of a positive big integer, computed from the bit length plus a
/// 64-bit mantissa window. Absolute error < 1e-12 for values below 2^4096.
double log2_mpz(const mpz_class& z);

/// log2 of a positive exact rational.
double log2_mpq(const mpq_class& q);

/// base^e with exact rational arithmetic.
mpq_class pow_mpq(const mpq_class& base, unsigned long e);

/// 2^x evaluated in extended precision; relative error well under 1e-12
/// for the exponents that occur here (|x| < 1024).
long double exp2_ext(double x);

/// Compensated (Kahan) accumulator for bit-space sums.
class KahanSum {
 public:
  void add(double x) {
    double y = x - compensation_;
    double t = sum_ + y;
    compensation_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace iset
