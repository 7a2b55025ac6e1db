#include "iset/numeric.hpp"

#include <cmath>

namespace iset {

double log2_mpz(const mpz_class& z) {
  if (z <= 0) throw DomainError("log2 of a non-positive integer");
  std::size_t bits = mpz_sizeinbase(z.get_mpz_t(), 2);
  if (bits <= 64) {
    return static_cast<double>(std::log2(static_cast<long double>(z.get_ui())));
  }
  mpz_class window = z >> (bits - 64);
  long double mantissa = static_cast<long double>(window.get_ui());
  return static_cast<double>(std::log2(mantissa) + static_cast<long double>(bits - 64));
}

double log2_mpq(const mpq_class& q) {
  if (q <= 0) throw DomainError("log2 of a non-positive rational");
  return log2_mpz(q.get_num()) - log2_mpz(q.get_den());
}

mpq_class pow_mpq(const mpq_class& base, unsigned long e) {
  mpq_class result;
  mpz_pow_ui(mpq_numref(result.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
  mpz_pow_ui(mpq_denref(result.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
  return result;  // coprime numerator/denominator stay coprime under powers
}

long double exp2_ext(double x) { return std::exp2(static_cast<long double>(x)); }

}  // namespace iset
