#pragma once

#include <gmpxx.h>

#include <string>

namespace ddp {

// Exact element a + b*sqrt(m) of the ring Z[sqrt(m)], m >= 1.
// Comparisons are decided by sign analysis on integers only, so they stay
// exact even when m is a perfect square or the operands are huge.
class QuadInt {
 public:
  QuadInt(mpz_class a, mpz_class b, long m);

  const mpz_class& a() const { return a_; }
  const mpz_class& b() const { return b_; }
  long m() const { return m_; }

  QuadInt operator+(const QuadInt& o) const;
  QuadInt operator-(const QuadInt& o) const;
  QuadInt operator*(const QuadInt& o) const;
  QuadInt operator-() const;

  bool operator==(const QuadInt& o) const;
  bool operator!=(const QuadInt& o) const { return !(*this == o); }

  // Sign of (*this - r), exactly.
  int cmp(const mpq_class& r) const;
  int cmp(const QuadInt& o) const;  // requires matching m

  bool operator<(const QuadInt& o) const { return cmp(o) < 0; }
  bool operator>(const QuadInt& o) const { return cmp(o) > 0; }
  bool operator<=(const QuadInt& o) const { return cmp(o) <= 0; }
  bool operator>=(const QuadInt& o) const { return cmp(o) >= 0; }

  int sign() const;

  mpf_class to_real(mp_bitcnt_t precision_bits = 128) const;

  std::string str() const;  // "a + b*sqrt(m)"

 private:
  mpz_class a_;
  mpz_class b_;
  long m_;
};

}  // namespace ddp
