#include "ddp/quadint.hpp"

#include <stdexcept>
#include <utility>

namespace ddp {

namespace {

// sign of c + b*sqrt(m), m >= 1, decided over the integers.
// Mixed-sign cases compare c^2 against b^2 m, which also settles ties when
// m is a perfect square.
int sign_of(const mpz_class& c, const mpz_class& b, long m) {
  int sc = sgn(c);
  int sb = sgn(b);
  if (sb == 0) return sc;
  if (sc == 0) return sb;
  if (sc == sb) return sc;
  mpz_class lhs = c * c;
  mpz_class rhs = b * b * m;
  int t = cmp(lhs, rhs);
  // c > 0 > b: positive iff c > |b| sqrt(m) iff c^2 > b^2 m
  if (sc > 0) return t;
  return -t;
}

}  // namespace

QuadInt::QuadInt(mpz_class a, mpz_class b, long m)
    : a_(std::move(a)), b_(std::move(b)), m_(m) {
  if (m_ < 1) throw std::invalid_argument("radicand must be at least 1");
}

QuadInt QuadInt::operator+(const QuadInt& o) const {
  if (m_ != o.m_) throw std::invalid_argument("mismatched radicands");
  return QuadInt(a_ + o.a_, b_ + o.b_, m_);
}

QuadInt QuadInt::operator-(const QuadInt& o) const {
  if (m_ != o.m_) throw std::invalid_argument("mismatched radicands");
  return QuadInt(a_ - o.a_, b_ - o.b_, m_);
}

QuadInt QuadInt::operator*(const QuadInt& o) const {
  if (m_ != o.m_) throw std::invalid_argument("mismatched radicands");
  return QuadInt(a_ * o.a_ + m_ * b_ * o.b_, a_ * o.b_ + b_ * o.a_, m_);
}

QuadInt QuadInt::operator-() const { return QuadInt(-a_, -b_, m_); }

bool QuadInt::operator==(const QuadInt& o) const {
  return m_ == o.m_ && a_ == o.a_ && b_ == o.b_;
}

int QuadInt::cmp(const mpq_class& r) const {
  mpq_class rc = r;
  rc.canonicalize();  // guarantees a positive denominator
  // a + b sqrt(m) - num/den = ((a den - num) + b den sqrt(m)) / den
  mpz_class c = a_ * rc.get_den() - rc.get_num();
  mpz_class bd = b_ * rc.get_den();
  return sign_of(c, bd, m_);
}

int QuadInt::cmp(const QuadInt& o) const {
  if (m_ != o.m_) throw std::invalid_argument("mismatched radicands");
  return sign_of(a_ - o.a_, b_ - o.b_, m_);
}

int QuadInt::sign() const { return sign_of(a_, b_, m_); }

mpf_class QuadInt::to_real(mp_bitcnt_t precision_bits) const {
  mpf_class root(0, precision_bits);
  root = m_;
  root = sqrt(root);
  mpf_class r(0, precision_bits);
  r = a_ + b_ * root;
  return r;
}

std::string QuadInt::str() const {
  std::string s = a_.get_str();
  if (sgn(b_) >= 0) {
    s += " + " + b_.get_str();
  } else {
    s += " - " + mpz_class(-b_).get_str();
  }
  s += "*sqrt(" + std::to_string(m_) + ")";
  return s;
}

}  // namespace ddp
