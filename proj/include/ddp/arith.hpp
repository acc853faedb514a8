#pragma once

#include <gmpxx.h>

#include <string>

namespace ddp {

inline mpz_class ipow(const mpz_class& base, unsigned long exp) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline mpz_class ipow(long base, unsigned long exp) {
  return ipow(mpz_class(base), exp);
}

// Floating-point value at a given working precision in bits.
inline mpf_class make_real(long v, mp_bitcnt_t bits) {
  mpf_class r(0, bits);
  r = v;
  return r;
}

inline mpf_class make_real(const mpz_class& v, mp_bitcnt_t bits) {
  mpf_class r(0, bits);
  r = v;
  return r;
}

// Round-trippable decimal rendering with `sig` significant digits.
// Uses plain notation for moderate exponents and scientific otherwise;
// never consults the locale.
std::string fmt_real(const mpf_class& x, int sig = 30);

// ceil(x) as an exact integer.
mpz_class ceil_to_int(const mpf_class& x);

}  // namespace ddp
