#pragma once

#include <gmpxx.h>

#include <vector>

#include "ddp/quadint.hpp"

namespace ddp {

// Member of the polynomial family attached to k-regular graphs:
//   P_0 = 1,  P_1 = x + 1,  P_{i+1} = x P_i - (k-1) P_{i-1}.
// Monic of degree d with integer coefficients; P_d(k) equals the Moore bound.
struct GPoly {
  int k = 0;
  int d = 0;
  std::vector<mpz_class> coeffs;  // ascending order, size d + 1
};

GPoly build_gpoly(int k, int d);  // k >= 2, d >= 0

// Memoised build. Thread safe; concurrent first builds of the same key are
// fine. The reference stays valid for the life of the process.
const GPoly& cached_gpoly(int k, int d);

mpq_class eval_exact(const GPoly& g, const mpq_class& x);

// Horner evaluation at `precision_bits` working precision. Each of the d
// fused multiply-add steps rounds once, so the relative error against
// sum_i |c_i| |x|^i is below 2d * 2^(1 - precision_bits).
mpf_class eval_real(const GPoly& g, const mpf_class& x, mp_bitcnt_t precision_bits = 128);
mpf_class eval_real(const GPoly& g, double x, mp_bitcnt_t precision_bits = 128);

// Two-term explicit form, valid for 2 sqrt(k-1) < |x| < k:
//   ((x+2+s)/(2s)) ((x+s)/2)^d - ((x+2-s)/(2s)) ((x-s)/2)^d,
// s = sqrt(x^2 - 4(k-1)). Throws std::domain_error outside that range.
mpf_class closed_form(int k, int d, const mpf_class& x, mp_bitcnt_t precision_bits = 128);
mpf_class closed_form(int k, int d, double x, mp_bitcnt_t precision_bits = 128);

enum class RootSign { plus, minus };

// Exact value at x = +-2 sqrt(k-1), the double roots of x^2 - 4(k-1),
// as an element of Z[sqrt(k-1)]. Requires k >= 3.
QuadInt special_value(int k, int d, RootSign sign);

// Derivative of the degree-d member, evaluated through the explicit
// six-term expression. Same domain restriction as closed_form.
mpf_class derivative_eval(int k, int d, const mpf_class& x, mp_bitcnt_t precision_bits = 128);
mpf_class derivative_eval(int k, int d, double x, mp_bitcnt_t precision_bits = 128);

enum class ScanInterval { positive, negative };

// Samples `samples` equally spaced points across [2 sqrt(k-1), k] (positive)
// or [-k, -2 sqrt(k-1)] (negative, even d only) and checks strict
// monotonicity: increasing on the positive interval, decreasing on the
// negative one.
bool monotonicity_scan(int k, int d, ScanInterval which, int samples,
                       mp_bitcnt_t precision_bits = 128);

}  // namespace ddp
