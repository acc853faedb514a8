#include "ddp/arith.hpp"

#include <stdexcept>

namespace ddp {

std::string fmt_real(const mpf_class& x, int sig) {
  if (sig < 1) throw std::invalid_argument("fmt_real: sig must be positive");
  if (sgn(x) == 0) return "0";

  mp_exp_t e = 0;
  std::string digits = x.get_str(e, 10, static_cast<size_t>(sig));
  bool neg = !digits.empty() && digits[0] == '-';
  if (neg) digits.erase(0, 1);
  // value = 0.<digits> * 10^e

  std::string out;
  long exp10 = static_cast<long>(e);
  if (exp10 > 0 && exp10 <= sig) {
    // plain notation, decimal point inside or right after the digits
    if (static_cast<long>(digits.size()) <= exp10) {
      out = digits + std::string(exp10 - digits.size(), '0');
    } else {
      out = digits.substr(0, exp10) + "." + digits.substr(exp10);
    }
  } else if (exp10 <= 0 && exp10 > -4) {
    out = "0." + std::string(-exp10, '0') + digits;
  } else {
    out = digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    long se = exp10 - 1;
    out += "e";
    if (se >= 0) out += "+";
    out += std::to_string(se);
  }
  return neg ? "-" + out : out;
}

mpz_class ceil_to_int(const mpf_class& x) {
  mpf_class c(0, x.get_prec());
  mpf_ceil(c.get_mpf_t(), x.get_mpf_t());
  mpz_class z;
  mpz_set_f(z.get_mpz_t(), c.get_mpf_t());
  return z;
}

}  // namespace ddp
