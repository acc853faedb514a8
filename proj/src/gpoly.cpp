#include "ddp/gpoly.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "ddp/arith.hpp"

namespace ddp {

namespace {

void check_precision(mp_bitcnt_t bits) {
  if (bits < 53) throw std::invalid_argument("precision must be at least 53 bits");
}

// Shared domain guard for the explicit form and its derivative: requires
// 2 sqrt(k-1) < |x| < k, i.e. a positive discriminant. Returns |x|.
mpf_class check_band(int k, const mpf_class& x) {
  mpf_class ax(0, x.get_prec());
  ax = abs(x);
  if (ax >= k) throw std::domain_error("|x| must be below the degree k");
  mpf_class disc(0, x.get_prec());
  disc = x * x - 4 * (k - 1);
  if (disc <= 0)
    throw std::domain_error("|x| must exceed 2*sqrt(k-1), the double root");
  return ax;
}

mpf_class pow_ui(const mpf_class& base, unsigned long e, mp_bitcnt_t bits) {
  mpf_class r(0, bits);
  mpf_pow_ui(r.get_mpf_t(), base.get_mpf_t(), e);
  return r;
}

}  // namespace

GPoly build_gpoly(int k, int d) {
  if (k < 2) throw std::invalid_argument("degree must be at least 2");
  if (d < 0) throw std::invalid_argument("polynomial index must be nonnegative");
  std::vector<mpz_class> prev{1};  // P_0 = 1
  if (d == 0) return GPoly{k, 0, std::move(prev)};
  std::vector<mpz_class> cur{1, 1};  // P_1 = x + 1
  for (int i = 1; i < d; ++i) {
    std::vector<mpz_class> next(i + 2);
    for (size_t j = 0; j < cur.size(); ++j) next[j + 1] = cur[j];
    for (size_t j = 0; j < prev.size(); ++j) next[j] -= (k - 1) * prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return GPoly{k, d, std::move(cur)};
}

const GPoly& cached_gpoly(int k, int d) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, GPoly> cache;  // node-based: refs stay valid
  std::lock_guard<std::mutex> lk(mu);
  auto key = std::make_pair(k, d);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_gpoly(k, d)).first;
  return it->second;
}

mpq_class eval_exact(const GPoly& g, const mpq_class& x) {
  mpq_class acc = 0;
  for (int j = g.d; j >= 0; --j) {
    acc = acc * x + g.coeffs[j];
  }
  return acc;
}

mpf_class eval_real(const GPoly& g, const mpf_class& x, mp_bitcnt_t bits) {
  check_precision(bits);
  mpf_class xx(x, bits);
  mpf_class acc(0, bits);
  for (int j = g.d; j >= 0; --j) {
    acc = acc * xx + g.coeffs[j];
  }
  return acc;
}

mpf_class eval_real(const GPoly& g, double x, mp_bitcnt_t bits) {
  return eval_real(g, mpf_class(x, bits), bits);
}

mpf_class closed_form(int k, int d, const mpf_class& x, mp_bitcnt_t bits) {
  check_precision(bits);
  if (k < 3) throw std::invalid_argument("explicit form needs degree at least 3");
  if (d < 0) throw std::invalid_argument("polynomial index must be nonnegative");
  mpf_class xx(x, bits);
  check_band(k, xx);

  mpf_class s(0, bits);
  s = sqrt(mpf_class(xx * xx - 4 * (k - 1)));
  mpf_class rp(0, bits), rm(0, bits);
  rp = (xx + s) / 2;
  rm = (xx - s) / 2;
  mpf_class out(0, bits);
  out = ((xx + 2 + s) / (2 * s)) * pow_ui(rp, d, bits) -
        ((xx + 2 - s) / (2 * s)) * pow_ui(rm, d, bits);
  return out;
}

mpf_class closed_form(int k, int d, double x, mp_bitcnt_t bits) {
  return closed_form(k, d, mpf_class(x, bits), bits);
}

QuadInt special_value(int k, int d, RootSign sign) {
  if (k < 3) throw std::invalid_argument("special values need degree at least 3");
  if (d < 0) throw std::invalid_argument("polynomial index must be nonnegative");
  long m = k - 1;
  if (d == 0) return QuadInt(1, 0, m);
  bool plus = sign == RootSign::plus;
  // at +2 sqrt(m): (d+1) sqrt(m)^d + d sqrt(m)^(d-1);
  // at -2 sqrt(m): (-1)^d ((d+1) sqrt(m)^d - d sqrt(m)^(d-1))
  if (d % 2 == 0) {
    mpz_class a = (d + 1) * ipow(m, d / 2);
    mpz_class b = d * ipow(m, d / 2 - 1);
    return QuadInt(a, plus ? b : mpz_class(-b), m);
  }
  mpz_class h = ipow(m, (d - 1) / 2);
  mpz_class a = d * h;
  mpz_class b = (d + 1) * h;
  return QuadInt(a, plus ? b : mpz_class(-b), m);
}

mpf_class derivative_eval(int k, int d, const mpf_class& x, mp_bitcnt_t bits) {
  check_precision(bits);
  if (k < 3) throw std::invalid_argument("explicit form needs degree at least 3");
  if (d < 1) throw std::invalid_argument("derivative needs a degree-1 member at least");
  mpf_class xx(x, bits);
  check_band(k, xx);

  mpf_class disc(0, bits);
  disc = xx * xx - 4 * (k - 1);
  mpf_class s(0, bits);
  s = sqrt(disc);
  mpf_class pm(0, bits), pp(0, bits);
  pm = xx - s;
  pp = xx + s;
  mpf_class pm_d = pow_ui(pm, d, bits);
  mpf_class pp_d = pow_ui(pp, d, bits);
  mpf_class den(0, bits);  // 2^(d+1) (x^2 - 4k + 4)
  den = pow_ui(mpf_class(2, bits), d + 1, bits) * disc;
  mpf_class den32(0, bits);  // 2^(d+1) (x^2 - 4k + 4)^(3/2)
  den32 = den * s;

  mpf_class out(0, bits);
  out = d * pm_d * (xx + 2 - s) / den
      + pm_d * pm / den
      + xx * pm_d * (xx + 2 - s) / den32
      + d * pp_d * (xx + 2 + s) / den
      + pp_d * pp / den
      - xx * pp_d * (xx + 2 + s) / den32;
  return out;
}

mpf_class derivative_eval(int k, int d, double x, mp_bitcnt_t bits) {
  return derivative_eval(k, d, mpf_class(x, bits), bits);
}

bool monotonicity_scan(int k, int d, ScanInterval which, int samples,
                       mp_bitcnt_t bits) {
  check_precision(bits);
  if (k < 3) throw std::invalid_argument("scan needs degree at least 3");
  if (d < 1) throw std::invalid_argument("scan needs a degree-1 member at least");
  if (samples < 2) throw std::invalid_argument("scan needs at least 2 samples");
  if (which == ScanInterval::negative && d % 2 != 0)
    throw std::invalid_argument("negative-interval scan is defined for even d only");

  mpf_class root(0, bits);
  root = k - 1;
  root = 2 * sqrt(root);
  mpf_class lo(0, bits), hi(0, bits);
  if (which == ScanInterval::positive) {
    lo = root;
    hi = k;
  } else {
    lo = -k;
    hi = -root;
  }
  mpf_class step(0, bits);
  step = (hi - lo) / (samples - 1);

  const GPoly& g = cached_gpoly(k, d);
  mpf_class prev(0, bits), cur(0, bits), xi(0, bits);
  for (int i = 0; i < samples; ++i) {
    xi = lo + i * step;
    cur = eval_real(g, xi, bits);
    if (i > 0) {
      bool ok = which == ScanInterval::positive ? cur > prev : cur < prev;
      if (!ok) return false;
    }
    prev = cur;
  }
  return true;
}

}  // namespace ddp
