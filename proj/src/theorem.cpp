#include "ddp/theorem.hpp"

#include <algorithm>
#include <stdexcept>

#include "ddp/arith.hpp"
#include "ddp/gpoly.hpp"

namespace ddp {

namespace {

const char* kConditionalNote =
    "high-girth case holds once the order clears a non-constructive "
    "spectral-gap threshold; every other inequality in this certificate "
    "is checked exactly";

mpz_class geometric_sum(int k, int d) {
  // ((k-1)^d - 1) / (k - 2), exact for k >= 3
  mpz_class num = ipow(k - 1, d) - 1;
  mpz_class q;
  mpz_divexact_ui(q.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k - 2));
  return q;
}

}  // namespace

bool CaseBounds::all_exceed(long c) const {
  mpq_class cq(c);
  return nonregular_ok && bipartite_ok && small_girth_bound > c &&
         high_girth_bound_pos.cmp(cq) > 0 && high_girth_bound_neg.cmp(cq) > 0;
}

CaseBounds case_bounds(int k, int d, long c) {
  if (k < 3) throw std::invalid_argument("case analysis needs degree at least 3");
  if (d < 1) throw std::invalid_argument("diameter must be at least 1");
  if (c < 1) throw std::invalid_argument("defect target must be at least 1");

  return CaseBounds{
      geometric_sum(k, d) >= c,
      ipow(k - 1, d) > c,
      mpz_class(k),
      special_value(k, d, RootSign::plus),
      special_value(k, d, RootSign::minus),
      kConditionalNote,
  };
}

MinEvenDiameter min_even_diameter(int k, long c) {
  if (k < 3) throw std::invalid_argument("theorem needs degree at least 3");
  if (c < 1) throw std::invalid_argument("defect target must be at least 1");
  if (k <= c) throw std::invalid_argument("theorem hypothesis requires k > c");

  int d = std::max(6, k) + 1;
  if (d % 2 != 0) ++d;  // smallest even d with d > 6 and d > k
  for (; d <= 10000; d += 2) {
    if (case_bounds(k, d, c).all_exceed(c)) return {d, true};
  }
  throw std::logic_error("no admissible even diameter below 10000");
}

DefectInterval generalized_moore_defect_interval(int k, int d) {
  if (k < 3) throw std::invalid_argument("interval needs degree at least 3");
  if (d < 2 || d % 2 != 0) throw std::invalid_argument("interval needs even d >= 2");

  DefectInterval out{
      special_value(k, d, RootSign::minus),
      special_value(k, d, RootSign::plus),
      0.0,
      0.0,
      remark_defect_upper_bound(k, d),
  };
  out.low_neg = out.low_neg_exact.to_real().get_d();
  out.low_pos = out.low_pos_exact.to_real().get_d();
  return out;
}

mpz_class remark_defect_upper_bound(int k, int d) {
  if (k < 3) throw std::invalid_argument("bound needs degree at least 3");
  if (d < 2) throw std::invalid_argument("bound needs diameter at least 2");
  return k * ipow(k - 1, d - 1);
}

}  // namespace ddp
