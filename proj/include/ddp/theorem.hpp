#pragma once

#include <gmpxx.h>

#include <string>

#include "ddp/quadint.hpp"

namespace ddp {

// Per-case order penalties showing a graph of defect <= c cannot arise, for
// degree k and diameter d. Every bound is exact; the high-girth case carries
// a caveat because its argument needs the order to clear a non-constructive
// spectral-gap threshold first.
struct CaseBounds {
  bool nonregular_ok;            // ((k-1)^d - 1)/(k-2) >= c
  bool bipartite_ok;             // (k-1)^d > c
  mpz_class small_girth_bound;   // defect forced by girth <= 2d - 2 (equals k)
  QuadInt high_girth_bound_pos;  // |P_d| at +2 sqrt(k-1)
  QuadInt high_girth_bound_neg;  // |P_d| at -2 sqrt(k-1), d even
  std::string conditional_note;

  bool all_exceed(long c) const;
};

// Requires k >= 3, d >= 1, c >= 1.
CaseBounds case_bounds(int k, int d, long c);

struct MinEvenDiameter {
  int d;
  bool conditional;  // always true: inherits the high-girth caveat
};

// Smallest even d with d > 6, d > k whose case bounds all strictly exceed c.
// Requires k >= 3 and c < k.
MinEvenDiameter min_even_diameter(int k, long c);

// For even d: if a k-regular graph of diameter d misses the Moore bound by
// delta with delta < low_pos, then delta > low_neg; and delta never exceeds
// high. Exact endpoints in Z[sqrt(k-1)].
struct DefectInterval {
  QuadInt low_neg_exact;  // (d+1) q^d - d q^(d-1), q = sqrt(k-1)
  QuadInt low_pos_exact;  // (d+1) q^d + d q^(d-1)
  double low_neg;
  double low_pos;
  mpz_class high;         // k (k-1)^(d-1)
};

// Requires k >= 3 and even d >= 2.
DefectInterval generalized_moore_defect_interval(int k, int d);

// The `high` endpoint on its own: k (k-1)^(d-1), valid for any d >= 1.
mpz_class remark_defect_upper_bound(int k, int d);

}  // namespace ddp
