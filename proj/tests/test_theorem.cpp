#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ddp/arith.hpp"
#include "ddp/bounds.hpp"
#include "ddp/gpoly.hpp"
#include "ddp/theorem.hpp"

using namespace ddp;

TEST_CASE("case bounds for (3, 8, c=2)") {
  CaseBounds cb = case_bounds(3, 8, 2);
  CHECK(cb.nonregular_ok);
  CHECK(cb.bipartite_ok);
  CHECK(cb.small_girth_bound == 3);
  CHECK(cb.high_girth_bound_pos == QuadInt(144, 64, 2));
  CHECK(cb.high_girth_bound_neg == QuadInt(144, -64, 2));
  CHECK_FALSE(cb.conditional_note.empty());
  CHECK(cb.all_exceed(2));
  // the small-girth case gives exactly k, so c = k is never strictly beaten
  CHECK_FALSE(cb.all_exceed(3));
}

TEST_CASE("case bounds track their defining formulas") {
  for (int k : {3, 4, 7, 10}) {
    for (int d : {2, 6, 9, 14}) {
      for (long c : {1L, 2L, static_cast<long>(k - 1)}) {
        CaseBounds cb = case_bounds(k, d, c);
        mpz_class geo = (ipow(k - 1, d) - 1) / (k - 2);
        CHECK(cb.nonregular_ok == (geo >= c));
        CHECK(cb.bipartite_ok == (ipow(k - 1, d) > c));
        // bipartite case consistency with the bounds module
        Params p(k, d);
        CHECK(cb.bipartite_ok ==
              (moore_bound(p) - bipartite_moore_bound(p) > c));
        CHECK(cb.small_girth_bound == k);
        CHECK(cb.high_girth_bound_pos == special_value(k, d, RootSign::plus));
        CHECK(cb.high_girth_bound_neg == special_value(k, d, RootSign::minus));
      }
    }
  }
  CHECK_THROWS_AS(case_bounds(2, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(case_bounds(3, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(case_bounds(3, 4, 0), std::invalid_argument);
}

TEST_CASE("minimal even diameter for the pinned instances") {
  MinEvenDiameter a = min_even_diameter(3, 2);
  CHECK(a.d == 8);
  CHECK(a.conditional);

  MinEvenDiameter b = min_even_diameter(10, 9);
  CHECK(b.d == 12);
  CHECK(b.conditional);

  CHECK_THROWS_AS(min_even_diameter(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(min_even_diameter(3, 3), std::invalid_argument);  // needs k > c
  CHECK_THROWS_AS(min_even_diameter(3, 0), std::invalid_argument);
}

TEST_CASE("minimal even diameter output contract") {
  for (int k = 3; k <= 10; ++k) {
    for (long c = 1; c < k; ++c) {
      MinEvenDiameter m = min_even_diameter(k, c);
      CHECK(m.d % 2 == 0);
      CHECK(m.d > 6);
      CHECK(m.d > k);
      CHECK(m.conditional);
      CHECK(case_bounds(k, m.d, c).all_exceed(c));
    }
  }
}

TEST_CASE("dominance: once the case bounds clear c they stay cleared") {
  for (int k = 3; k <= 10; ++k) {
    for (long c = 1; c < k; ++c) {
      int d0 = min_even_diameter(k, c).d;
      for (int d = d0 + 2; d <= d0 + 20; d += 2) {
        CHECK(case_bounds(k, d, c).all_exceed(c));
      }
      // minimality: the scan start or the predecessor must fail
      int start = std::max(6, k) + 1;
      if (start % 2 != 0) ++start;
      if (d0 > start) CHECK_FALSE(case_bounds(k, d0 - 2, c).all_exceed(c));
    }
  }
}

TEST_CASE("defect interval for (3, 8)") {
  DefectInterval iv = generalized_moore_defect_interval(3, 8);
  CHECK(iv.low_neg_exact == QuadInt(144, -64, 2));
  CHECK(iv.low_pos_exact == QuadInt(144, 64, 2));
  CHECK(iv.high == 384);
  CHECK(std::fabs(iv.low_neg - 53.490332008121917) < 1e-9);
  CHECK(std::fabs(iv.low_pos - 234.50966799187808) < 1e-9);
  CHECK(iv.low_neg_exact.sign() == 1);
  CHECK(iv.low_neg_exact < iv.low_pos_exact);
}

TEST_CASE("defect interval invariants across parameters") {
  for (int k : {3, 4, 5, 7, 10}) {
    for (int d = 2; d <= 12; d += 2) {
      DefectInterval iv = generalized_moore_defect_interval(k, d);
      CHECK(iv.low_neg_exact.sign() == 1);
      CHECK(iv.low_neg_exact.cmp(iv.low_pos_exact) < 0);
      CHECK(iv.high == remark_defect_upper_bound(k, d));
      // the bipartite extremal defect (k-1)^d sits inside [low_neg, high]
      mpq_class bip(ipow(k - 1, d));
      CHECK(iv.low_neg_exact.cmp(bip) < 0);
      CHECK(ipow(k - 1, d) <= iv.high);
      // doubles agree with the exact endpoints
      CHECK(std::fabs(iv.low_neg - iv.low_neg_exact.to_real(128).get_d()) < 1e-9);
      CHECK(std::fabs(iv.low_pos - iv.low_pos_exact.to_real(128).get_d()) < 1e-9);
    }
  }
  // the second interval (low_pos, high] is nonempty on the curated ranges
  for (int k = 4; k <= 10; ++k)
    for (int d = 4; d <= 12; d += 2)
      CHECK(generalized_moore_defect_interval(k, d).low_pos_exact.cmp(
                mpq_class(remark_defect_upper_bound(k, d))) < 0);
  for (int d = 6; d <= 14; d += 2)
    CHECK(generalized_moore_defect_interval(3, d).low_pos_exact.cmp(
              mpq_class(remark_defect_upper_bound(3, d))) < 0);
  // ... and genuinely empty at the smallest case: 6 + 2 sqrt2 > 6
  DefectInterval tiny = generalized_moore_defect_interval(3, 2);
  CHECK(tiny.low_pos_exact.cmp(mpq_class(tiny.high)) > 0);

  CHECK_THROWS_AS(generalized_moore_defect_interval(3, 7), std::invalid_argument);
  CHECK_THROWS_AS(generalized_moore_defect_interval(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(generalized_moore_defect_interval(2, 4), std::invalid_argument);
}

TEST_CASE("remark upper bound values") {
  CHECK(remark_defect_upper_bound(3, 8) == 384);
  CHECK(remark_defect_upper_bound(3, 2) == 6);
  CHECK(remark_defect_upper_bound(10, 3) == 810);
  CHECK_THROWS_AS(remark_defect_upper_bound(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(remark_defect_upper_bound(2, 4), std::invalid_argument);
}
