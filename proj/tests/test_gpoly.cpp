#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "ddp/arith.hpp"
#include "ddp/bounds.hpp"
#include "ddp/gpoly.hpp"

using namespace ddp;

namespace {

// independent evaluation of the recurrence inside Z[sqrt(k-1)] at
// x = sign * 2 sqrt(k-1); used as an oracle for special_value.
QuadInt eval_at_double_root(int k, int d, int sgn) {
  long m = k - 1;
  QuadInt x(0, 2 * sgn, m);
  QuadInt prev(1, 0, m);               // P_0
  QuadInt cur = x + QuadInt(1, 0, m);  // P_1
  if (d == 0) return prev;
  for (int i = 1; i < d; ++i) {
    QuadInt next = x * cur - QuadInt(m, 0, m) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

TEST_CASE("small members have the expected coefficients") {
  GPoly g0 = build_gpoly(3, 0);
  REQUIRE(g0.coeffs.size() == 1);
  CHECK(g0.coeffs[0] == 1);

  GPoly g1 = build_gpoly(5, 1);
  REQUIRE(g1.coeffs.size() == 2);
  CHECK(g1.coeffs[0] == 1);
  CHECK(g1.coeffs[1] == 1);

  GPoly g32 = build_gpoly(3, 2);  // x^2 + x - 2
  CHECK(g32.coeffs == std::vector<mpz_class>{-2, 1, 1});

  GPoly g33 = build_gpoly(3, 3);  // x^3 + x^2 - 4x - 2
  CHECK(g33.coeffs == std::vector<mpz_class>{-2, -4, 1, 1});

  GPoly g44 = build_gpoly(4, 4);  // x^4 + x^3 - 9x^2 - 6x + 9, by hand
  CHECK(g44.coeffs == std::vector<mpz_class>{9, -6, -9, 1, 1});

  CHECK_THROWS_AS(build_gpoly(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_gpoly(3, -1), std::invalid_argument);
}

TEST_CASE("degree, monicity and the moore identity") {
  for (int k = 2; k <= 12; ++k) {
    for (int d = 0; d <= 40; ++d) {
      const GPoly& g = cached_gpoly(k, d);
      REQUIRE(g.coeffs.size() == static_cast<size_t>(d) + 1);
      CHECK(g.coeffs.back() == 1);
      mpq_class at_k = eval_exact(g, mpq_class(k));
      if (d == 0) {
        CHECK(at_k == 1);
      } else {
        CHECK(at_k.get_den() == 1);
        CHECK(at_k.get_num() == moore_bound(Params(k, d)));
      }
    }
  }
}

TEST_CASE("known roots and rational evaluation") {
  CHECK(eval_exact(cached_gpoly(3, 2), mpq_class(1)) == 0);
  CHECK(eval_exact(cached_gpoly(3, 2), mpq_class(-2)) == 0);
  CHECK(eval_exact(cached_gpoly(7, 2), mpq_class(2)) == 0);
  CHECK(eval_exact(cached_gpoly(7, 2), mpq_class(-3)) == 0);
  CHECK(eval_exact(cached_gpoly(3, 3), mpq_class(-3)) == -8);
  // G_{3,2}(1/2) = 1/4 + 1/2 - 2 = -5/4
  CHECK(eval_exact(cached_gpoly(3, 2), mpq_class(1, 2)) == mpq_class(-5, 4));
}

TEST_CASE("floating evaluation tracks exact evaluation") {
  for (int k : {3, 4, 7}) {
    for (int d : {2, 5, 11, 20}) {
      const GPoly& g = cached_gpoly(k, d);
      for (int num = -20; num <= 20; num += 3) {
        mpq_class x(num, 7);
        mpq_class ex = eval_exact(g, x);
        mpf_class xf(0, 192);
        xf = mpf_class(x.get_num().get_str(), 192) / mpf_class(x.get_den().get_str(), 192);
        mpf_class fl = eval_real(g, xf, 192);
        mpf_class exf(0, 192);
        exf = mpf_class(ex.get_num().get_str(), 192) / mpf_class(ex.get_den().get_str(), 192);
        mpf_class scale(0, 192);
        scale = abs(exf) + 1;
        CHECK(abs(fl - exf) / scale < 1e-40);
      }
    }
  }
  CHECK_THROWS_AS(eval_real(cached_gpoly(3, 2), 1.0, 32), std::invalid_argument);
}

TEST_CASE("closed form agrees inside its band") {
  for (int k : {3, 5, 10}) {
    double edge = 2.0 * std::sqrt(k - 1.0);
    for (int d : {2, 7, 19}) {
      const GPoly& g = cached_gpoly(k, d);
      for (double t : {0.05, 0.35, 0.65, 0.95}) {
        double x = edge + t * (k - edge);
        if (x <= edge || x >= k) continue;
        mpf_class cf = closed_form(k, d, x, 192);
        mpf_class pv = eval_real(g, x, 192);
        mpf_class scale(0, 192);
        scale = abs(pv) + 1;
        CHECK(abs(cf - pv) / scale < 1e-30);
        if (d % 2 == 0) {
          mpf_class cfn = closed_form(k, d, -x, 192);
          mpf_class pvn = eval_real(g, -x, 192);
          CHECK(abs(cfn - pvn) / scale < 1e-30);
        }
      }
    }
  }
}

TEST_CASE("closed form rejects arguments outside the band") {
  CHECK_THROWS_AS(closed_form(3, 4, 3.0, 128), std::domain_error);    // |x| = k
  CHECK_THROWS_AS(closed_form(3, 4, 3.5, 128), std::domain_error);    // |x| > k
  CHECK_THROWS_AS(closed_form(3, 4, -4.0, 128), std::domain_error);
  CHECK_THROWS_AS(closed_form(3, 4, 0.0, 128), std::domain_error);    // inside the root disc
  // double rounding puts 2*sqrt(2.0) just above the k = 3 double root, so
  // the exactly representable edge 2*sqrt(4) = 4 of k = 5 tests rejection
  CHECK_THROWS_AS(closed_form(5, 4, 4.0, 128), std::domain_error);
  CHECK_THROWS_AS(closed_form(3, 4, 2.828, 128), std::domain_error);  // just inside the disc
  CHECK_THROWS_AS(closed_form(2, 4, 2.5, 128), std::invalid_argument);  // k too small
  CHECK_THROWS_AS(closed_form(3, 4, 2.9, 40), std::invalid_argument);   // precision too low
}

TEST_CASE("double-root values match an in-ring recurrence oracle") {
  for (int k : {3, 4, 7, 10}) {
    for (int d = 0; d <= 9; ++d) {
      CHECK(special_value(k, d, RootSign::plus) == eval_at_double_root(k, d, +1));
      CHECK(special_value(k, d, RootSign::minus) == eval_at_double_root(k, d, -1));
    }
  }
  CHECK(special_value(3, 0, RootSign::plus) == QuadInt(1, 0, 2));
  CHECK(special_value(3, 3, RootSign::plus) == QuadInt(6, 8, 2));
  CHECK(special_value(3, 4, RootSign::plus) == QuadInt(20, 8, 2));
  CHECK(special_value(3, 4, RootSign::minus) == QuadInt(20, -8, 2));
  CHECK(special_value(3, 8, RootSign::minus) == QuadInt(144, -64, 2));
  CHECK(special_value(7, 2, RootSign::plus) == QuadInt(18, 2, 6));
  CHECK_THROWS_AS(special_value(2, 3, RootSign::plus), std::invalid_argument);
}

TEST_CASE("for even d both double-root values are positive, plus above minus") {
  for (int k : {3, 4, 6, 9}) {
    for (int d = 2; d <= 16; d += 2) {
      QuadInt plus = special_value(k, d, RootSign::plus);
      QuadInt minus = special_value(k, d, RootSign::minus);
      CHECK(plus.sign() == 1);
      CHECK(minus.sign() == 1);
      CHECK(plus >= minus);
    }
  }
}

TEST_CASE("closed form approaches the double-root value as x approaches it") {
  // continuity across the removable gap, sharper with smaller eps and more bits
  mpf_class target = special_value(3, 8, RootSign::plus).to_real(320);
  double prev_err = 1e300;
  int idx = 0;
  for (double eps : {1e-4, 1e-6, 1e-8}) {
    mp_bitcnt_t bits = 192 + 64 * idx++;
    mpf_class x(0, bits);
    x = 2;
    x = 2 * sqrt(x) + eps;
    mpf_class got = closed_form(3, 8, x, bits);
    double err = std::fabs(mpf_class(got - target).get_d());
    CHECK(err < prev_err);
    prev_err = err;
  }
  // the slope at the double root is ~2.03e3, so eps = 1e-8 leaves ~2e-5
  CHECK(prev_err < 1e-4);
}

TEST_CASE("derivative matches central differences and simple calculus") {
  // d = 2: derivative of x^2 + x - 2 is 2x + 1
  mpf_class d2 = derivative_eval(3, 2, 2.9, 192);
  CHECK(std::fabs(d2.get_d() - 6.8) < 1e-6);

  for (int k : {3, 5}) {
    for (int d : {5, 8, 13}) {
      const GPoly& g = cached_gpoly(k, d);
      double edge = 2.0 * std::sqrt(k - 1.0);
      for (double t : {0.25, 0.6, 0.9}) {
        double x = edge + t * (k - edge);
        mpf_class dv = derivative_eval(k, d, x, 256);
        mpf_class h(0, 256);
        h = 1e-6;
        mpf_class xx(0, 256);
        xx = x;
        mpf_class fd = (eval_real(g, xx + h, 256) - eval_real(g, xx - h, 256)) / (2 * h);
        double scale = std::max(1.0, std::fabs(dv.get_d()));
        CHECK(std::fabs(mpf_class(dv - fd).get_d()) <= 1e-5 * scale);
      }
    }
  }

  CHECK(derivative_eval(3, 8, 2.9, 128).get_d() > 0);
  CHECK(derivative_eval(3, 8, -2.9, 128).get_d() < 0);
  CHECK_THROWS_AS(derivative_eval(3, 8, 3.0, 128), std::domain_error);
  CHECK_THROWS_AS(derivative_eval(5, 8, 4.0, 128), std::domain_error);
}

TEST_CASE("monotonicity scans") {
  CHECK(monotonicity_scan(3, 8, ScanInterval::positive, 1000));
  CHECK(monotonicity_scan(4, 10, ScanInterval::negative, 1000));
  CHECK(monotonicity_scan(3, 1, ScanInterval::positive, 10));
  CHECK(monotonicity_scan(6, 12, ScanInterval::positive, 200));
  CHECK(monotonicity_scan(6, 12, ScanInterval::negative, 200));
  CHECK_THROWS_AS(monotonicity_scan(3, 7, ScanInterval::negative, 100), std::invalid_argument);
  CHECK_THROWS_AS(monotonicity_scan(3, 8, ScanInterval::positive, 1), std::invalid_argument);
  CHECK_THROWS_AS(monotonicity_scan(2, 8, ScanInterval::positive, 100), std::invalid_argument);
}

TEST_CASE("cache returns stable, correct references under concurrency") {
  const GPoly* before = &cached_gpoly(6, 21);
  std::vector<std::thread> pool;
  std::vector<int> bad(16, 0);
  for (int t = 0; t < 16; ++t) {
    pool.emplace_back([t, &bad] {
      for (int rep = 0; rep < 50; ++rep) {
        int k = 3 + (t + rep) % 4;
        int d = 15 + (t * 7 + rep) % 9;
        const GPoly& g = cached_gpoly(k, d);
        GPoly fresh = build_gpoly(k, d);
        if (g.coeffs != fresh.coeffs || g.k != k || g.d != d) bad[t] = 1;
      }
    });
  }
  for (auto& th : pool) th.join();
  for (int flag : bad) CHECK(flag == 0);
  const GPoly* after = &cached_gpoly(6, 21);
  CHECK(before == after);
  CHECK(before->coeffs == build_gpoly(6, 21).coeffs);
}
