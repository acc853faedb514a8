#include "ddp/spectra.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ddp/arith.hpp"
#include "ddp/bounds.hpp"
#include "ddp/gpoly.hpp"

namespace ddp {

SpectralReport eigenvalues(const Graph& g, double tol) {
  const int n = g.order();
  if (n > kDenseOrderCap) throw std::invalid_argument("graph too large for dense eigensolve");
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbors(u)) a(u, v) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigensolver failed to converge");

  SpectralReport rep;
  rep.tol = tol;
  rep.raw.resize(n);
  for (int i = 0; i < n; ++i) rep.raw[i] = es.eigenvalues()(n - 1 - i);

  Eigen::MatrixXd resid =
      a * es.eigenvectors() - es.eigenvectors() * es.eigenvalues().asDiagonal();
  rep.residual_bound = resid.colwise().norm().maxCoeff();

  for (double v : rep.raw) {
    if (rep.eigenvalues.empty() || rep.eigenvalues.back().value - v > tol) {
      rep.eigenvalues.push_back({v, 1});
    } else {
      auto& c = rep.eigenvalues.back();
      // running mean keeps the representative centred on the cluster
      c.value = (c.value * c.multiplicity + v) / (c.multiplicity + 1);
      c.multiplicity += 1;
    }
  }

  rep.lambda_second_abs =
      n >= 2 ? std::max(std::abs(rep.raw[1]), std::abs(rep.raw[n - 1])) : 0.0;
  return rep;
}

DefectBound spectral_defect_lower_bound(const Graph& g, int d, mp_bitcnt_t precision_bits) {
  auto prof = degree_profile(g);
  if (!prof.regular || prof.max_degree < 2)
    throw std::invalid_argument("spectral bound needs a regular graph of degree at least 2");
  if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
  auto diam = diameter(g);
  if (!diam || *diam > d)
    throw std::invalid_argument("graph diameter exceeds the claimed value");

  const int k = prof.max_degree;
  const GPoly& poly = cached_gpoly(k, d);
  SpectralReport rep = eigenvalues(g);

  // |P_d| at a perturbed eigenvalue moves by at most |P_d'| on [-k,k] times
  // the perturbation, and sum_j j |c_j| k^(j-1) dominates that derivative.
  mpz_class deriv_dom = 0;
  for (int j = 1; j <= poly.d; ++j) {
    deriv_dom += j * abs(poly.coeffs[j]) * ipow(k, j - 1);
  }
  double eps = std::max(1e-6, rep.residual_bound * deriv_dom.get_d());

  // one copy of the top eigenvalue k is exempt; every other eigenvalue
  // satisfies |P_d(lambda)| <= defect
  mpf_class best(0, precision_bits);
  best = 0;
  double witness = rep.raw.size() > 1 ? rep.raw[1] : rep.raw[0];
  bool first = true;
  for (size_t i = 1; i < rep.raw.size(); ++i) {
    mpf_class v = eval_real(poly, rep.raw[i], precision_bits);
    mpf_class score(0, precision_bits);
    score = abs(v) - eps;
    if (first || score > best) {
      best = score;
      witness = rep.raw[i];
      first = false;
    }
  }

  DefectBound out{mpz_class(0), witness};
  if (!first && sgn(best) > 0) out.bound = ceil_to_int(best);
  return out;
}

IntMatrix apply_gpoly_to_matrix(int k, int d, const Graph& g) {
  if (k < 2) throw std::invalid_argument("degree must be at least 2");
  if (d < 0) throw std::invalid_argument("polynomial index must be nonnegative");
  if (g.order() > kDenseOrderCap)
    throw std::invalid_argument("graph too large for dense polynomial evaluation");
  auto prof = degree_profile(g);
  if (!prof.regular || prof.max_degree != k)
    throw std::invalid_argument("graph must be k-regular");

  const int n = g.order();
  IntMatrix prev = IntMatrix::identity(n);
  if (d == 0) return prev;
  IntMatrix a = IntMatrix::adjacency(g);
  IntMatrix cur = a + prev;  // P_1(A) = A + I
  for (int i = 1; i < d; ++i) {
    IntMatrix next = a * cur - prev.scaled(k - 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

DefectMatrixCheck defect_matrix_check(const Graph& g, int d) {
  if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
  auto prof = degree_profile(g);
  if (!prof.regular || prof.max_degree < 2)
    throw std::invalid_argument("defect matrix needs a regular graph of degree at least 2");
  const int k = prof.max_degree;
  const int n = g.order();

  DefectMatrixCheck out;
  out.delta = moore_bound(Params(k, d)) - n;
  out.matrix_b = apply_gpoly_to_matrix(k, d, g) - IntMatrix::ones(n);

  out.row_sums_ok = true;
  for (int i = 0; i < n && out.row_sums_ok; ++i) {
    if (out.matrix_b.row_sum(i) != out.delta || out.matrix_b.col_sum(i) != out.delta)
      out.row_sums_ok = false;
  }
  out.nonneg_ok = out.matrix_b.all_nonnegative();
  if (!out.row_sums_ok) {
    out.detail = "a row or column sum differs from the defect";
  } else if (!out.nonneg_ok) {
    out.detail = "negative entry: some pair of vertices is further apart than " +
                 std::to_string(d);
  }
  return out;
}

bool is_ramanujan(const SpectralReport& rep, int k, double tol) {
  if (k < 2) throw std::invalid_argument("degree must be at least 2");
  return rep.lambda_second_abs <= 2.0 * std::sqrt(k - 1.0) + tol;
}

}  // namespace ddp
