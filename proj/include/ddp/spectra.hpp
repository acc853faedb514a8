#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "ddp/graph.hpp"
#include "ddp/intmatrix.hpp"

namespace ddp {

struct EigenCluster {
  double value;      // cluster mean
  int multiplicity;
};

struct SpectralReport {
  std::vector<double> raw;               // all n eigenvalues, descending
  std::vector<EigenCluster> eigenvalues; // clustered at tolerance `tol`
  double lambda_second_abs;              // max |lambda| over raw[1..n-1]
  double residual_bound;                 // max_i ||A v_i - lambda_i v_i||_2
  double tol;
};

// Dense symmetric eigensolve of the adjacency matrix with residual
// verification. Throws on non-convergence and on order > kDenseOrderCap.
SpectralReport eigenvalues(const Graph& g, double tol = 1e-9);

struct DefectBound {
  mpz_class bound;  // certified lower bound on the defect, >= 0
  double witness;   // eigenvalue achieving it
};

// Lower bound on moore_bound(k,d) - n from the spectrum: every adjacency
// eigenvalue except one copy of k satisfies |P_d(lambda)| <= defect. The
// numeric slack eps = max(1e-6, residual_bound * B') is subtracted before
// rounding up, where B' bounds |P_d'| on [-k, k], so the result only ever
// errs low. Requires a connected regular graph with diameter <= d.
DefectBound spectral_defect_lower_bound(const Graph& g, int d,
                                        mp_bitcnt_t precision_bits = 128);

// P_d(A) over exact integers via the three-term recurrence. Requires a
// k-regular graph.
IntMatrix apply_gpoly_to_matrix(int k, int d, const Graph& g);

struct DefectMatrixCheck {
  mpz_class delta;       // moore_bound - order
  IntMatrix matrix_b;    // P_d(A) - J
  bool row_sums_ok;      // every row and column sums to delta
  bool nonneg_ok;        // no negative entry
  std::string detail;
  bool ok() const { return row_sums_ok && nonneg_ok; }
};

// Checks the defect-matrix identity P_d(A) = J + B for a connected regular
// graph of diameter d. A violation is reported through the flags (it
// falsifies the premises), not thrown.
DefectMatrixCheck defect_matrix_check(const Graph& g, int d);

// lambda_second_abs <= 2 sqrt(k-1) + tol. Note the bipartite -k eigenvalue
// participates, so bipartite graphs always fail for k >= 3.
bool is_ramanujan(const SpectralReport& rep, int k, double tol = 1e-9);

}  // namespace ddp
