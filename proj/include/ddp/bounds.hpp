#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace ddp {

// Degree/diameter parameter pair. Construction validates k >= 2, d >= 1.
struct Params {
  int k;
  int d;
  Params(int degree, int diameter);
};

// Largest order a k-regular graph of diameter d can have:
// 1 + k + k(k-1) + ... + k(k-1)^(d-1).
mpz_class moore_bound(const Params& p);

// Bipartite analogue: 2d for k = 2, otherwise 2((k-1)^d - 1)/(k - 2).
mpz_class bipartite_moore_bound(const Params& p);

// Order bound for connected non-regular graphs with maximum degree k and
// diameter d: moore_bound - ((k-1)^d - 1)/(k - 2). Requires k >= 3.
mpz_class nonregular_upper_bound(const Params& p);

// Minimum order forced by girth > 2d - 1 together with a vertex of degree k.
// Requires k >= 3 and d >= 2.
mpz_class girth_order_floor(const Params& p);

// moore_bound(p) - order. Throws unless 1 <= order <= moore_bound(p).
mpz_class defect(const Params& p, const mpz_class& order);

enum class MooreClass {
  complete_graph,   // d = 1
  cycle,            // k = 2
  petersen,         // (3, 2)
  hoffman_singleton,  // (7, 2)
  open_57,          // (57, 2): existence unresolved
  none,
};

struct MooreExistence {
  MooreClass moore;
  bool bipartite_possible;  // can a bipartite Moore graph exist for these params
};

// Classification of (k, d) against the known catalogue of Moore graphs and
// the diameters admitting bipartite Moore graphs.
MooreExistence moore_existence(const Params& p);

const char* to_string(MooreClass c);

struct BoundReport {
  mpz_class moore;
  mpz_class bipartite;
  std::optional<mpz_class> nonregular;   // absent for k = 2
  std::optional<mpz_class> girth_floor;  // absent for k = 2 or d = 1
};

BoundReport bound_report(const Params& p);

}  // namespace ddp
