#include "ddp/bounds.hpp"

#include <stdexcept>

#include "ddp/arith.hpp"

namespace ddp {

Params::Params(int degree, int diameter) : k(degree), d(diameter) {
  if (k < 2) throw std::invalid_argument("degree must be at least 2");
  if (d < 1) throw std::invalid_argument("diameter must be at least 1");
}

mpz_class moore_bound(const Params& p) {
  // 1 + k * sum_{i=0}^{d-1} (k-1)^i
  mpz_class sum = 0;
  mpz_class term = 1;
  for (int i = 0; i < p.d; ++i) {
    sum += term;
    term *= p.k - 1;
  }
  return 1 + p.k * sum;
}

mpz_class bipartite_moore_bound(const Params& p) {
  if (p.k == 2) return 2 * p.d;
  mpz_class num = 2 * (ipow(p.k - 1, p.d) - 1);
  mpz_class q;
  mpz_divexact_ui(q.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(p.k - 2));
  return q;
}

mpz_class nonregular_upper_bound(const Params& p) {
  if (p.k < 3) throw std::invalid_argument("nonregular bound needs degree at least 3");
  mpz_class num = ipow(p.k - 1, p.d) - 1;
  mpz_class q;
  mpz_divexact_ui(q.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(p.k - 2));
  return moore_bound(p) - q;
}

mpz_class girth_order_floor(const Params& p) {
  if (p.k < 3) throw std::invalid_argument("girth floor needs degree at least 3");
  if (p.d < 2) throw std::invalid_argument("girth floor needs diameter at least 2");
  // girth >= 2d-1 makes the radius-(d-1) ball around a degree-k vertex a
  // tree: 1 + k + k(k-1) + ... + k(k-1)^(d-2) distinct vertices
  return moore_bound(Params(p.k, p.d - 1));
}

mpz_class defect(const Params& p, const mpz_class& order) {
  if (order < 1) throw std::invalid_argument("order must be positive");
  mpz_class m = moore_bound(p);
  if (order > m) throw std::invalid_argument("order exceeds the Moore bound");
  return m - order;
}

MooreExistence moore_existence(const Params& p) {
  MooreExistence e{MooreClass::none, false};
  if (p.d == 1) {
    e.moore = MooreClass::complete_graph;
  } else if (p.k == 2) {
    e.moore = MooreClass::cycle;
  } else if (p.d == 2 && p.k == 3) {
    e.moore = MooreClass::petersen;
  } else if (p.d == 2 && p.k == 7) {
    e.moore = MooreClass::hoffman_singleton;
  } else if (p.d == 2 && p.k == 57) {
    e.moore = MooreClass::open_57;
  }
  e.bipartite_possible =
      p.k == 2 || p.d == 2 || p.d == 3 || p.d == 4 || p.d == 6;
  return e;
}

const char* to_string(MooreClass c) {
  switch (c) {
    case MooreClass::complete_graph: return "complete_graph";
    case MooreClass::cycle: return "cycle";
    case MooreClass::petersen: return "petersen";
    case MooreClass::hoffman_singleton: return "hoffman_singleton";
    case MooreClass::open_57: return "open_57";
    case MooreClass::none: return "none";
  }
  return "none";
}

BoundReport bound_report(const Params& p) {
  BoundReport r;
  r.moore = moore_bound(p);
  r.bipartite = bipartite_moore_bound(p);
  if (p.k >= 3) {
    r.nonregular = nonregular_upper_bound(p);
    if (p.d >= 2) r.girth_floor = girth_order_floor(p);
  }
  return r;
}

}  // namespace ddp
