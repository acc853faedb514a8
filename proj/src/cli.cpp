#include "ddp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <iostream>
#include <string>

#include "ddp/arith.hpp"
#include "ddp/bounds.hpp"
#include "ddp/corpus.hpp"
#include "ddp/gpoly.hpp"
#include "ddp/graph.hpp"
#include "ddp/parallel.hpp"
#include "ddp/report.hpp"
#include "ddp/search.hpp"
#include "ddp/spectra.hpp"
#include "ddp/theorem.hpp"
#include "ddp/walks.hpp"

namespace ddp {

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_double_short(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Accepts integers, fractions "p/q" and plain decimals; all exact.
mpq_class parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty number");
  if (s.find('/') != std::string::npos) {
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
      throw std::invalid_argument("malformed rational '" + s + "'");
    if (sgn(mpq_class(q.get_den())) == 0)
      throw std::invalid_argument("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
  }
  size_t dot = s.find('.');
  if (dot == std::string::npos) return mpq_class(mpz_class(s));
  std::string ip = s.substr(0, dot);
  std::string fp = s.substr(dot + 1);
  bool neg = false;
  if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) {
    neg = ip[0] == '-';
    ip.erase(0, 1);
  }
  if (ip.empty() && fp.empty()) throw std::invalid_argument("malformed number '" + s + "'");
  for (char c : ip + fp) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("malformed number '" + s + "'");
  }
  mpz_class num(ip.empty() ? std::string("0") : ip);
  for (char c : fp) num = num * 10 + (c - '0');
  mpq_class q(num, ipow(10, fp.size()));
  q.canonicalize();
  return neg ? mpq_class(-q) : q;
}

int finish(const Report& rep, bool json) {
  std::cout << (json ? rep.to_json() : rep.to_text());
  return rep.all_passed() ? 0 : 1;
}

void add_quad_result(Report& rep, const std::string& key, const QuadInt& q,
                     mp_bitcnt_t bits) {
  rep.result(key, q.str());
  rep.result(key + "_decimal", fmt_real(q.to_real(std::max<mp_bitcnt_t>(bits, 128)), 30));
}

Graph load_graph(const std::string& name, const std::string& file) {
  if (name.empty() == file.empty())
    throw std::invalid_argument("provide exactly one of --graph or --file");
  return name.empty() ? Graph::load_file(file) : corpus_graph(name);
}

struct BoundsArgs {
  long k = 0, d = 0, order = -1;
  bool json = false;
};

int cmd_bounds(const BoundsArgs& a) {
  Params p(static_cast<int>(a.k), static_cast<int>(a.d));
  Report rep("bounds");
  rep.input("k", a.k);
  rep.input("d", a.d);

  BoundReport br = bound_report(p);
  rep.result("moore", br.moore);
  rep.result("bipartite", br.bipartite);
  if (br.nonregular) rep.result("nonregular", *br.nonregular);
  if (br.girth_floor) rep.result("girth_floor", *br.girth_floor);
  MooreExistence ex = moore_existence(p);
  rep.result("moore_class", to_string(ex.moore));
  rep.result("bipartite_moore_possible", ex.bipartite_possible);

  if (p.k >= 3) {
    rep.check("moore_minus_bipartite_identity", br.moore - br.bipartite == ipow(p.k - 1, p.d),
              "difference must equal (k-1)^d");
    if (p.d >= 2)
      rep.check("bound_ordering", br.bipartite < *br.nonregular && *br.nonregular < br.moore,
                "bipartite < nonregular < moore");
  }
  if (a.order >= 0) {
    rep.input("order", a.order);
    try {
      rep.result("defect", defect(p, mpz_class(a.order)));
      rep.check("order_within_moore", true);
    } catch (const std::invalid_argument& e) {
      rep.check("order_within_moore", false, e.what());
    }
  }
  return finish(rep, a.json);
}

struct GpolyArgs {
  long k = 0, d = 0;
  std::string x;
  bool coeffs = false;
  long scan = 0;
  long precision = 128;
  bool json = false;
};

int cmd_gpoly(const GpolyArgs& a) {
  auto bits = static_cast<mp_bitcnt_t>(a.precision);
  GPoly g = build_gpoly(static_cast<int>(a.k), static_cast<int>(a.d));
  Report rep("gpoly");
  rep.input("k", a.k);
  rep.input("d", a.d);
  if (!a.x.empty()) rep.input("x", a.x);
  rep.input("precision", a.precision);

  if (a.coeffs) {
    std::string cs = "[";
    for (size_t i = 0; i < g.coeffs.size(); ++i) {
      if (i) cs += ", ";
      cs += g.coeffs[i].get_str();
    }
    rep.result("coeffs", cs + "]");
  }
  mpq_class at_k = eval_exact(g, mpq_class(a.k));
  rep.result("value_at_k", at_k.get_str());
  if (a.d >= 1) {
    rep.check("moore_identity", at_k == moore_bound(Params(g.k, g.d)),
              "value at x = k must equal the Moore bound");
  }

  if (!a.x.empty()) {
    mpq_class xq = parse_rational(a.x);
    mpq_class exact = eval_exact(g, xq);
    rep.result("eval_exact", exact.get_str());
    mpf_class xf(0, bits);
    xf = xq;
    mpf_class real = eval_real(g, xf, bits);
    rep.result("eval_real", fmt_real(real, 30));

    mpf_class ref(0, bits), diff(0, bits), scale(0, bits), eps(0, bits);
    ref = exact;
    diff = abs(real - ref);
    scale = abs(ref);
    if (scale < 1) scale = 1;
    eps = 1;
    mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), bits - 20);
    rep.check("eval_paths_agree", diff <= eps * scale,
              "exact and floating evaluations must coincide");

    if (g.k >= 3 && g.d >= 1) {
      try {
        rep.result("derivative", fmt_real(derivative_eval(g.k, g.d, xf, bits), 30));
      } catch (const std::domain_error&) {
        // x outside (2 sqrt(k-1), k) in absolute value: derivative form undefined
      }
      try {
        rep.result("closed_form", fmt_real(closed_form(g.k, g.d, xf, bits), 30));
      } catch (const std::domain_error&) {
      }
    }
  }

  if (g.k >= 3) {
    add_quad_result(rep, "special_plus", special_value(g.k, g.d, RootSign::plus), bits);
    add_quad_result(rep, "special_minus", special_value(g.k, g.d, RootSign::minus), bits);
  }

  if (a.scan > 0 && g.k >= 3 && g.d >= 1) {
    rep.input("scan_samples", a.scan);
    rep.check("increasing_on_positive_interval",
              monotonicity_scan(g.k, g.d, ScanInterval::positive, static_cast<int>(a.scan), bits));
    if (g.d % 2 == 0)
      rep.check("decreasing_on_negative_interval",
                monotonicity_scan(g.k, g.d, ScanInterval::negative, static_cast<int>(a.scan), bits));
  }
  return finish(rep, a.json);
}

struct AnalyzeArgs {
  std::string graph, file;
  long d = -1;
  long precision = 128;
  long threads = 0;
  bool json = false;
};

int cmd_analyze(const AnalyzeArgs& a) {
  if (a.threads > 0) set_max_threads(static_cast<int>(a.threads));
  auto bits = static_cast<mp_bitcnt_t>(a.precision);
  Graph g = load_graph(a.graph, a.file);

  Report rep("analyze");
  if (!a.graph.empty()) rep.input("graph", a.graph);
  if (!a.file.empty()) rep.input("file", a.file);
  if (a.d >= 0) rep.input("d", a.d);
  rep.input("precision", a.precision);

  DegreeProfile prof = degree_profile(g);
  rep.result("order", static_cast<long>(g.order()));
  rep.result("edges", g.edge_count());
  rep.result("min_degree", static_cast<long>(prof.min_degree));
  rep.result("max_degree", static_cast<long>(prof.max_degree));
  rep.result("regular", prof.regular);
  rep.result("bipartite", is_bipartite(g));

  auto gir = girth(g);
  rep.result("girth", gir ? std::to_string(*gir) : "acyclic");
  auto diam = diameter(g);
  rep.result("diameter", diam ? std::to_string(*diam) : "infinite");

  bool connected = is_connected(g);
  rep.check("connected", connected, connected ? "" : "analysis needs one component");

  bool diam_ok = true;
  if (a.d >= 1) {
    diam_ok = connected && diam && *diam <= a.d;
    rep.check("diameter_within_claimed", diam_ok,
              diam_ok ? "" : "computed diameter exceeds the claimed value");
  }

  if (!connected) return finish(rep, a.json);
  int eff_d = a.d >= 1 ? static_cast<int>(a.d) : std::max(*diam, 1);
  rep.result("d", static_cast<long>(eff_d));

  if (prof.regular && prof.max_degree >= 2) {
    int k = prof.max_degree;
    Params p(k, eff_d);
    rep.result("moore", moore_bound(p));
    rep.result("bipartite_moore", bipartite_moore_bound(p));

    bool order_ok = mpz_class(g.order()) <= moore_bound(p);
    rep.check("order_within_moore", order_ok,
              order_ok ? "" : "order exceeds the Moore bound for the claimed diameter");
    if (order_ok) rep.result("defect", defect(p, mpz_class(g.order())));

    SpectralReport sr = eigenvalues(g);
    std::string spec;
    for (const auto& c : sr.eigenvalues) {
      if (!spec.empty()) spec += ", ";
      spec += fmt_double_short(c.value) + ":" + std::to_string(c.multiplicity);
    }
    rep.result("spectrum", spec);
    rep.result("lambda_second_abs", fmt_double(sr.lambda_second_abs));
    rep.result("residual_bound", fmt_double(sr.residual_bound));
    rep.result("ramanujan", is_ramanujan(sr, k));

    if (order_ok && diam_ok && diam && *diam <= eff_d) {
      DefectBound db = spectral_defect_lower_bound(g, eff_d, bits);
      rep.result("spectral_defect_lower_bound", db.bound);
      rep.result("witness_eigenvalue", fmt_double(db.witness));
      mpz_class delta = defect(Params(k, eff_d), mpz_class(g.order()));
      rep.check("spectral_bound_within_defect", db.bound <= delta,
                "the certified lower bound can never exceed the true defect");

      DefectMatrixCheck dm = defect_matrix_check(g, eff_d);
      rep.result("defect_matrix_delta", dm.delta);
      rep.result("defect_matrix_zero", dm.matrix_b.is_zero());
      rep.check("defect_matrix_row_sums", dm.row_sums_ok, dm.row_sums_ok ? "" : dm.detail);
      rep.check("defect_matrix_nonneg", dm.nonneg_ok, dm.nonneg_ok ? "" : dm.detail);
    }
  } else if (prof.max_degree >= 3) {
    Params p(prof.max_degree, eff_d);
    mpz_class nb = nonregular_upper_bound(p);
    rep.result("nonregular_upper_bound", nb);
    rep.check("order_within_nonregular_bound", mpz_class(g.order()) <= nb,
              "connected non-regular graphs must respect the reduced bound");
  }
  return finish(rep, a.json);
}

struct CertifyArgs {
  long k = 0, c = 0;
  bool json = false;
};

int cmd_certify(const CertifyArgs& a) {
  MinEvenDiameter med = min_even_diameter(static_cast<int>(a.k), a.c);
  CaseBounds cb = case_bounds(static_cast<int>(a.k), med.d, a.c);

  Report rep("certify");
  rep.input("k", a.k);
  rep.input("c", a.c);
  rep.result("d", static_cast<long>(med.d));
  rep.result("conditional", med.conditional);
  rep.result("nonregular_ok", cb.nonregular_ok);
  rep.result("bipartite_ok", cb.bipartite_ok);
  rep.result("small_girth_bound", cb.small_girth_bound);
  add_quad_result(rep, "high_girth_bound_pos", cb.high_girth_bound_pos, 128);
  add_quad_result(rep, "high_girth_bound_neg", cb.high_girth_bound_neg, 128);
  rep.result("conditional_note", cb.conditional_note);

  rep.check("diameter_even_and_large", med.d % 2 == 0 && med.d > 6 && med.d > a.k,
            "returned diameter must be even, above 6 and above k");
  rep.check("all_cases_exceed_defect_target", cb.all_exceed(a.c),
            "every case bound must strictly exceed c");
  return finish(rep, a.json);
}

struct IntervalArgs {
  long k = 0, d = 0;
  bool json = false;
};

int cmd_interval(const IntervalArgs& a) {
  DefectInterval di = generalized_moore_defect_interval(static_cast<int>(a.k),
                                                        static_cast<int>(a.d));
  Report rep("interval");
  rep.input("k", a.k);
  rep.input("d", a.d);
  add_quad_result(rep, "low_neg", di.low_neg_exact, 128);
  add_quad_result(rep, "low_pos", di.low_pos_exact, 128);
  rep.result("high", di.high);
  rep.result("remark_upper_bound", remark_defect_upper_bound(static_cast<int>(a.k),
                                                             static_cast<int>(a.d)));
  mpq_class high_q(di.high);
  rep.result("second_interval_nonempty", di.low_pos_exact.cmp(high_q) <= 0);

  rep.check("endpoints_positive_and_ordered",
            di.low_neg_exact.sign() > 0 && di.low_neg_exact.cmp(di.low_pos_exact) < 0,
            "0 < low_neg < low_pos must hold exactly");
  rep.check("first_interval_nonempty", di.low_neg_exact.cmp(high_q) <= 0,
            "low_neg must not exceed the integer upper endpoint");
  return finish(rep, a.json);
}

struct SearchArgs {
  long k = 0, d = 0, cap = 0;
  long long budget = kDefaultSearchBudget;
  bool no_prune = false;
  bool verify = false;
  long threads = 0;
  bool json = false;
};

int cmd_search(const SearchArgs& a) {
  if (a.threads > 0) set_max_threads(static_cast<int>(a.threads));
  SearchResult sr = max_order_search(static_cast<int>(a.k), static_cast<int>(a.d),
                                     static_cast<int>(a.cap), a.budget, !a.no_prune);

  Report rep("search");
  rep.input("k", a.k);
  rep.input("d", a.d);
  rep.input("cap", a.cap);
  rep.input("budget", static_cast<long>(a.budget));
  if (a.no_prune) rep.input("prune", "disabled");

  rep.result("best_order", static_cast<long>(sr.best_order));
  rep.result("exhaustive", sr.exhaustive);
  rep.result("nodes_explored", static_cast<long>(sr.nodes_explored));
  rep.result("witness", sr.witness.to_edge_list());

  DegreeProfile prof = degree_profile(sr.witness);
  auto diam = diameter(sr.witness);
  rep.result("witness_max_degree", static_cast<long>(prof.max_degree));
  rep.result("witness_diameter", diam ? std::to_string(*diam) : "infinite");
  rep.check("witness_valid",
            sr.witness.order() == sr.best_order && prof.max_degree <= a.k && diam &&
                *diam <= a.d,
            "witness must attain best_order under the degree and diameter caps");
  rep.check("best_within_moore",
            mpz_class(sr.best_order) <= moore_bound(Params(static_cast<int>(a.k),
                                                           static_cast<int>(a.d))),
            "no order may exceed the Moore bound");
  if (a.verify) {
    rep.check("extremal_confirmed", verify_extremal(static_cast<int>(a.k),
                                                    static_cast<int>(a.d)),
              "search must confirm the recorded extremal order");
  }
  return finish(rep, a.json);
}

struct OracleArgs {
  std::string graph, file;
  long length = 0;
  long threads = 0;
  bool json = false;
};

int cmd_oracle(const OracleArgs& a) {
  if (a.threads > 0) set_max_threads(static_cast<int>(a.threads));
  Graph g = load_graph(a.graph, a.file);

  Report rep("oracle");
  if (!a.graph.empty()) rep.input("graph", a.graph);
  if (!a.file.empty()) rep.input("file", a.file);
  rep.input("length", a.length);

  IntMatrix walks = nb_walk_counts(g, static_cast<int>(a.length));
  int k = degree_profile(g).max_degree;
  IntMatrix poly = apply_gpoly_to_matrix(k, static_cast<int>(a.length), g);

  rep.result("order", static_cast<long>(g.order()));
  rep.result("degree", static_cast<long>(k));
  rep.result("matrices_equal", walks == poly);
  rep.check("walk_count_identity", walks == poly,
            "cumulative non-backtracking walk counts must match the polynomial of A");
  return finish(rep, a.json);
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"exact bounds, certificates and searches for the degree/diameter problem"};
  app.require_subcommand(1);

  int code = 0;

  BoundsArgs ba;
  auto* b = app.add_subcommand("bounds", "Moore-type order bounds for (k, d)");
  b->add_option("-k,--degree", ba.k, "vertex degree (>= 2)")->required();
  b->add_option("-d,--diameter", ba.d, "diameter (>= 1)")->required();
  b->add_option("-n,--order", ba.order, "report the defect of a graph of this order");
  b->add_flag("-j,--json", ba.json, "machine-readable output");
  b->callback([&] { code = cmd_bounds(ba); });

  GpolyArgs ga;
  auto* gp = app.add_subcommand("gpoly", "the polynomial family attached to (k, d)");
  gp->add_option("-k,--degree", ga.k, "vertex degree (>= 2)")->required();
  gp->add_option("-d,--diameter", ga.d, "polynomial index (>= 0)")->required();
  gp->add_option("-x,--at", ga.x, "evaluate at this integer, fraction or decimal");
  gp->add_flag("-C,--coeffs", ga.coeffs, "list the exact coefficients");
  gp->add_option("-s,--scan", ga.scan, "monotonicity scan with this many samples");
  gp->add_option("-p,--precision", ga.precision, "working precision in bits (>= 53)");
  gp->add_flag("-j,--json", ga.json, "machine-readable output");
  gp->callback([&] { code = cmd_gpoly(ga); });

  AnalyzeArgs aa;
  auto* an = app.add_subcommand("analyze", "full certificate for a graph");
  an->add_option("-g,--graph", aa.graph, "corpus graph name");
  an->add_option("-f,--file", aa.file, "edge-list file");
  an->add_option("-d,--diameter", aa.d, "claimed diameter (default: computed)");
  an->add_option("-p,--precision", aa.precision, "working precision in bits (>= 53)");
  an->add_option("-t,--threads", aa.threads, "worker thread cap");
  an->add_flag("-j,--json", aa.json, "machine-readable output");
  an->callback([&] { code = cmd_analyze(aa); });

  CertifyArgs ca;
  auto* ce = app.add_subcommand("certify", "minimal even diameter with all case bounds above c");
  ce->add_option("-k,--degree", ca.k, "vertex degree (>= 3)")->required();
  ce->add_option("-c,--defect", ca.c, "defect target (1 <= c < k)")->required();
  ce->add_flag("-j,--json", ca.json, "machine-readable output");
  ce->callback([&] { code = cmd_certify(ca); });

  IntervalArgs ia;
  auto* iv = app.add_subcommand("interval", "defect interval for generalized Moore graphs");
  iv->add_option("-k,--degree", ia.k, "vertex degree (>= 3)")->required();
  iv->add_option("-d,--diameter", ia.d, "even diameter (>= 2)")->required();
  iv->add_flag("-j,--json", ia.json, "machine-readable output");
  iv->callback([&] { code = cmd_interval(ia); });

  SearchArgs sa;
  auto* se = app.add_subcommand("search", "exhaustive small-order search for n(k, d)");
  se->add_option("-k,--degree", sa.k, "vertex degree (2 or 3)")->required();
  se->add_option("-d,--diameter", sa.d, "diameter (>= 1)")->required();
  se->add_option("-n,--cap", sa.cap, "largest order to try (<= 12)")->required();
  se->add_option("-b,--budget", sa.budget, "search node budget");
  se->add_flag("--no-prune", sa.no_prune, "disable feasibility pruning (validation mode)");
  se->add_flag("-V,--verify", sa.verify, "also confirm the recorded extremal order");
  se->add_option("-t,--threads", sa.threads, "worker thread cap");
  se->add_flag("-j,--json", sa.json, "machine-readable output");
  se->callback([&] { code = cmd_search(sa); });

  OracleArgs oa;
  auto* orc = app.add_subcommand("oracle", "walk-count identity check");
  orc->add_option("-g,--graph", oa.graph, "corpus graph name");
  orc->add_option("-f,--file", oa.file, "edge-list file");
  orc->add_option("-i,--length", oa.length, "walk length cap (0..6)")->required();
  orc->add_option("-t,--threads", oa.threads, "worker thread cap");
  orc->add_flag("-j,--json", oa.json, "machine-readable output");
  orc->callback([&] { code = cmd_oracle(oa); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return code;
}

}  // namespace ddp
