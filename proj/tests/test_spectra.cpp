#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "ddp/bounds.hpp"
#include "ddp/corpus.hpp"
#include "ddp/gpoly.hpp"
#include "ddp/parallel.hpp"
#include "ddp/spectra.hpp"
#include "ddp/walks.hpp"

using namespace ddp;

namespace {

bool cluster_matches(const SpectralReport& rep, double value, int mult, double tol) {
  for (const auto& c : rep.eigenvalues)
    if (std::fabs(c.value - value) <= tol && c.multiplicity == mult) return true;
  return false;
}

}  // namespace

TEST_CASE("petersen spectrum is 3^1 1^5 (-2)^4") {
  SpectralReport rep = eigenvalues(petersen());
  REQUIRE(rep.raw.size() == 10);
  REQUIRE(rep.eigenvalues.size() == 3);
  CHECK(cluster_matches(rep, 3.0, 1, 1e-8));
  CHECK(cluster_matches(rep, 1.0, 5, 1e-8));
  CHECK(cluster_matches(rep, -2.0, 4, 1e-8));
  CHECK(rep.residual_bound < 1e-9);
  CHECK(std::fabs(rep.lambda_second_abs - 2.0) < 1e-8);
  for (size_t i = 1; i < rep.raw.size(); ++i) CHECK(rep.raw[i - 1] >= rep.raw[i]);
}

TEST_CASE("small exact spectra") {
  SpectralReport c4 = eigenvalues(cycle_graph(4));
  REQUIRE(c4.eigenvalues.size() == 3);
  CHECK(cluster_matches(c4, 2.0, 1, 1e-9));
  CHECK(cluster_matches(c4, 0.0, 2, 1e-9));
  CHECK(cluster_matches(c4, -2.0, 1, 1e-9));

  SpectralReport b = eigenvalues(k33());
  CHECK(cluster_matches(b, 3.0, 1, 1e-9));
  CHECK(cluster_matches(b, 0.0, 4, 1e-9));
  CHECK(cluster_matches(b, -3.0, 1, 1e-9));
  CHECK(std::fabs(b.lambda_second_abs - 3.0) < 1e-9);

  SpectralReport hs = eigenvalues(hoffman_singleton());
  CHECK(cluster_matches(hs, 7.0, 1, 1e-7));
  CHECK(cluster_matches(hs, 2.0, 28, 1e-7));
  CHECK(cluster_matches(hs, -3.0, 21, 1e-7));

  CHECK_THROWS_AS(eigenvalues(petersen(), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(eigenvalues(cycle_graph(5001)), std::invalid_argument);
}

TEST_CASE("ramanujan predicate") {
  CHECK(is_ramanujan(eigenvalues(petersen()), 3));
  CHECK(is_ramanujan(eigenvalues(hoffman_singleton()), 7));
  CHECK(is_ramanujan(eigenvalues(cycle_graph(6)), 2));
  // bipartite graphs of degree >= 3 carry the -k eigenvalue, so they fail
  CHECK_FALSE(is_ramanujan(eigenvalues(heawood()), 3));
  CHECK_FALSE(is_ramanujan(eigenvalues(k33()), 3));
  CHECK_THROWS_AS(is_ramanujan(eigenvalues(petersen()), 1), std::invalid_argument);
}

TEST_CASE("trace of the polynomial image equals the eigenvalue sum") {
  struct Row {
    const char* name;
    int k, d;
  };
  for (Row row : {Row{"petersen", 3, 2}, Row{"heawood", 3, 3}, Row{"k33", 3, 2},
                  Row{"cycle(6)", 2, 3}}) {
    Graph g = corpus_graph(row.name);
    IntMatrix img = apply_gpoly_to_matrix(row.k, row.d, g);
    SpectralReport rep = eigenvalues(g);
    const GPoly& poly = cached_gpoly(row.k, row.d);
    double acc = 0;
    for (double lam : rep.raw) acc += eval_real(poly, lam, 128).get_d();
    CHECK(std::fabs(acc - img.trace().get_d()) <= g.order() * 1e-6);
  }
}

TEST_CASE("polynomial image of a moore graph is the all-ones matrix") {
  CHECK(apply_gpoly_to_matrix(3, 2, petersen()) == IntMatrix::ones(10));
  CHECK(apply_gpoly_to_matrix(7, 2, hoffman_singleton()) == IntMatrix::ones(50));
  CHECK_THROWS_AS(apply_gpoly_to_matrix(3, 2, Graph::from_edges(3, {{0, 1}, {1, 2}})),
                  std::invalid_argument);
}

TEST_CASE("polynomial image matches the walk enumeration oracle") {
  for (const char* name : {"heawood", "k33", "complete(4)", "cycle(5)"}) {
    Graph g = corpus_graph(name);
    int k = degree_profile(g).max_degree;
    for (int i = 0; i <= 4; ++i) {
      CHECK(nb_walk_counts(g, i) == apply_gpoly_to_matrix(k, i, g));
    }
  }
}

TEST_CASE("spectral defect lower bound on certified cases") {
  DefectBound pet = spectral_defect_lower_bound(petersen(), 2);
  CHECK(pet.bound == 0);

  DefectBound hw = spectral_defect_lower_bound(heawood(), 3);
  CHECK(hw.bound == 8);
  CHECK(std::fabs(hw.witness + 3.0) < 1e-6);

  DefectBound hs = spectral_defect_lower_bound(hoffman_singleton(), 2);
  CHECK(hs.bound == 0);

  // C6 with d = 3: true defect is 7 - 6 = 1 and the bound reaches it
  DefectBound c6 = spectral_defect_lower_bound(cycle_graph(6), 3);
  CHECK(c6.bound == 1);

  // soundness: never exceeds the true defect on graphs with known order
  struct Row {
    const char* name;
    int k, d;
  };
  for (Row row : {Row{"petersen", 3, 2}, Row{"heawood", 3, 3}, Row{"k33", 3, 2},
                  Row{"cycle(10)", 2, 5}, Row{"complete(6)", 5, 1}}) {
    Graph g = corpus_graph(row.name);
    mpz_class truth = moore_bound(Params(row.k, row.d)) - g.order();
    CHECK(spectral_defect_lower_bound(g, row.d).bound <= truth);
  }

  CHECK_THROWS_AS(spectral_defect_lower_bound(petersen(), 1), std::invalid_argument);
  CHECK_THROWS_AS(spectral_defect_lower_bound(Graph::from_edges(4, {{0, 1}, {2, 3}}), 1),
                  std::invalid_argument);
}

TEST_CASE("defect matrix checks") {
  DefectMatrixCheck pet = defect_matrix_check(petersen(), 2);
  CHECK(pet.delta == 0);
  CHECK(pet.ok());
  CHECK(pet.matrix_b.is_zero());

  DefectMatrixCheck hw = defect_matrix_check(heawood(), 3);
  CHECK(hw.delta == 8);
  CHECK(hw.ok());
  for (int v = 0; v < 14; ++v) {
    CHECK(hw.matrix_b.row_sum(v) == 8);
    CHECK(hw.matrix_b.col_sum(v) == 8);
  }

  DefectMatrixCheck c6 = defect_matrix_check(cycle_graph(6), 3);
  CHECK(c6.delta == 1);
  CHECK(c6.ok());

  // claiming a diameter below the true one breaks nonnegativity, with the
  // row sums still pinned at moore - n (here a negative number)
  DefectMatrixCheck wrong = defect_matrix_check(petersen(), 1);
  CHECK(wrong.delta == -6);
  CHECK(wrong.row_sums_ok);
  CHECK_FALSE(wrong.nonneg_ok);
  CHECK_FALSE(wrong.ok());
  CHECK_FALSE(wrong.detail.empty());

  CHECK_THROWS_AS(defect_matrix_check(Graph::from_edges(3, {{0, 1}, {1, 2}}), 1),
                  std::invalid_argument);
}

TEST_CASE("intmatrix algebra used by the pipeline") {
  IntMatrix a = IntMatrix::adjacency(cycle_graph(4));
  IntMatrix sq = a * a;
  CHECK(sq.at(0, 0) == 2);
  CHECK(sq.at(0, 2) == 2);
  CHECK(sq.at(0, 1) == 0);
  CHECK(sq.trace() == 8);
  IntMatrix i4 = IntMatrix::identity(4);
  CHECK((a * i4) == a);
  CHECK((a - a).is_zero());
  CHECK((a + a) == a.scaled(2));
  CHECK(a.row_sum(0) == 2);
  CHECK(a.col_sum(3) == 2);
  CHECK(a.all_nonnegative());
  CHECK_FALSE((a - IntMatrix::ones(4)).all_nonnegative());
}

TEST_CASE("results are identical under different thread caps") {
  SpectralReport base = eigenvalues(heawood());
  DefectBound base_bound = spectral_defect_lower_bound(heawood(), 3);
  for (int cap : {1, 2, 7}) {
    set_max_threads(cap);
    SpectralReport rep = eigenvalues(heawood());
    CHECK(rep.raw == base.raw);
    DefectBound b = spectral_defect_lower_bound(heawood(), 3);
    CHECK(b.bound == base_bound.bound);
    CHECK(b.witness == base_bound.witness);
    CHECK(nb_walk_counts(heawood(), 3) == nb_walk_counts(heawood(), 3));
    CHECK(girth(heawood()) == 6);
    CHECK(diameter(heawood()) == 3);
  }
  set_max_threads(0);
}
