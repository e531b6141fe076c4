#include <doctest.h>

#include <cmath>
#include <random>

#include "symlap/error.hpp"
#include "symlap/laplacian.hpp"
#include "test_support.hpp"

using namespace symlap;

namespace {

SymMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const int n = static_cast<int>(rows.size());
  Matrix m(n, n);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (double x : row) m(i, j++) = x;
    ++i;
  }
  return SymMatrix::from_matrix(m);
}

Graph path3() { return Graph(3, {{0, 1}, {1, 2}}); }

}  // namespace

TEST_CASE("combinatorial and positive Laplacians") {
  CHECK(combinatorial(complete(2)) == from_rows({{1, -1}, {-1, 1}}));
  CHECK(combinatorial(path3()) == from_rows({{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}}));
  CHECK(combinatorial(complete(3)) == from_rows({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));
  CHECK(positive(complete(2)) == from_rows({{1, 1}, {1, 1}}));
  CHECK(positive(path3()) == from_rows({{1, 1, 0}, {1, 2, 1}, {0, 1, 1}}));

  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = testing::random_connected(rng, 2 + trial % 8, 0.35);
    const SymMatrix sum = combinatorial(g) + positive(g);
    SymMatrix two_deg(g.n());
    for (int i = 0; i < g.n(); ++i) two_deg.set(i, i, 2.0 * g.degree(i));
    CHECK(sum == two_deg);
    const SymMatrix l = combinatorial(g);
    for (int i = 0; i < g.n(); ++i) {
      double row = 0.0;
      for (int j = 0; j < g.n(); ++j) row += l(i, j);
      CHECK(row == 0.0);
    }
  }
}

TEST_CASE("symmetric Laplacian") {
  CHECK(max_abs_diff(symmetric(complete(2)), from_rows({{1, -1}, {-1, 1}})) < 1e-15);

  const SymMatrix p3 = symmetric(path3());
  CHECK(p3(0, 1) == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(p3(1, 2) == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(p3(0, 2) == 0.0);

  const SymMatrix s = symmetric(star(5));
  for (int leaf = 1; leaf < 5; ++leaf) CHECK(s(0, leaf) == doctest::Approx(-0.5).epsilon(1e-15));

  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = testing::random_connected(rng, 2 + trial % 9, 0.3);
    const SymMatrix l = symmetric(g);
    CHECK(max_abs_diff(l, symmetric_entrywise(g)) < 1e-14);
    CHECK(l.trace() == doctest::Approx(g.n()).epsilon(1e-14));
    for (int i = 0; i < g.n(); ++i) CHECK(l(i, i) == doctest::Approx(1.0).epsilon(1e-15));
    // sum_j L_ij sqrt(d_j) = 0
    for (int i = 0; i < g.n(); ++i) {
      double row = 0.0;
      for (int j = 0; j < g.n(); ++j) row += l(i, j) * std::sqrt(static_cast<double>(g.degree(j)));
      CHECK(std::abs(row) < 1e-13);
    }
    const Spectrum spec = jacobi_eigen(l);
    CHECK(spec.values.front() <= 2.0 + 1e-10);
    CHECK(spec.values.back() >= -1e-10);
    CHECK(std::abs(spec.values.back()) < 1e-10);
    CHECK(spec.values[spec.size() - 2] > 1e-9);
  }

  Graph isolated(3, {{0, 1}});
  CHECK_THROWS_AS(symmetric(isolated), PreconditionError);
  CHECK_THROWS_AS(symmetric_entrywise(isolated), PreconditionError);
  CHECK_THROWS_AS(positive_symmetric(isolated), PreconditionError);
}

TEST_CASE("positive symmetric Laplacian mirrors the spectrum") {
  CHECK(max_abs_diff(positive_symmetric(complete(2)), from_rows({{1, 1}, {1, 1}})) < 1e-15);

  const Spectrum k3 = jacobi_eigen(positive_symmetric(complete(3)));
  CHECK(k3.values[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(k3.values[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(k3.values[2] == doctest::Approx(0.5).epsilon(1e-12));

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = testing::random_connected(rng, 2 + trial % 8, 0.4);
    const SymMatrix sum = symmetric(g) + positive_symmetric(g);
    CHECK(max_abs_diff(sum, SymMatrix::identity(g.n()).scaled(2.0)) < 1e-14);
    Spectrum plus = jacobi_eigen(positive_symmetric(g));
    Spectrum base = jacobi_eigen(symmetric(g));
    std::vector<double> mirrored;
    for (auto it = base.values.rbegin(); it != base.values.rend(); ++it) mirrored.push_back(2.0 - *it);
    CHECK(multiset_distance(plus.values, mirrored) < 1e-10);
  }
}

TEST_CASE("oriented incidence") {
  const OrientedIncidence k2 = incidence(complete(2));
  CHECK(k2.m_matrix.rows() == 2);
  CHECK(k2.m_matrix.cols() == 1);
  CHECK(k2.m_matrix(0, 0) == 1.0);
  CHECK(k2.m_matrix(1, 0) == -1.0);
  CHECK(k2.orientation == std::vector<Arc>{{0, 1}});

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = testing::random_connected(rng, 3 + trial % 6, 0.4);
    const SymMatrix lap = combinatorial(g);
    const SymMatrix sym = symmetric(g);
    for (int k = 0; k < 20; ++k) {
      std::vector<Vertex> sources;
      std::bernoulli_distribution flip(0.5);
      for (const auto& e : g.edges()) sources.push_back(flip(rng) ? e.u : e.v);
      const OrientedIncidence inc = incidence(g, sources);
      for (int col = 0; col < g.m(); ++col) {
        int plus = 0, minus = 0;
        for (int row = 0; row < g.n(); ++row) {
          plus += inc.m_matrix(row, col) == 1.0;
          minus += inc.m_matrix(row, col) == -1.0;
        }
        CHECK(plus == 1);
        CHECK(minus == 1);
      }
      CHECK(gram_rows(inc.m_matrix) == lap);
      CHECK(max_abs_diff(gram_rows(normalized_incidence(g, inc)), sym) < 1e-14);
    }
  }

  // Both orientations of {0,1} in P_3 give the same symmetric Laplacian.
  Graph p3 = path3();
  const std::vector<Vertex> a{0, 1};
  const std::vector<Vertex> b{1, 1};
  CHECK(max_abs_diff(gram_rows(normalized_incidence(p3, incidence(p3, a))),
                     gram_rows(normalized_incidence(p3, incidence(p3, b)))) < 1e-15);

  const std::vector<Vertex> bad{2, 1};
  CHECK_THROWS_AS(incidence(p3, bad), RangeError);
  const std::vector<Vertex> short_list{0};
  CHECK_THROWS_AS(incidence(p3, short_list), DimensionError);
}

TEST_CASE("edge-doubled incidence") {
  const DoubledIncidence k2 = doubled_incidence(complete(2));
  CHECK(k2.arcs == std::vector<Arc>{{0, 1}, {1, 0}});
  CHECK(k2.s_bar(0, 0) == 1.0);
  CHECK(k2.s_bar(1, 0) == -1.0);
  CHECK(k2.s_bar(0, 1) == -1.0);
  CHECK(k2.s_bar(1, 1) == 1.0);
  CHECK(gram_rows(k2.s_bar) == from_rows({{2, -2}, {-2, 2}}));

  // P_3 by direct multiplication against the transpose.
  Graph p3 = path3();
  const DoubledIncidence d = doubled_incidence(p3);
  CHECK(d.s_bar.rows() == 3);
  CHECK(d.s_bar.cols() == 4);
  CHECK(d.arcs == std::vector<Arc>{{0, 1}, {1, 2}, {1, 0}, {2, 1}});
  for (int col = 0; col < 4; ++col) {
    double sq = 0.0;
    for (int row = 0; row < 3; ++row) sq += d.s_bar(row, col) * d.s_bar(row, col);
    CHECK(sq == doctest::Approx(1.5).epsilon(1e-15));  // 1/1 + 1/2
  }
  const Matrix prod = multiply(d.s_bar, d.s_bar.transpose());
  CHECK(max_abs_diff(prod, symmetric(p3).scaled(2.0).to_matrix()) < 1e-15);

  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = testing::random_connected(rng, 2 + trial % 9, 0.5);
    const DoubledIncidence dd = doubled_incidence(g);
    CHECK(dd.s_bar.cols() == 2 * g.m());
    CHECK(max_abs_diff(gram_rows(dd.s_bar), symmetric(g).scaled(2.0)) < 1e-12);
  }
  CHECK_THROWS_AS(doubled_incidence(Graph(3, {{0, 1}})), PreconditionError);
}
