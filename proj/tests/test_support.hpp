#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "symlap/graph.hpp"
#include "symlap/linalg.hpp"

namespace symlap::testing {

/// Random connected graph on n vertices: a random spanning tree plus each
/// remaining pair with probability `density`.
inline Graph random_connected(std::mt19937_64& rng, int n, double density) {
  std::vector<Edge> edges;
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<char> used(static_cast<std::size_t>(n) * n, 0);
  for (int k = 1; k < n; ++k) {
    std::uniform_int_distribution<int> pick(0, k - 1);
    int a = order[static_cast<std::size_t>(k)];
    int b = order[static_cast<std::size_t>(pick(rng))];
    edges.push_back({std::min(a, b), std::max(a, b)});
    used[static_cast<std::size_t>(a) * n + b] = used[static_cast<std::size_t>(b) * n + a] = 1;
  }
  std::bernoulli_distribution coin(density);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!used[static_cast<std::size_t>(i) * n + j] && coin(rng)) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

/// Random probability vector of length n (normalized exponentials, with an
/// occasional exact zero).
inline std::vector<double> random_probability(std::mt19937_64& rng, int n) {
  std::exponential_distribution<double> expo(1.0);
  std::bernoulli_distribution zero(0.1);
  std::vector<double> v(static_cast<std::size_t>(n));
  double total = 0.0;
  for (auto& x : v) {
    x = zero(rng) ? 0.0 : expo(rng);
    total += x;
  }
  if (total == 0.0) {
    v[0] = 1.0;
    total = 1.0;
  }
  for (auto& x : v) x /= total;
  return v;
}

/// Random orthogonal matrix as a product of Householder reflections.
inline Matrix random_orthogonal(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> gauss;
  Matrix q(n, n);
  for (int i = 0; i < n; ++i) q(i, i) = 1.0;
  for (int r = 0; r < n; ++r) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = gauss(rng);
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    for (auto& x : v) x /= norm;
    // q <- (I - 2 v v^T) q
    Matrix h(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        h(i, j) = (i == j ? 1.0 : 0.0) - 2.0 * v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
    q = multiply(h, q);
  }
  return q;
}

}  // namespace symlap::testing
