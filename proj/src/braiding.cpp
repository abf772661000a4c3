#include "nichols/braiding.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace nichols {

BraidingMatrix braiding_matrix(i64 n, std::vector<std::vector<i64>> exponents) {
  if (n < 1) throw std::invalid_argument("braiding_matrix: n must be >= 1");
  int r = static_cast<int>(exponents.size());
  if (r < 1) throw std::invalid_argument("braiding_matrix: rank must be >= 1");
  for (auto& row : exponents) {
    if (static_cast<int>(row.size()) != r)
      throw std::invalid_argument("braiding_matrix: matrix must be square");
    for (auto& v : row) v = mod_reduce(v, n);
  }
  return {n, r, std::move(exponents)};
}

Gdd gdd(i64 n, std::vector<i64> diag, const std::vector<GddEdge>& edges) {
  if (n < 1) throw std::invalid_argument("gdd: n must be >= 1");
  int r = static_cast<int>(diag.size());
  if (r < 1) throw std::invalid_argument("gdd: rank must be >= 1");
  for (auto& d : diag) d = mod_reduce(d, n);
  std::vector<std::vector<i64>> edge(r, std::vector<i64>(r, 0));
  for (const auto& e : edges) {
    if (e.i < 0 || e.j < 0 || e.i >= r || e.j >= r || e.i == e.j)
      throw std::invalid_argument("gdd: edge indices out of range");
    edge[e.i][e.j] = edge[e.j][e.i] = mod_reduce(e.value, n);
  }
  return {n, r, std::move(diag), std::move(edge)};
}

Gdd gdd_of(const BraidingMatrix& b) {
  Gdd g;
  g.n = b.n;
  g.rank = b.rank;
  g.diag.resize(b.rank);
  g.edge.assign(b.rank, std::vector<i64>(b.rank, 0));
  for (int i = 0; i < b.rank; ++i) {
    g.diag[i] = b.at(i, i);
    for (int j = i + 1; j < b.rank; ++j) {
      i64 e = mod_reduce(b.at(i, j) + b.at(j, i), b.n);
      g.edge[i][j] = g.edge[j][i] = e;
    }
  }
  return g;
}

bool is_connected(const Gdd& g) {
  std::vector<char> seen(g.rank, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < g.rank; ++w) {
      if (!seen[w] && g.has_edge(v, w)) {
        seen[w] = 1;
        ++visited;
        stack.push_back(w);
      }
    }
  }
  return visited == g.rank;
}

namespace {

std::vector<i64> flatten_permuted(const BraidingMatrix& b,
                                  const std::vector<int>& perm) {
  std::vector<i64> out;
  out.reserve(static_cast<std::size_t>(b.rank) * b.rank);
  for (int i = 0; i < b.rank; ++i)
    for (int j = 0; j < b.rank; ++j) out.push_back(b.at(perm[i], perm[j]));
  return out;
}

std::vector<i64> flatten_permuted(const Gdd& g, const std::vector<int>& perm) {
  std::vector<i64> out;
  out.reserve(static_cast<std::size_t>(g.rank) * (g.rank + 1));
  for (int i = 0; i < g.rank; ++i) out.push_back(g.diag[perm[i]]);
  for (int i = 0; i < g.rank; ++i)
    for (int j = i + 1; j < g.rank; ++j) out.push_back(g.e(perm[i], perm[j]));
  return out;
}

}  // namespace

std::optional<std::vector<int>> permutation_similar(const BraidingMatrix& b1,
                                                    const BraidingMatrix& b2) {
  if (b1.n != b2.n || b1.rank != b2.rank) return std::nullopt;
  std::vector<int> sigma(b1.rank);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < b1.rank && ok; ++i)
      for (int j = 0; j < b1.rank && ok; ++j)
        if (b2.at(sigma[i], sigma[j]) != b1.at(i, j)) ok = false;
    if (ok) return sigma;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return std::nullopt;
}

BraidingMatrix canonical_form(const BraidingMatrix& b) {
  std::vector<int> perm(b.rank);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best_perm = perm;
  std::vector<i64> best = flatten_permuted(b, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    auto cand = flatten_permuted(b, perm);
    if (cand < best) {
      best = std::move(cand);
      best_perm = perm;
    }
  }
  BraidingMatrix out = b;
  for (int i = 0; i < b.rank; ++i)
    for (int j = 0; j < b.rank; ++j)
      out.exponents[i][j] = b.at(best_perm[i], best_perm[j]);
  return out;
}

Gdd canonical_gdd(const Gdd& g) {
  std::vector<int> perm(g.rank);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best_perm = perm;
  std::vector<i64> best = flatten_permuted(g, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    auto cand = flatten_permuted(g, perm);
    if (cand < best) {
      best = std::move(cand);
      best_perm = perm;
    }
  }
  Gdd out = g;
  for (int i = 0; i < g.rank; ++i) {
    out.diag[i] = g.diag[best_perm[i]];
    for (int j = 0; j < g.rank; ++j)
      out.edge[i][j] = g.edge[best_perm[i]][best_perm[j]];
  }
  return out;
}

}  // namespace nichols
