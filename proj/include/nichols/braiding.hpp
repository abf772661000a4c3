#pragma once

#include <optional>
#include <vector>

#include "nichols/common.hpp"

namespace nichols {

/// A root of unity q = omega^a for one fixed abstract primitive n-th root
/// omega.  Everything downstream works on exponents; no complex numbers.
struct RootExp {
  i64 exp = 0;
  i64 n = 1;

  i64 order() const { return order_of_exponent(exp, n); }
  bool is_one() const { return mod_reduce(exp, n) == 0; }
  bool operator==(const RootExp&) const = default;
};

/// Braiding matrix of a diagonal braided vector space, entries stored as
/// exponents a_ij in [0, n) with q_ij = omega^{a_ij}.
struct BraidingMatrix {
  i64 n = 1;
  int rank = 1;
  std::vector<std::vector<i64>> exponents;

  i64 at(int i, int j) const { return exponents[i][j]; }
  bool operator==(const BraidingMatrix&) const = default;
};

/// Validating constructor: entries (possibly negative) are reduced mod n.
BraidingMatrix braiding_matrix(i64 n, std::vector<std::vector<i64>> exponents);

/// Generalized Dynkin diagram data: vertex labels d_i = a_ii and symmetrized
/// edge labels e_ij = a_ij + a_ji, with an edge present exactly when
/// e_ij != 0.  The edge table is kept full (symmetric, zero diagonal).
struct Gdd {
  i64 n = 1;
  int rank = 1;
  std::vector<i64> diag;
  std::vector<std::vector<i64>> edge;

  i64 e(int i, int j) const { return edge[i][j]; }
  bool has_edge(int i, int j) const { return edge[i][j] != 0; }
  bool operator==(const Gdd&) const = default;
};

struct GddEdge {
  int i;
  int j;
  i64 value;
};

/// Validating constructor from vertex labels and an edge list; pairs not
/// listed get no edge.
Gdd gdd(i64 n, std::vector<i64> diag, const std::vector<GddEdge>& edges);

Gdd gdd_of(const BraidingMatrix& b);

bool is_connected(const Gdd& g);

/// The degree lattice Z^r with the bilinear form chi0(e_i, e_j) = q_ij;
/// a thin view over the braiding matrix.
struct DegreeLattice {
  BraidingMatrix chi;

  int rank() const { return chi.rank; }
  RootExp chi0(int i, int j) const { return {chi.at(i, j), chi.n}; }
};

/// A permutation sigma with b2[sigma(i)][sigma(j)] == b1[i][j] for all i, j,
/// if any exists.
std::optional<std::vector<int>> permutation_similar(const BraidingMatrix& b1,
                                                    const BraidingMatrix& b2);

/// Lexicographically minimal entry sequence over simultaneous row/column
/// permutations.  Two matrices are permutation-similar iff their canonical
/// forms are equal.
BraidingMatrix canonical_form(const BraidingMatrix& b);

/// Same idea at the diagram level: minimal (diag, edge) sequence over vertex
/// permutations.  Used to dedup enumerations up to diagram isomorphism.
Gdd canonical_gdd(const Gdd& g);

}  // namespace nichols
