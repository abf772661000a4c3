#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/classify.hpp"
#include "nichols/common.hpp"

namespace nichols {

/// A nested bracket expression over the generators x_1..x_r.  Stored as
/// data only; nothing here evaluates brackets inside an algebra.
struct BracketWord {
  int leaf = 0;                  // generator index when sub is empty
  std::vector<BracketWord> sub;  // exactly two entries otherwise

  bool is_leaf() const { return sub.empty(); }
  bool operator==(const BracketWord&) const = default;
};

BracketWord gen(int i);
BracketWord bracket(BracketWord a, BracketWord b);

/// Leaves in [1, rank], every interior node binary.
bool well_formed(const BracketWord& w, int rank);

/// Leaf multiset as a degree vector: entry i counts occurrences of x_{i+1}.
std::vector<i64> degree_vector(const BracketWord& w, int rank);

/// Renders like "[[x1,x3],x2]".
std::string to_string(const BracketWord& w);

/// Dimension of the finite rank-3 classes:
///   first   2^4 m^2            (m > 2)
///   second  2^7 3^4
///   third   2^4 m^2 m2^2 / gcd(m, m2)   (m, m2 > 1)
/// Rejects other labels and out-of-range orders.
i64 rank3_dimension(CaseLabel label, i64 m, i64 m2 = 0);

/// The hard-super-letter lists of the three finite rank-3 classes, in
/// their published order; lengths 6, 10 and 7.
std::vector<BracketWord> rank3_pbw(CaseLabel label);

/// Rank-2 PBW generators {x1, x2, [x1,x2]} when q11 = -1 and
/// (q22 + 1)(q22 q12 q21 - 1) = 0 for a connected matrix; empty when the
/// hypothesis fails (no claim is made then).
std::vector<BracketWord> rank2_pbw_special(const BraidingMatrix& b);

/// True when q_ij q_ji = 1 for all i != j, i.e. the diagram has no edges.
bool is_quantum_linear_space(const BraidingMatrix& b);

/// Bundle consumed by the emitters: the PBW list and dimension where the
/// classification provides them.  Rank-2 labels carry no dimension.
struct NicholsSummary {
  CaseLabel label = CaseLabel::Infinite;
  i64 m = 0;
  i64 m2 = 0;
  std::vector<BracketWord> pbw;
  std::optional<i64> dimension;
};

NicholsSummary nichols_summary(CaseLabel label, i64 m = 0, i64 m2 = 0);

}  // namespace nichols
