#include "nichols/pbw.hpp"

#include <numeric>
#include <stdexcept>

namespace nichols {

BracketWord gen(int i) {
  if (i < 1) throw std::invalid_argument("gen: generator index must be >= 1");
  BracketWord w;
  w.leaf = i;
  return w;
}

BracketWord bracket(BracketWord a, BracketWord b) {
  BracketWord w;
  w.sub.push_back(std::move(a));
  w.sub.push_back(std::move(b));
  return w;
}

bool well_formed(const BracketWord& w, int rank) {
  if (w.is_leaf()) return w.leaf >= 1 && w.leaf <= rank;
  return w.sub.size() == 2 && well_formed(w.sub[0], rank) &&
         well_formed(w.sub[1], rank);
}

namespace {

void count_leaves(const BracketWord& w, std::vector<i64>& deg) {
  if (w.is_leaf()) {
    if (w.leaf >= 1 && static_cast<std::size_t>(w.leaf) <= deg.size())
      ++deg[w.leaf - 1];
    return;
  }
  for (const auto& s : w.sub) count_leaves(s, deg);
}

}  // namespace

std::vector<i64> degree_vector(const BracketWord& w, int rank) {
  std::vector<i64> deg(static_cast<std::size_t>(rank), 0);
  count_leaves(w, deg);
  return deg;
}

std::string to_string(const BracketWord& w) {
  if (w.is_leaf()) return "x" + std::to_string(w.leaf);
  return "[" + to_string(w.sub[0]) + "," + to_string(w.sub[1]) + "]";
}

i64 rank3_dimension(CaseLabel label, i64 m, i64 m2) {
  switch (label) {
    case CaseLabel::Rank3_i:
      if (m <= 2) throw std::invalid_argument("rank3_dimension: need m > 2");
      return 16 * m * m;
    case CaseLabel::Rank3_ii:
      return 10368;  // 2^7 3^4
    case CaseLabel::Rank3_iii: {
      if (m <= 1 || m2 <= 1)
        throw std::invalid_argument("rank3_dimension: need m, m2 > 1");
      const i64 g = std::gcd(m, m2);
      return 16 * m * m * m2 * m2 / g;
    }
    default:
      throw std::invalid_argument(
          "rank3_dimension: no formula for this label");
  }
}

std::vector<BracketWord> rank3_pbw(CaseLabel label) {
  const auto x1 = gen(1);
  const auto x2 = gen(2);
  const auto x3 = gen(3);
  const auto x12 = bracket(x1, x2);
  const auto x13 = bracket(x1, x3);
  const auto x132 = bracket(x13, x2);
  std::vector<BracketWord> words = {x1, x2, x3, x12, x13, x132};
  switch (label) {
    case CaseLabel::Rank3_i:
      return words;
    case CaseLabel::Rank3_ii:
      words.push_back(bracket(x12, x13));
      words.push_back(bracket(x12, x132));
      words.push_back(bracket(x13, x132));
      words.push_back(bracket(bracket(x12, x132), x13));
      return words;
    case CaseLabel::Rank3_iii:
      words.push_back(bracket(x12, x13));
      return words;
    default:
      throw std::invalid_argument("rank3_pbw: no list for this label");
  }
}

std::vector<BracketWord> rank2_pbw_special(const BraidingMatrix& b) {
  if (b.rank != 2)
    throw std::invalid_argument("rank2_pbw_special: rank 2 input required");
  const i64 n = b.n;
  const i64 cross = mod_reduce(b.at(0, 1) + b.at(1, 0), n);
  if (cross == 0) return {};  // disconnected, the hypothesis is not about this
  const bool q11_minus1 = n % 2 == 0 && b.at(0, 0) == n / 2;
  const bool q22_minus1 = n % 2 == 0 && b.at(1, 1) == n / 2;
  const bool q22_cross_one = mod_reduce(b.at(1, 1) + cross, n) == 0;
  if (q11_minus1 && (q22_minus1 || q22_cross_one))
    return {gen(1), gen(2), bracket(gen(1), gen(2))};
  return {};
}

bool is_quantum_linear_space(const BraidingMatrix& b) {
  for (int i = 0; i < b.rank; ++i)
    for (int j = i + 1; j < b.rank; ++j)
      if (mod_reduce(b.at(i, j) + b.at(j, i), b.n) != 0) return false;
  return true;
}

NicholsSummary nichols_summary(CaseLabel label, i64 m, i64 m2) {
  NicholsSummary s;
  s.label = label;
  s.m = m;
  s.m2 = m2;
  if (is_rank3_case(label)) {
    s.pbw = rank3_pbw(label);
    s.dimension = rank3_dimension(label, m, m2);
  }
  // rank-2 labels: finite by the classification but the source states no
  // dimension formula, so none is invented here
  return s;
}

}  // namespace nichols
