#pragma once

#include "nichols/braiding.hpp"
#include "nichols/common.hpp"
#include "nichols/realize.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nichols {

// Verdict labels. The T-families are the finite rank-2 cases, Rank3_* the
// finite rank-3 chain classes; the last three are terminal verdicts.
enum class CaseLabel {
    T2_1,
    T2_2a,
    T2_2b,
    T2_3,
    T3_1a,
    T3_1b,
    T3_2a,
    T3_2b,
    T3_3,
    T4_1,
    T4_2,
    T5_1,
    T5_2,
    T6,
    T7_1,
    T7_2,
    T8_1,
    T8_2a,
    T8_2b,
    T8_3,
    T9,
    T10,
    T11_1,
    T11_2,
    T12,
    T13,
    T14,
    T15,
    T16_1,
    T16_2,
    T17,
    T18,
    T20,
    T21,
    Rank3_i,
    Rank3_ii,
    Rank3_iii,
    Infinite,
    NotRealizable,
    Disconnected,
};

std::string to_string(CaseLabel label);

bool is_rank2_case(CaseLabel label);
bool is_rank3_case(CaseLabel label);
// any label that asserts a finite-dimensional Nichols algebra
bool is_finite_case(CaseLabel label);

// A connected rank-2 system in exponent form: diagonal entries d1, d2 and the
// symmetrized edge e, all mod n.
struct Rank2System {
    i64 n;
    i64 d1;
    i64 d2;
    i64 e;
};

// Parameters pinned down by a successful shape match: the root order m the
// case is built around, plus the existential unit parameters where the case
// has them (s, t for the third twist family; zero elsewhere).
struct CaseInstance {
    i64 m = 0;
    i64 s = 0;
    i64 t = 0;
};

// One row of the rank-2 case table, split so shape and arithmetic can be
// tested independently.  base() pushes every parameter choice whose q-shape
// and order constraints hold; side() checks the arithmetic conditions on one
// such choice.  `oriented` rows are evaluated only as given (their mirror
// image is a separate row).
struct CaseConditions {
    CaseLabel label;
    bool oriented;
    void (*base)(const Rank2System&, std::vector<CaseInstance>&);
    bool (*side)(const Rank2System&, const CaseInstance&);
};

const std::vector<CaseConditions>& rank2_case_table();

struct Rank2Match {
    CaseLabel label;
    i64 m;
    bool swapped;
};

struct Rank2Verdict {
    CaseLabel label = CaseLabel::NotRealizable;
    i64 m = 0;
    bool swapped = false;
    // every table row that matched in full, in table order; verdict = front
    std::vector<Rank2Match> matches;
};

// Decide a rank-2 diagram: Disconnected when e = 0, the first fully matching
// table row otherwise, and when nothing matches the oracle splits the
// remainder into Infinite (realizable) and NotRealizable.
Rank2Verdict rank2_case(const Gdd& g, const SearchBudget& budget = {});

// True when some row's shape clause holds in either orientation, arithmetic
// side conditions ignored.
bool rank2_base_any(const Gdd& g);

// Reflection exponents at a vertex.  m[j] is the least m >= 0 killing the
// q-bracket in direction j, m[vertex] = -2 by convention.
struct ReflectionData {
    int vertex = 0;
    std::vector<i64> m;
};

bool reflection_defined(const Gdd& g, int vertex);
// throws std::domain_error when undefined (trivial diagonal against a live edge)
ReflectionData reflection_data(const Gdd& g, int vertex);

BraidingMatrix weyl_reflect(const BraidingMatrix& b, int vertex);
Gdd weyl_reflect_gdd(const Gdd& g, int vertex);

struct WeylOrbit {
    std::vector<Gdd> members;  // canonical representatives, breadth-first
    bool truncated = false;
};

WeylOrbit weyl_orbit(const Gdd& g, std::size_t max_members = 512);
WeylOrbit weyl_orbit(const BraidingMatrix& b, std::size_t max_members = 512);

struct Rank3Verdict {
    CaseLabel label = CaseLabel::NotRealizable;
    i64 m = 0;
    i64 m2 = 0;
    // realization of the input system when one exists (always set for Rank3_*
    // and Infinite verdicts)
    std::optional<Realization> witness;
};

// Decide a connected rank-3 diagram: scan the reflection orbit for one of the
// three finite chain shapes, then let the realization oracle confirm or deny
// the modulus.  Throws BudgetExceeded only when the orbit was truncated
// before any chain was found and a witness exists, i.e. when the answer is
// genuinely out of reach.
Rank3Verdict rank3_case(const Gdd& g, const SearchBudget& budget = {},
                        std::size_t max_orbit = 512);

// Connected diagrams on four or more vertices never have finite-dimensional
// Nichols algebras.
CaseLabel rank_ge4_verdict(const Gdd& g);

struct Rank2Entry {
    Gdd gdd;  // canonical representative, d1 <= d2
    CaseLabel label;
    i64 m;
    Realization witness;
};

// All connected rank-2 classes over Z_n with a finite-dimensional Nichols
// algebra, deduplicated under vertex swap, in lexicographic order.
std::vector<Rank2Entry> enumerate_rank2(i64 n, const SearchBudget& budget = {});

struct Rank3Entry {
    Gdd gdd;  // canonical representative
    CaseLabel label;
    i64 m;
    i64 m2;
    Realization witness;
};

std::vector<Rank3Entry> enumerate_rank3(i64 n, const SearchBudget& budget = {});

// The stock of hand-checkable congruence witnesses behind the fixed-order
// rank-2 cases: for each, the criterion quadratic over Z_m picks up the root
// d.  `primed` marks the two cases whose criterion swaps t1 and t2.
struct ProofTuple {
    CaseLabel label;
    i64 m;
    i64 t1;
    i64 t2;
    i64 t3;
    i64 d;
    bool primed;
};

const std::vector<ProofTuple>& fixed_case_proof_tuples();

}  // namespace nichols
