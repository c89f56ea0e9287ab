#ifndef BTDS_BITOP_HPP
#define BTDS_BITOP_HPP

#include <optional>

#include "btds/fintop.hpp"

namespace btds {

// One ground set, two topologies.
struct BitopSpace {
    int n = 0;
    FiniteTopology t1;
    FiniteTopology t2;

    bool operator==(const BitopSpace&) const = default;

    const FiniteTopology& topo(int index) const {
        return index == 1 ? t1 : t2;
    }

    bool valid() const {
        return n >= 1 && t1.n == n && t2.n == n && t1.valid() && t2.valid();
    }
};

BitopSpace swap_topologies(const BitopSpace& s);

// Ordered pair (x, y) that no pair of opens separates as required.
struct PairWitness {
    int x = 0;
    int y = 0;
};

// Point x and the i-closed set it cannot be separated from.
struct RegularityWitness {
    int x = 0;
    PointSet closed_set = 0;
};

// Pairwise T1: distinct x, y admit a t1-open containing x but not y and a
// t2-open containing y but not x. Returns the first violating ordered pair.
std::optional<PairWitness> pairwise_t1_violation(const BitopSpace& s);
bool is_pairwise_t1(const BitopSpace& s);

// Regularity of topology i with respect to the other one. Three equivalent
// formulations are evaluated (point/closed-set separation, closure-shrinking
// of neighborhoods, closure-avoiding neighborhoods); any disagreement is an
// InternalEquivalenceViolation since their equivalence is a theorem.
//
// Convention: "each i-closed P with x not in P" includes P = empty, which is
// separated by V = empty. This decides the verdict on indiscrete factors.
std::optional<RegularityWitness> regularity_violation(const BitopSpace& s, int i);
bool is_regular_wrt(const BitopSpace& s, int i);
bool is_pairwise_regular(const BitopSpace& s);

// Pairwise Hausdorff, symmetric reading: distinct x, y admit disjoint
// U in t1, V in t2 with x in U, y in V, and the same with the roles of the
// topologies swapped. The weaker one-sided reading asks only one of the two
// assignments to work per unordered pair; both are exposed because downstream
// reports record verdicts under each.
std::optional<PairWitness> pairwise_hausdorff_violation(const BitopSpace& s);
bool is_pairwise_hausdorff(const BitopSpace& s);
bool is_pairwise_hausdorff_weak(const BitopSpace& s);

bool is_pairwise_t3(const BitopSpace& s);

// Every subset of a finite space is compact, so these hold identically; they
// are kept as operations so hypothesis checking can mirror the named notions.
bool is_locally_compact_wrt(const BitopSpace& s, int i);
bool is_pairwise_locally_compact(const BitopSpace& s);

// Countable unions of closed sets collapse to finite unions on finite spaces,
// hence are closed: identically true, kept for hypothesis mirroring.
bool is_pairwise_p_space(const BitopSpace& s);

enum class Prop22Verdict { vacuous, confirmed, violated };

const char* to_string(Prop22Verdict v);

// If s is pairwise regular, pairwise Hausdorff and t1 is locally compact with
// respect to t2, then every t1-open must be t2-open. verdict uses the
// symmetric Hausdorff reading; verdict_weak_reading re-evaluates the
// hypotheses under the one-sided reading so a definitional mismatch shows up
// in reports. A violated verdict is a finding, never to be dropped.
struct Prop22Report {
    Prop22Verdict verdict = Prop22Verdict::vacuous;
    Prop22Verdict verdict_weak_reading = Prop22Verdict::vacuous;
    std::optional<PointSet> witness_open;  // t1-open that is not t2-open
};

Prop22Report check_prop_2_2(const BitopSpace& s);

}  // namespace btds

#endif
