#ifndef BTDS_FINTOP_HPP
#define BTDS_FINTOP_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "btds/errors.hpp"

namespace btds {

// A subset of the ground set {0,...,n-1}, one bit per point.
using PointSet = std::uint64_t;

inline constexpr int max_ground_points = 64;
inline constexpr int default_open_cap = 6;
inline constexpr int default_topology_cap = 4;

constexpr PointSet point_bit(int p) { return PointSet{1} << p; }

constexpr PointSet full_set(int n) {
    return n >= 64 ? ~PointSet{0} : (PointSet{1} << n) - 1;
}

constexpr bool set_contains(PointSet s, int p) { return (s >> p) & 1; }

constexpr int set_size(PointSet s) { return std::popcount(s); }

// Lowest point of a nonempty set.
constexpr int first_point(PointSet s) { return std::countr_zero(s); }

std::string set_to_string(PointSet s, int n);

// A finite topology stored as minimal open neighborhoods: min_nbhd[p] is the
// smallest open set containing p. Reflexivity (p in min_nbhd[p]) and
// transitivity (q in min_nbhd[p] implies min_nbhd[q] subset of min_nbhd[p])
// make this exactly a preorder, and every finite topology arises this way.
struct FiniteTopology {
    int n = 0;
    std::vector<PointSet> min_nbhd;

    bool operator==(const FiniteTopology&) const = default;

    // U is open iff it contains the minimal neighborhood of each of its points.
    bool is_open(PointSet u) const {
        for (PointSet m = u; m; m &= m - 1) {
            if ((min_nbhd[std::countr_zero(m)] & ~u) != 0) return false;
        }
        return true;
    }

    bool is_closed(PointSet u) const { return is_open(full_set(n) & ~u); }

    // Smallest closed superset of a; equals {p : min_nbhd(p) meets a}.
    PointSet closure(PointSet a) const {
        PointSet c = 0;
        for (int p = 0; p < n; ++p) {
            if (min_nbhd[p] & a) c |= point_bit(p);
        }
        return c;
    }

    // Checks the preorder invariants. False means the value was built by hand
    // and is broken.
    bool valid() const;
};

FiniteTopology discrete_topology(int n);
FiniteTopology indiscrete_topology(int n);

// Canonicalizes an explicit open family into minimal-neighborhood form. The
// open sets of the result are exactly the closure of family + {empty, full}
// under finite union and intersection. With strict set, the family must
// already be a topology (StrictNotATopology otherwise).
FiniteTopology from_open_family(int n, const std::vector<PointSet>& family,
                                bool strict = false);

// All open sets in ascending mask order. CapExceeded when n > cap.
std::vector<PointSet> enumerate_opens(const FiniteTopology& t,
                                      int cap = default_open_cap);

// A finite family of nonempty sets, each open in the indexed topology of some
// bitopological space, whose union is the whole ground set.
struct Cover {
    std::vector<PointSet> members;  // ascending mask order
    int topology_index = 1;        // 1 or 2

    bool operator==(const Cover&) const = default;
};

// All covers by nonempty open sets from which no member can be dropped.
// Canonical output order: lexicographic over the ascending member lists.
std::vector<Cover> enumerate_irredundant_covers(const FiniteTopology& t,
                                                int topology_index = 1,
                                                int cap = default_open_cap);

// Every distinct topology on n labeled points, exactly once, in ascending
// lexicographic order of the min_nbhd vectors. CapExceeded when n > cap.
std::vector<FiniteTopology> enumerate_topologies(int n,
                                                 int cap = default_topology_cap);

}  // namespace btds

#endif
