#ifndef BTDS_DYNAMICS_HPP
#define BTDS_DYNAMICS_HPP

#include <optional>
#include <vector>

#include "btds/bitop.hpp"

namespace btds {

// Total function between ground sets, as a table.
struct PointMap {
    int dom_n = 0;
    int cod_n = 0;
    std::vector<int> table;

    bool operator==(const PointMap&) const = default;

    int operator()(int x) const { return table[x]; }

    bool valid() const {
        if (dom_n < 1 || cod_n < 1) return false;
        if (static_cast<int>(table.size()) != dom_n) return false;
        for (int v : table) {
            if (v < 0 || v >= cod_n) return false;
        }
        return true;
    }

    PointSet image(PointSet a) const {
        PointSet out = 0;
        for (PointSet m = a; m; m &= m - 1) out |= point_bit(table[std::countr_zero(m)]);
        return out;
    }

    PointSet preimage(PointSet b) const {
        PointSet out = 0;
        for (int x = 0; x < dom_n; ++x) {
            if (set_contains(b, table[x])) out |= point_bit(x);
        }
        return out;
    }

    static PointMap identity(int n);
    static PointMap constant(int dom_n, int cod_n, int value);
};

// outer after inner.
PointMap compose(const PointMap& outer, const PointMap& inner);

// Open set of the codomain whose preimage is not open.
struct ContinuityWitness {
    PointSet open_set = 0;
};

// Continuity of m from t_src to t_dst. Two tests run: preimages of all opens,
// and monotonicity m(min_nbhd(x)) subset of min_nbhd(m(x)); they must agree
// (InternalEquivalenceViolation otherwise).
std::optional<ContinuityWitness> continuity_violation(const FiniteTopology& t_src,
                                                      const FiniteTopology& t_dst,
                                                      const PointMap& m);
bool is_continuous(const FiniteTopology& t_src, const FiniteTopology& t_dst,
                   const PointMap& m);

// Continuity witness tagged with the topology index it failed at.
struct PairwiseContinuityWitness {
    int index = 0;  // 1 or 2
    PointSet open_set = 0;
};

std::optional<PairwiseContinuityWitness> pairwise_continuity_violation(
    const BitopSpace& src, const BitopSpace& dst, const PointMap& m);
bool is_pairwise_continuous(const BitopSpace& src, const BitopSpace& dst,
                            const PointMap& m);

// Bijective with pairwise continuous inverse (the map itself is assumed
// pairwise continuous by the caller).
bool is_pairwise_homeomorphism(const BitopSpace& s, const PointMap& m);

// A bitopological dynamical system: a space with a self-map, iterated.
// checked() enforces pairwise continuity; unchecked() loads any fixture and
// records the verdict, so claimed-but-false systems stay analyzable.
struct Btds {
    BitopSpace space;
    PointMap map;
    bool certified = false;  // pairwise-continuity verdict

    static Btds checked(BitopSpace space, PointMap map);
    static Btds unchecked(BitopSpace space, PointMap map);
};

enum class OrbitKind { forward, backward, full };

// Orbit points in iteration order. period is the cycle length once the orbit
// repeats (0 when the budget ran out first; on finite spaces that needs
// budget < n+1). The full orbit lists the forward points followed by any
// backward points not already seen, with the forward period.
struct Orbit {
    std::vector<int> points;
    int period = 0;
};

inline constexpr int default_orbit_budget = 1 << 16;

// Backward and full orbits require a pairwise homeomorphism (NotInvertible).
Orbit orbit(const Btds& b, int x, OrbitKind kind,
            int budget = default_orbit_budget);

}  // namespace btds

#endif
