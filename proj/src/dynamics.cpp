#include "btds/dynamics.hpp"

#include <algorithm>

namespace btds {

PointMap PointMap::identity(int n) {
    PointMap m{n, n, std::vector<int>(n)};
    for (int x = 0; x < n; ++x) m.table[x] = x;
    return m;
}

PointMap PointMap::constant(int dom_n, int cod_n, int value) {
    return PointMap{dom_n, cod_n, std::vector<int>(dom_n, value)};
}

PointMap compose(const PointMap& outer, const PointMap& inner) {
    if (inner.cod_n != outer.dom_n) {
        throw ShapeMismatch("compose: inner codomain " + std::to_string(inner.cod_n) +
                            " != outer domain " + std::to_string(outer.dom_n));
    }
    PointMap out{inner.dom_n, outer.cod_n, std::vector<int>(inner.dom_n)};
    for (int x = 0; x < inner.dom_n; ++x) out.table[x] = outer.table[inner.table[x]];
    return out;
}

std::optional<ContinuityWitness> continuity_violation(const FiniteTopology& t_src,
                                                      const FiniteTopology& t_dst,
                                                      const PointMap& m) {
    if (m.dom_n != t_src.n || m.cod_n != t_dst.n) {
        throw ShapeMismatch("continuity_violation: map shape (" +
                            std::to_string(m.dom_n) + "->" + std::to_string(m.cod_n) +
                            ") does not match topologies (" + std::to_string(t_src.n) +
                            "->" + std::to_string(t_dst.n) + ")");
    }
    if (t_dst.n > 20) {
        throw CapExceeded("continuity_violation: codomain open enumeration capped at 20 points");
    }

    std::optional<ContinuityWitness> witness;
    for (PointSet u : enumerate_opens(t_dst, t_dst.n)) {
        if (!t_src.is_open(m.preimage(u))) {
            witness = ContinuityWitness{u};
            break;
        }
    }

    // Minimal-neighborhood monotonicity, checked against the preimage verdict.
    bool monotone = true;
    for (int x = 0; x < m.dom_n; ++x) {
        if (m.image(t_src.min_nbhd[x]) & ~t_dst.min_nbhd[m(x)]) {
            monotone = false;
            break;
        }
    }
    if (monotone == witness.has_value()) {
        throw InternalEquivalenceViolation(
            "continuity_violation: preimage test and minimal-neighborhood test disagree");
    }
    return witness;
}

bool is_continuous(const FiniteTopology& t_src, const FiniteTopology& t_dst,
                   const PointMap& m) {
    return !continuity_violation(t_src, t_dst, m).has_value();
}

std::optional<PairwiseContinuityWitness> pairwise_continuity_violation(
    const BitopSpace& src, const BitopSpace& dst, const PointMap& m) {
    for (int i = 1; i <= 2; ++i) {
        if (auto w = continuity_violation(src.topo(i), dst.topo(i), m)) {
            return PairwiseContinuityWitness{i, w->open_set};
        }
    }
    return std::nullopt;
}

bool is_pairwise_continuous(const BitopSpace& src, const BitopSpace& dst,
                            const PointMap& m) {
    return !pairwise_continuity_violation(src, dst, m).has_value();
}

bool is_pairwise_homeomorphism(const BitopSpace& s, const PointMap& m) {
    if (m.dom_n != s.n || m.cod_n != s.n) return false;
    std::vector<int> inverse(s.n, -1);
    for (int x = 0; x < s.n; ++x) {
        if (inverse[m(x)] != -1) return false;  // not injective
        inverse[m(x)] = x;
    }
    PointMap inv{s.n, s.n, std::move(inverse)};
    return is_pairwise_continuous(s, s, inv);
}

Btds Btds::checked(BitopSpace space, PointMap map) {
    if (map.dom_n != space.n || map.cod_n != space.n) {
        throw ShapeMismatch("Btds: map is not a self-map of the space");
    }
    if (auto w = pairwise_continuity_violation(space, space, map)) {
        throw NotPairwiseContinuous(
            "Btds: self-map is not pairwise continuous; preimage of open " +
            set_to_string(w->open_set, space.n) + " fails on index " +
            std::to_string(w->index));
    }
    return Btds{std::move(space), std::move(map), true};
}

Btds Btds::unchecked(BitopSpace space, PointMap map) {
    if (map.dom_n != space.n || map.cod_n != space.n) {
        throw ShapeMismatch("Btds: map is not a self-map of the space");
    }
    const bool ok = is_pairwise_continuous(space, space, map);
    return Btds{std::move(space), std::move(map), ok};
}

namespace {

// Iterate step from x, stopping at the first repeated point or the budget.
Orbit iterate_orbit(const PointMap& step, int x, int budget) {
    Orbit o;
    std::vector<int> seen_at(step.dom_n, -1);
    int cur = x;
    for (int i = 0; i < budget; ++i) {
        if (seen_at[cur] >= 0) {
            o.period = static_cast<int>(o.points.size()) - seen_at[cur];
            return o;
        }
        seen_at[cur] = static_cast<int>(o.points.size());
        o.points.push_back(cur);
        cur = step(cur);
    }
    if (seen_at[cur] >= 0) {
        o.period = static_cast<int>(o.points.size()) - seen_at[cur];
    }
    return o;  // period 0: budget exhausted before closing the cycle
}

}  // namespace

Orbit orbit(const Btds& b, int x, OrbitKind kind, int budget) {
    if (x < 0 || x >= b.space.n) {
        throw ShapeMismatch("orbit: start point out of range");
    }
    if (kind == OrbitKind::forward) return iterate_orbit(b.map, x, budget);

    if (!is_pairwise_homeomorphism(b.space, b.map)) {
        throw NotInvertible(
            "orbit: backward/full orbits need a pairwise homeomorphism");
    }
    std::vector<int> inverse(b.space.n);
    for (int p = 0; p < b.space.n; ++p) inverse[b.map(p)] = p;
    PointMap inv{b.space.n, b.space.n, std::move(inverse)};

    if (kind == OrbitKind::backward) return iterate_orbit(inv, x, budget);

    Orbit fwd = iterate_orbit(b.map, x, budget);
    Orbit bwd = iterate_orbit(inv, x, budget);
    Orbit full = fwd;
    for (int p : bwd.points) {
        if (std::find(full.points.begin(), full.points.end(), p) == full.points.end()) {
            full.points.push_back(p);
        }
    }
    return full;
}

}  // namespace btds
