#include "btds/bitop.hpp"

namespace btds {

BitopSpace swap_topologies(const BitopSpace& s) {
    return BitopSpace{s.n, s.t2, s.t1};
}

namespace {

std::vector<PointSet> opens_of(const FiniteTopology& t) {
    return enumerate_opens(t, t.n);  // internal call, cap trivially satisfied
}

// Is there a pair U in opens_a containing x, V in opens_b containing y,
// with U and V disjoint?
bool separated(const std::vector<PointSet>& opens_a, int x,
               const std::vector<PointSet>& opens_b, int y) {
    for (PointSet u : opens_a) {
        if (!set_contains(u, x)) continue;
        for (PointSet v : opens_b) {
            if (set_contains(v, y) && (u & v) == 0) return true;
        }
    }
    return false;
}

}  // namespace

std::optional<PairWitness> pairwise_t1_violation(const BitopSpace& s) {
    const auto o1 = opens_of(s.t1);
    const auto o2 = opens_of(s.t2);
    for (int x = 0; x < s.n; ++x) {
        for (int y = 0; y < s.n; ++y) {
            if (x == y) continue;
            bool u_ok = false;
            for (PointSet u : o1) {
                if (set_contains(u, x) && !set_contains(u, y)) { u_ok = true; break; }
            }
            bool v_ok = false;
            for (PointSet v : o2) {
                if (set_contains(v, y) && !set_contains(v, x)) { v_ok = true; break; }
            }
            if (!u_ok || !v_ok) return PairWitness{x, y};
        }
    }
    return std::nullopt;
}

bool is_pairwise_t1(const BitopSpace& s) {
    return !pairwise_t1_violation(s).has_value();
}

std::optional<RegularityWitness> regularity_violation(const BitopSpace& s, int i) {
    const int j = 3 - i;
    const FiniteTopology& ti = s.topo(i);
    const FiniteTopology& tj = s.topo(j);
    const auto opens_i = opens_of(ti);
    const auto opens_j = opens_of(tj);
    const PointSet full = full_set(s.n);

    // Form 1: x and an i-closed P with x not in P have disjoint i-open U (x in U)
    // and j-open V (P subset of V).
    bool ok1 = true;
    std::optional<RegularityWitness> witness;
    for (int x = 0; x < s.n && ok1; ++x) {
        for (PointSet u : opens_i) {  // closed sets are complements of opens
            const PointSet p = full & ~u;
            if (set_contains(p, x)) continue;
            bool found = false;
            for (PointSet uu : opens_i) {
                if (!set_contains(uu, x)) continue;
                for (PointSet v : opens_j) {
                    if ((p & ~v) == 0 && (uu & v) == 0) { found = true; break; }
                }
                if (found) break;
            }
            if (!found) {
                ok1 = false;
                witness = RegularityWitness{x, p};
                break;
            }
        }
    }

    // Form 2: every i-open G around x shrinks to an i-open H with
    // x in H, j-closure(H) inside G.
    bool ok2 = true;
    for (int x = 0; x < s.n && ok2; ++x) {
        for (PointSet g : opens_i) {
            if (!set_contains(g, x)) continue;
            bool found = false;
            for (PointSet h : opens_i) {
                if (set_contains(h, x) && (tj.closure(h) & ~g) == 0) { found = true; break; }
            }
            if (!found) { ok2 = false; break; }
        }
    }

    // Form 3: x outside an i-closed K has an i-open M around x whose
    // j-closure avoids K.
    bool ok3 = true;
    for (int x = 0; x < s.n && ok3; ++x) {
        for (PointSet u : opens_i) {
            const PointSet k = full & ~u;
            if (set_contains(k, x)) continue;
            bool found = false;
            for (PointSet m = 0; m <= full && !found; ++m) {
                if (ti.is_open(m) && set_contains(m, x) && (tj.closure(m) & k) == 0) {
                    found = true;
                }
            }
            if (!found) { ok3 = false; break; }
        }
    }

    if (ok1 != ok2 || ok1 != ok3) {
        throw InternalEquivalenceViolation(
            "regularity_violation: the three regularity formulations disagree (i=" +
            std::to_string(i) + ", forms: " + std::to_string(ok1) + "/" +
            std::to_string(ok2) + "/" + std::to_string(ok3) + ")");
    }
    return witness;
}

bool is_regular_wrt(const BitopSpace& s, int i) {
    return !regularity_violation(s, i).has_value();
}

bool is_pairwise_regular(const BitopSpace& s) {
    return is_regular_wrt(s, 1) && is_regular_wrt(s, 2);
}

std::optional<PairWitness> pairwise_hausdorff_violation(const BitopSpace& s) {
    const auto o1 = opens_of(s.t1);
    const auto o2 = opens_of(s.t2);
    for (int x = 0; x < s.n; ++x) {
        for (int y = 0; y < s.n; ++y) {
            if (x != y && !separated(o1, x, o2, y)) return PairWitness{x, y};
        }
    }
    return std::nullopt;
}

bool is_pairwise_hausdorff(const BitopSpace& s) {
    return !pairwise_hausdorff_violation(s).has_value();
}

bool is_pairwise_hausdorff_weak(const BitopSpace& s) {
    const auto o1 = opens_of(s.t1);
    const auto o2 = opens_of(s.t2);
    for (int x = 0; x < s.n; ++x) {
        for (int y = x + 1; y < s.n; ++y) {
            if (!separated(o1, x, o2, y) && !separated(o1, y, o2, x)) return false;
        }
    }
    return true;
}

bool is_pairwise_t3(const BitopSpace& s) {
    return is_pairwise_regular(s) && is_pairwise_t1(s);
}

bool is_locally_compact_wrt(const BitopSpace&, int) {
    // Finite implies compact: the full set is always such a neighborhood.
    return true;
}

bool is_pairwise_locally_compact(const BitopSpace& s) {
    return is_locally_compact_wrt(s, 1) && is_locally_compact_wrt(s, 2);
}

bool is_pairwise_p_space(const BitopSpace&) {
    return true;
}

const char* to_string(Prop22Verdict v) {
    switch (v) {
        case Prop22Verdict::vacuous:   return "VACUOUS";
        case Prop22Verdict::confirmed: return "CONFIRMED";
        case Prop22Verdict::violated:  return "VIOLATED";
    }
    return "?";
}

Prop22Report check_prop_2_2(const BitopSpace& s) {
    const bool regular = is_pairwise_regular(s);
    const bool lc = is_locally_compact_wrt(s, 1);
    const bool hyp_strong = regular && is_pairwise_hausdorff(s) && lc;
    const bool hyp_weak = regular && is_pairwise_hausdorff_weak(s) && lc;

    // Conclusion: t1 subset of t2, i.e. every t1-open is t2-open.
    std::optional<PointSet> bad;
    for (PointSet u : opens_of(s.t1)) {
        if (!s.t2.is_open(u)) { bad = u; break; }
    }

    Prop22Report r;
    r.verdict = !hyp_strong ? Prop22Verdict::vacuous
               : bad        ? Prop22Verdict::violated
                            : Prop22Verdict::confirmed;
    r.verdict_weak_reading = !hyp_weak ? Prop22Verdict::vacuous
                            : bad      ? Prop22Verdict::violated
                                       : Prop22Verdict::confirmed;
    if ((r.verdict == Prop22Verdict::violated ||
         r.verdict_weak_reading == Prop22Verdict::violated)) {
        r.witness_open = bad;
    }
    return r;
}

}  // namespace btds
