#include "btds/selection.hpp"

#include <algorithm>

namespace btds {

const char* to_string(ContextKind k) {
    switch (k) {
        case ContextKind::h:  return "H";
        case ContextKind::hi: return "HI";
        case ContextKind::ph: return "PH";
    }
    return "?";
}

const char* to_string(HProperty p) {
    switch (p) {
        case HProperty::rothberger:        return "Rothberger";
        case HProperty::almost_rothberger: return "almost_Rothberger";
        case HProperty::weak_rothberger:   return "weak_Rothberger";
        case HProperty::menger:            return "Menger";
        case HProperty::almost_menger:     return "almost_Menger";
        case HProperty::weak_menger:       return "weak_Menger";
    }
    return "?";
}

SelectMode mode_of(HProperty p) {
    switch (p) {
        case HProperty::rothberger:
        case HProperty::almost_rothberger:
        case HProperty::weak_rothberger:
            return SelectMode::single;
        default:
            return SelectMode::finite;
    }
}

CoverFamilyKind kind_of(HProperty p) {
    switch (p) {
        case HProperty::rothberger:
        case HProperty::menger:
            return CoverFamilyKind::open_cover;
        case HProperty::almost_rothberger:
        case HProperty::almost_menger:
            return CoverFamilyKind::closure_cover;
        default:
            return CoverFamilyKind::dense_union;
    }
}

bool family_member(const FamilyKind& kind, const BitopSpace& y,
                   const std::vector<PointSet>& family) {
    const PointSet full = full_set(y.n);
    switch (kind.kind) {
        case CoverFamilyKind::open_cover: {
            PointSet uni = 0;
            for (PointSet u : family) {
                if (!y.topo(kind.j).is_open(u)) return false;
                uni |= u;
            }
            return uni == full;
        }
        case CoverFamilyKind::closure_cover: {
            PointSet covered = 0;
            for (PointSet u : family) {
                if (!y.topo(kind.i).is_open(u)) return false;
                covered |= y.topo(kind.j).closure(u);
            }
            return covered == full;
        }
        case CoverFamilyKind::dense_union: {
            PointSet uni = 0;
            for (PointSet u : family) {
                if (!y.topo(kind.i).is_open(u)) return false;
                uni |= u;
            }
            return y.topo(kind.j).closure(uni) == full;
        }
    }
    return false;
}

namespace {

PointSet raw_union(const std::vector<PointSet>& family) {
    PointSet u = 0;
    for (PointSet m : family) u |= m;
    return u;
}

// What the family actually reaches under the target semantics; the verdict
// compares this against the full set.
PointSet achieved(const SelectionProblem& p, const std::vector<PointSet>& family) {
    const FiniteTopology& tj = p.Y.topo(p.j());
    switch (p.kind) {
        case CoverFamilyKind::open_cover:
            return raw_union(family);
        case CoverFamilyKind::closure_cover: {
            PointSet c = 0;
            for (PointSet u : family) c |= tj.closure(u);
            return c;
        }
        case CoverFamilyKind::dense_union:
            return tj.closure(raw_union(family));
    }
    return 0;
}

// Does the accumulated family land in the target class? Refinement selections
// and the cover_only reading ask for coverage; everything else goes through
// family_member so the decision uses the class definitions verbatim.
bool target_satisfied(const SelectionProblem& p, const std::vector<PointSet>& family) {
    const PointSet full = full_set(p.Y.n);
    if (p.refine_selection) {
        for (PointSet u : family) {
            if (!p.Y.topo(p.j()).is_open(u)) return false;
        }
        return raw_union(family) == full;
    }
    if (p.kind == CoverFamilyKind::open_cover &&
        p.readings.target == TargetOpenness::cover_only) {
        return raw_union(family) == full;
    }
    return family_member(FamilyKind{p.kind, p.i, p.j()}, p.Y, family);
}

// The largest family the player can legally accumulate against one cover.
std::vector<PointSet> viable_members(const SelectionProblem& p, const Cover& cover,
                                     const std::optional<AnchorPair>& anchor) {
    std::vector<PointSet> pool;
    if (p.refine_selection) {
        // delta_2 style: any psi_j-open subset of a cover member qualifies.
        for (PointSet v : enumerate_opens(p.Y.topo(p.j()), p.Y.n)) {
            if (v == 0) continue;
            for (PointSet u : cover.members) {
                if ((v & ~u) == 0) {
                    pool.push_back(v);
                    break;
                }
            }
        }
    } else {
        pool = cover.members;
    }

    std::vector<PointSet> out;
    for (PointSet u : pool) {
        if (p.mode == SelectMode::single && anchor &&
            p.readings.anchor == AnchorReading::per_set &&
            !set_contains(u, anchor->at_one)) {
            continue;
        }
        if (!p.refine_selection && p.kind == CoverFamilyKind::open_cover &&
            p.readings.target == TargetOpenness::strict &&
            !p.Y.topo(p.j()).is_open(u)) {
            continue;
        }
        out.push_back(u);
    }
    return out;
}

bool has_carrier(const std::vector<PointSet>& family, int a) {
    for (PointSet u : family) {
        if (set_contains(u, a)) return true;
    }
    return false;
}

// Survivability of a single cover played forever. The player may spread
// selections over the repetitions, so the accumulated family can be any
// admissible subfamily; the maximal one decides.
bool survivable_constant(const SelectionProblem& p, const Cover& cover,
                         const std::optional<AnchorPair>& anchor) {
    if (anchor && !set_contains(raw_union(cover.members), anchor->at_zero)) {
        return true;  // side condition H(x,0) in the union fails: no demand
    }
    const auto viable = viable_members(p, cover, anchor);
    if (p.refine_selection) return target_satisfied(p, viable);

    const bool anchored = anchor.has_value();
    if (p.mode == SelectMode::single) {
        if (p.readings.anchor == AnchorReading::per_set) {
            return target_satisfied(p, viable);
        }
        return !viable.empty() && target_satisfied(p, viable) &&
               (!anchored || set_contains(raw_union(viable), anchor->at_one));
    }
    // S_fin
    if (p.readings.anchor == AnchorReading::per_set) {
        return (!anchored || has_carrier(viable, anchor->at_one)) &&
               target_satisfied(p, viable);
    }
    return target_satisfied(p, viable) &&
           (!anchored || set_contains(raw_union(viable), anchor->at_one));
}

// Is this subfamily of `viable` a self-sufficient winning selection?
bool selection_wins(const SelectionProblem& p, const std::vector<PointSet>& family,
                    const std::optional<AnchorPair>& anchor) {
    if (!target_satisfied(p, family)) return false;
    if (!anchor) return true;
    if (p.refine_selection) return true;
    if (p.mode == SelectMode::single && p.readings.anchor == AnchorReading::per_set) {
        return !family.empty();  // members are anchor-filtered already
    }
    if (p.readings.anchor == AnchorReading::per_set) {
        return has_carrier(family, anchor->at_one);  // S_fin carrier per cover
    }
    return set_contains(raw_union(family), anchor->at_one);
}

// Canonical-minimum winning subfamily: ascending subset masks over the viable
// members, first hit wins. Falls back to the whole viable family when the
// subset scan would be too wide.
std::vector<PointSet> minimal_selection(const SelectionProblem& p,
                                        const std::vector<PointSet>& viable,
                                        const std::optional<AnchorPair>& anchor) {
    if (viable.size() > 16) return viable;
    const std::uint32_t limit = std::uint32_t{1} << viable.size();
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        std::vector<PointSet> family;
        for (size_t k = 0; k < viable.size(); ++k) {
            if ((mask >> k) & 1) family.push_back(viable[k]);
        }
        if (selection_wins(p, family, anchor)) return family;
    }
    return viable;
}

std::vector<std::optional<AnchorPair>> anchor_passes(const SelectionProblem& p) {
    if (p.anchors.empty()) return {std::nullopt};
    std::vector<AnchorPair> sorted = p.anchors;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::optional<AnchorPair>> out;
    for (const AnchorPair& a : sorted) out.emplace_back(a);
    return out;
}

std::vector<Cover> adversary_covers(const SelectionProblem& p, int cap) {
    return enumerate_irredundant_covers(p.Y.topo(p.i), p.i, cap);
}

SelectionReport characterize(const SelectionProblem& p, const std::vector<Cover>& covers) {
    SelectionReport r;
    r.verdict = true;
    const auto anchors = anchor_passes(p);
    for (const Cover& cover : covers) {
        for (const auto& anchor : anchors) {
            if (!survivable_constant(p, cover, anchor)) {
                r.verdict = false;
                const auto viable = viable_members(p, cover, anchor);
                const PointSet got = achieved(p, viable);
                const PointSet missing = full_set(p.Y.n) & ~got;
                // Coverage failures name the least unreachable point; anchor
                // failures (union reading) name the anchor itself.
                const int witness_point = missing      ? first_point(missing)
                                          : anchor     ? anchor->at_one
                                                       : 0;
                r.refutation = Refutation{cover, anchor, witness_point};
                r.selections.clear();
                return r;
            }
            if (anchor && !set_contains(raw_union(cover.members), anchor->at_zero)) {
                continue;  // vacuous pass contributes no selection
            }
            r.selections.push_back(CoverSelection{
                cover, anchor, minimal_selection(p, viable_members(p, cover, anchor), anchor)});
        }
    }
    return r;
}

void check_oracle_caps(const SelectionProblem& p, const DecisionOptions& opts,
                       size_t cover_count, bool throw_on_fail, bool& ok) {
    ok = true;
    const auto opens = enumerate_opens(p.Y.topo(p.i), p.Y.n);
    if (static_cast<int>(opens.size()) > opts.oracle_opens_cap ||
        static_cast<int>(cover_count) > opts.oracle_covers_cap) {
        ok = false;
        if (throw_on_fail) {
            throw CapExceeded("oracle_bounded: instance outside oracle caps (" +
                              std::to_string(opens.size()) + " opens, " +
                              std::to_string(cover_count) + " covers)");
        }
    }
}

// Admissible per-slot picks against one cover, computed once per anchor and
// reused across every tuple the cover appears in.
struct SlotMoves {
    bool side_condition_met = true;              // H(x,0) in the cover's union
    std::vector<std::vector<PointSet>> subsets;  // legal per-slot selections
    std::vector<PointSet> refine_viable;         // refinement pool members
};

SlotMoves slot_moves(const SelectionProblem& p, const Cover& cover,
                     const std::optional<AnchorPair>& anchor) {
    SlotMoves out;
    if (anchor) {
        out.side_condition_met = set_contains(raw_union(cover.members), anchor->at_zero);
    }
    if (p.refine_selection) {
        out.refine_viable = viable_members(p, cover, anchor);
        return out;
    }
    const bool anchored = anchor.has_value();
    const bool per_set = p.readings.anchor == AnchorReading::per_set;
    const auto& members = cover.members;
    if (members.size() > 16) {
        throw CapExceeded("oracle_bounded: cover too wide for subset search");
    }
    // All admissibility is checked explicitly on raw members rather than via
    // pre-filtered pools; the target class judges the accumulated family.
    const std::uint32_t limit = std::uint32_t{1} << members.size();
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        std::vector<PointSet> pick;
        for (size_t k = 0; k < members.size(); ++k) {
            if ((mask >> k) & 1) pick.push_back(members[k]);
        }
        if (p.mode == SelectMode::single) {
            if (pick.empty()) continue;  // one selection per step is mandatory
            if (anchored && per_set && !std::all_of(pick.begin(), pick.end(),
                    [&](PointSet u) { return set_contains(u, anchor->at_one); })) {
                continue;
            }
        } else {
            if (anchored && per_set && !has_carrier(pick, anchor->at_one)) continue;
        }
        out.subsets.push_back(std::move(pick));
    }
    return out;
}

// Exhaustive search for a winning selection against one adversary tuple.
// Each slot stands for infinitely many repetitions of its cover, so the
// player contributes an arbitrary admissible subset per slot and wins if the
// accumulated family lands in the target class.
bool tuple_survivable(const SelectionProblem& p, const std::vector<const SlotMoves*>& tuple,
                      const std::optional<AnchorPair>& anchor) {
    for (const SlotMoves* slot : tuple) {
        if (!slot->side_condition_met) return true;  // hypothesis fails: no demand
    }

    if (p.refine_selection) {
        // Any refinement usable at some slot may enter the accumulated family,
        // and empty per-slot families are allowed: search subsets of the pool.
        std::vector<PointSet> pool;
        for (const SlotMoves* slot : tuple) {
            for (PointSet v : slot->refine_viable) {
                if (std::find(pool.begin(), pool.end(), v) == pool.end()) pool.push_back(v);
            }
        }
        if (pool.size() > 20) {
            throw CapExceeded("oracle_bounded: refinement pool too large");
        }
        const std::uint32_t limit = std::uint32_t{1} << pool.size();
        for (std::uint32_t mask = 0; mask < limit; ++mask) {
            std::vector<PointSet> family;
            for (size_t k = 0; k < pool.size(); ++k) {
                if ((mask >> k) & 1) family.push_back(pool[k]);
            }
            if (target_satisfied(p, family)) return true;
        }
        return false;
    }

    const bool anchored = anchor.has_value();
    const bool per_set = p.readings.anchor == AnchorReading::per_set;
    for (const SlotMoves* slot : tuple) {
        if (slot->subsets.empty()) return false;  // no legal move at this slot
    }

    std::vector<size_t> idx(tuple.size(), 0);
    while (true) {
        std::vector<PointSet> family;
        for (size_t s = 0; s < tuple.size(); ++s) {
            for (PointSet u : tuple[s]->subsets[idx[s]]) {
                if (std::find(family.begin(), family.end(), u) == family.end()) {
                    family.push_back(u);
                }
            }
        }
        bool win = target_satisfied(p, family);
        if (win && anchored && !per_set) {
            win = set_contains(raw_union(family), anchor->at_one);
        }
        if (win) return true;

        size_t s = tuple.size();
        while (s > 0 && idx[s - 1] + 1 == tuple[s - 1]->subsets.size()) {
            idx[s - 1] = 0;
            --s;
        }
        if (s == 0) return false;
        ++idx[s - 1];
    }
}

bool oracle_decide(const SelectionProblem& p, int L, const std::vector<Cover>& covers) {
    if (covers.empty()) {
        throw InternalEquivalenceViolation("oracle: no adversary covers (empty space?)");
    }
    for (const auto& anchor : anchor_passes(p)) {
        std::vector<SlotMoves> moves;
        moves.reserve(covers.size());
        for (const Cover& c : covers) moves.push_back(slot_moves(p, c, anchor));

        std::vector<size_t> idx(L, 0);
        while (true) {
            std::vector<const SlotMoves*> tuple(L);
            for (int s = 0; s < L; ++s) tuple[s] = &moves[idx[s]];
            if (!tuple_survivable(p, tuple, anchor)) return false;
            int s = L;
            while (s > 0 && idx[s - 1] + 1 == covers.size()) {
                idx[s - 1] = 0;
                --s;
            }
            if (s == 0) break;
            ++idx[s - 1];
        }
    }
    return true;
}

}  // namespace

bool oracle_bounded(const SelectionProblem& p, int L, const DecisionOptions& opts) {
    if (L < 1) throw CapExceeded("oracle_bounded: L must be >= 1");
    const auto covers = adversary_covers(p, opts.cover_cap);
    bool ok = false;
    check_oracle_caps(p, opts, covers.size(), /*throw_on_fail=*/true, ok);
    return oracle_decide(p, L, covers);
}

SelectionReport decide_selection(const SelectionProblem& p, const DecisionOptions& opts) {
    if (!p.Y.valid()) throw ShapeMismatch("decide_selection: invalid space");
    if (p.i != 1 && p.i != 2) throw ShapeMismatch("decide_selection: index must be 1 or 2");
    for (const AnchorPair& a : p.anchors) {
        if (a.at_zero < 0 || a.at_zero >= p.Y.n || a.at_one < 0 || a.at_one >= p.Y.n) {
            throw ShapeMismatch("decide_selection: anchor point out of range");
        }
    }
    const auto covers = adversary_covers(p, opts.cover_cap);
    SelectionReport r = characterize(p, covers);

    if (opts.use_oracle) {
        bool in_caps = false;
        check_oracle_caps(p, opts, covers.size(), /*throw_on_fail=*/false, in_caps);
        if (in_caps) {
            for (int L = 1; L <= opts.oracle_len; ++L) {
                const bool oracle_verdict = oracle_decide(p, L, covers);
                if (oracle_verdict != r.verdict) {
                    throw OracleDisagreement(
                        "decide_selection: characterization says " +
                        std::string(r.verdict ? "true" : "false") + " but the oracle at L=" +
                        std::to_string(L) + " says " + (oracle_verdict ? "true" : "false"));
                }
            }
            r.method = DecisionMethod::both;
            r.oracle_len_checked = opts.oracle_len;
        }
    }
    return r;
}

namespace {

SelectionProblem h_problem(const BitopSpace& y, int i, HProperty property,
                           const std::vector<AnchorPair>& anchors,
                           const Readings& readings) {
    SelectionProblem p;
    p.Y = y;
    p.i = i;
    p.kind = kind_of(property);
    p.mode = mode_of(property);
    p.anchors = anchors;
    p.readings = readings;
    return p;
}

}  // namespace

PropertyReport decide_h_property(const BitopSpace& y, HProperty property,
                                 const HomotopyContext& context,
                                 const Readings& readings, bool force,
                                 const DecisionOptions& opts) {
    if (!context.verified && !force) {
        throw UnverifiedContext("decide_h_property: context '" + context.name +
                                "' is not verified (pass force to analyze anyway)");
    }
    PropertyReport r;
    r.dir12 = decide_selection(h_problem(y, 1, property, context.anchors, readings), opts);
    r.dir21 = decide_selection(h_problem(y, 2, property, context.anchors, readings), opts);
    r.verdict = r.dir12.verdict && r.dir21.verdict;
    return r;
}

PropertyReport delta2_menger(const BitopSpace& y, const DecisionOptions& opts) {
    PropertyReport r;
    for (int i = 1; i <= 2; ++i) {
        SelectionProblem p;
        p.Y = y;
        p.i = i;
        p.mode = SelectMode::finite;
        p.refine_selection = true;
        (i == 1 ? r.dir12 : r.dir21) = decide_selection(p, opts);
    }
    r.verdict = r.dir12.verdict && r.dir21.verdict;
    return r;
}

namespace {

SelectionReport classical(const BitopSpace& y, int i, int j, SelectMode mode,
                          CoverFamilyKind kind, const DecisionOptions& opts) {
    if (i == j || i < 1 || i > 2 || j < 1 || j > 2) {
        throw ShapeMismatch("classical decider: indices must be {1,2} with i != j");
    }
    SelectionProblem p;
    p.Y = y;
    p.i = i;
    p.kind = kind;
    p.mode = mode;
    return decide_selection(p, opts);
}

}  // namespace

SelectionReport weakly_menger(const BitopSpace& y, int i, int j,
                              const DecisionOptions& opts) {
    return classical(y, i, j, SelectMode::finite, CoverFamilyKind::dense_union, opts);
}

SelectionReport almost_menger(const BitopSpace& y, int i, int j,
                              const DecisionOptions& opts) {
    return classical(y, i, j, SelectMode::finite, CoverFamilyKind::closure_cover, opts);
}

SelectionReport almost_rothberger(const BitopSpace& y, int i, int j,
                                  const DecisionOptions& opts) {
    return classical(y, i, j, SelectMode::single, CoverFamilyKind::closure_cover, opts);
}

}  // namespace btds
