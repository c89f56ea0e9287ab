#include <doctest.h>

#include "btds/context.hpp"
#include "btds/selection.hpp"

using namespace btds;

namespace {

// The separating two-point instance: psi_1 discrete, psi_2 indiscrete.
BitopSpace disc_indisc() {
    return BitopSpace{2, discrete_topology(2), indiscrete_topology(2)};
}

HomotopyContext const_context(const BitopSpace& s, int p) {
    return make_context_library(s)[p].h;
}

std::vector<BitopSpace> all_spaces_up_to(int n_max) {
    std::vector<BitopSpace> out;
    for (int n = 1; n <= n_max; ++n) {
        const auto ts = enumerate_topologies(n);
        for (const auto& a : ts) {
            for (const auto& b : ts) out.push_back(BitopSpace{n, a, b});
        }
    }
    return out;
}

const std::vector<HProperty> all_properties = {
    HProperty::rothberger,      HProperty::almost_rothberger, HProperty::weak_rothberger,
    HProperty::menger,          HProperty::almost_menger,     HProperty::weak_menger,
};

}  // namespace

TEST_CASE("family membership per target class") {
    const BitopSpace y = disc_indisc();
    const std::vector<PointSet> just_a{0b01};
    CHECK(family_member(FamilyKind{CoverFamilyKind::closure_cover, 1, 2}, y, just_a));
    CHECK_FALSE(family_member(FamilyKind{CoverFamilyKind::open_cover, 1, 2}, y, just_a));
    CHECK(family_member(FamilyKind{CoverFamilyKind::dense_union, 1, 2}, y, just_a));

    const std::vector<PointSet> whole{0b11};
    CHECK(family_member(FamilyKind{CoverFamilyKind::closure_cover, 1, 2}, y, whole));
    CHECK(family_member(FamilyKind{CoverFamilyKind::open_cover, 1, 2}, y, whole));
    CHECK(family_member(FamilyKind{CoverFamilyKind::dense_union, 1, 2}, y, whole));

    const std::vector<PointSet> empty_member{0b00};
    CHECK_FALSE(family_member(FamilyKind{CoverFamilyKind::closure_cover, 1, 2}, y, empty_member));
    CHECK_FALSE(family_member(FamilyKind{CoverFamilyKind::open_cover, 1, 2}, y, empty_member));
    CHECK_FALSE(family_member(FamilyKind{CoverFamilyKind::dense_union, 1, 2}, y, empty_member));
}

TEST_CASE("single selection into the three target classes") {
    const BitopSpace y = disc_indisc();
    SelectionProblem p;
    p.Y = y;
    p.i = 1;
    p.mode = SelectMode::single;
    p.anchors = {AnchorPair{0, 0}};

    p.kind = CoverFamilyKind::closure_cover;
    const auto almost = decide_selection(p);
    CHECK(almost.verdict);
    CHECK(almost.method == DecisionMethod::both);

    p.kind = CoverFamilyKind::open_cover;
    const auto plain = decide_selection(p);
    CHECK_FALSE(plain.verdict);
    REQUIRE(plain.refutation.has_value());
    CHECK(plain.refutation->cover.members == std::vector<PointSet>{0b01, 0b10});
    CHECK(plain.refutation->uncoverable_point == 0);

    // Indiscrete source index: the only adversary cover is {Y}.
    SelectionProblem q;
    q.Y = y;
    q.i = 2;
    q.anchors = {AnchorPair{0, 0}};
    for (auto kind : {CoverFamilyKind::open_cover, CoverFamilyKind::closure_cover,
                      CoverFamilyKind::dense_union}) {
        for (auto mode : {SelectMode::single, SelectMode::finite}) {
            q.kind = kind;
            q.mode = mode;
            CHECK(decide_selection(q).verdict);
        }
    }
}

TEST_CASE("refuting covers are genuine covers") {
    const BitopSpace y = disc_indisc();
    SelectionProblem p;
    p.Y = y;
    p.i = 1;
    p.mode = SelectMode::single;
    p.kind = CoverFamilyKind::open_cover;
    p.anchors = {AnchorPair{0, 0}};
    const auto r = decide_selection(p);
    REQUIRE(r.refutation.has_value());
    PointSet uni = 0;
    for (PointSet m : r.refutation->cover.members) {
        CHECK(y.t1.is_open(m));
        CHECK(m != 0);
        uni |= m;
    }
    CHECK(uni == full_set(y.n));
}

TEST_CASE("homotopy-based properties on the separating instance") {
    const BitopSpace y = disc_indisc();
    const HomotopyContext ctx = const_context(y, 0);

    CHECK(decide_h_property(y, HProperty::almost_rothberger, ctx).verdict);
    CHECK_FALSE(decide_h_property(y, HProperty::rothberger, ctx).verdict);
    CHECK_FALSE(decide_h_property(y, HProperty::menger, ctx).verdict);
    CHECK(decide_h_property(y, HProperty::almost_menger, ctx).verdict);
    CHECK(decide_h_property(y, HProperty::weak_rothberger, ctx).verdict);
    CHECK(decide_h_property(y, HProperty::weak_menger, ctx).verdict);

    // The (2,1) direction is trivial: the only psi_2-cover is {Y}.
    CHECK(decide_h_property(y, HProperty::rothberger, ctx).dir21.verdict);

    const BitopSpace one{1, discrete_topology(1), discrete_topology(1)};
    const HomotopyContext cone = const_context(one, 0);
    for (HProperty prop : all_properties) {
        CHECK(decide_h_property(one, prop, cone).verdict);
    }
}

TEST_CASE("unverified contexts are refused without force") {
    const BitopSpace y = disc_indisc();
    HomotopyContext ctx = const_context(y, 0);
    ctx.verified = false;
    CHECK_THROWS_AS(decide_h_property(y, HProperty::rothberger, ctx), UnverifiedContext);
    CHECK_NOTHROW(decide_h_property(y, HProperty::rothberger, ctx, Readings{}, true));
}

TEST_CASE("iteration variant equals the plain one on matching anchors") {
    const BitopSpace y = disc_indisc();
    const auto bundles = make_context_library(y);
    for (const auto& b : bundles) {
        if (b.h.anchors != b.hi.anchors) continue;
        for (HProperty prop : all_properties) {
            CHECK(decide_h_property(y, prop, b.h).verdict ==
                  decide_h_property(y, prop, b.hi).verdict);
        }
    }
}

TEST_CASE("classical deciders") {
    const BitopSpace dd{2, discrete_topology(2), discrete_topology(2)};
    CHECK(delta2_menger(dd).verdict);
    CHECK(weakly_menger(dd, 1, 2).verdict);
    CHECK(almost_menger(dd, 1, 2).verdict);
    CHECK(almost_rothberger(dd, 1, 2).verdict);

    const BitopSpace y = disc_indisc();
    const auto d2 = delta2_menger(y);
    CHECK_FALSE(d2.verdict);
    CHECK_FALSE(d2.dir12.verdict);  // {{a},{b}} admits no indiscrete refinement
    CHECK(d2.dir21.verdict);        // only cover {Y}, refined by the open Y
    REQUIRE(d2.dir12.refutation.has_value());
    CHECK(d2.dir12.refutation->cover.members == std::vector<PointSet>{0b01, 0b10});

    CHECK(almost_rothberger(y, 1, 2).verdict);
    CHECK(almost_rothberger(y, 2, 1).verdict);
    CHECK(weakly_menger(y, 1, 2).verdict);
    CHECK(almost_menger(y, 1, 2).verdict);
}

TEST_CASE("bounded oracle: failures persist as the tuples grow") {
    const BitopSpace y = disc_indisc();
    SelectionProblem p;
    p.Y = y;
    p.i = 1;
    p.mode = SelectMode::single;
    p.kind = CoverFamilyKind::open_cover;
    p.anchors = {AnchorPair{0, 0}};
    CHECK_FALSE(oracle_bounded(p, 1));
    CHECK_FALSE(oracle_bounded(p, 2));
    CHECK_FALSE(oracle_bounded(p, 3));

    SelectionProblem q = p;
    q.i = 2;  // indiscrete source: the single cover {Y} survives every length
    CHECK(oracle_bounded(q, 1));
    CHECK(oracle_bounded(q, 2));
    CHECK(oracle_bounded(q, 3));
}

TEST_CASE("dual paths agree across the two-point sweep") {
    for (const auto& s : all_spaces_up_to(2)) {
        for (const auto& b : make_context_library(s)) {
            for (HProperty prop : all_properties) {
                const auto r = decide_h_property(s, prop, b.h);
                CHECK(r.dir12.method == DecisionMethod::both);
                CHECK(r.dir21.method == DecisionMethod::both);
                CHECK_NOTHROW(decide_h_property(s, prop, b.ph));
            }
        }
        CHECK_NOTHROW(delta2_menger(s));
        CHECK_NOTHROW(weakly_menger(s, 1, 2));
        CHECK_NOTHROW(weakly_menger(s, 2, 1));
        CHECK_NOTHROW(almost_menger(s, 1, 2));
        CHECK_NOTHROW(almost_rothberger(s, 1, 2));
    }
}

TEST_CASE("implication arrows over the two-point sweep") {
    for (const auto& s : all_spaces_up_to(2)) {
        for (const auto& b : make_context_library(s)) {
            const auto value = [&](HProperty prop) {
                return decide_h_property(s, prop, b.h).verdict;
            };
            const bool r = value(HProperty::rothberger);
            const bool ar = value(HProperty::almost_rothberger);
            const bool wr = value(HProperty::weak_rothberger);
            const bool m = value(HProperty::menger);
            const bool am = value(HProperty::almost_menger);
            const bool wm = value(HProperty::weak_menger);
            CHECK((!r || ar));
            CHECK((!ar || wr));
            CHECK((!m || am));
            CHECK((!am || wm));
            CHECK((!r || m));
            CHECK((!ar || am));
            CHECK((!wr || wm));
            // Every finite space is a pairwise P-space, so almost and weak
            // variants must coincide.
            CHECK(ar == wr);
            CHECK(am == wm);
        }
    }
}

TEST_CASE("anchors act monotonically") {
    for (const auto& s : all_spaces_up_to(2)) {
        if (s.n < 2) continue;
        for (HProperty prop : all_properties) {
            for (int i = 1; i <= 2; ++i) {
                SelectionProblem small;
                small.Y = s;
                small.i = i;
                small.kind = kind_of(prop);
                small.mode = mode_of(prop);
                small.anchors = {AnchorPair{0, 0}};
                SelectionProblem large = small;
                large.anchors = {AnchorPair{0, 0}, AnchorPair{1, 1}};
                if (decide_selection(large).verdict) {
                    CHECK(decide_selection(small).verdict);
                }
            }
        }
    }
}

TEST_CASE("alternate readings flip the expected verdicts") {
    const BitopSpace y = disc_indisc();
    SelectionProblem p;
    p.Y = y;
    p.i = 1;
    p.mode = SelectMode::single;
    p.kind = CoverFamilyKind::open_cover;
    p.anchors = {AnchorPair{0, 0}};

    CHECK_FALSE(decide_selection(p).verdict);

    p.readings = Readings{AnchorReading::per_set, TargetOpenness::cover_only};
    CHECK_FALSE(decide_selection(p).verdict);  // selections holding a never reach b

    p.readings = Readings{AnchorReading::union_only, TargetOpenness::strict};
    CHECK_FALSE(decide_selection(p).verdict);  // no psi_2-open member exists at all

    p.readings = Readings{AnchorReading::union_only, TargetOpenness::cover_only};
    CHECK(decide_selection(p).verdict);  // the whole cover may be collected
}

TEST_CASE("restricting adversaries to irredundant covers loses nothing") {
    // Independent route: closed-form constant-cover survivability evaluated
    // over ALL covers (any subset of nonempty opens whose union is the
    // space), not just the irredundant ones the engine enumerates.
    const auto all_covers = [](const FiniteTopology& t) {
        std::vector<std::vector<PointSet>> covers;
        std::vector<PointSet> opens;
        for (PointSet u : enumerate_opens(t)) {
            if (u != 0) opens.push_back(u);
        }
        for (std::uint32_t pick = 1; pick < (1u << opens.size()); ++pick) {
            std::vector<PointSet> cover;
            PointSet uni = 0;
            for (size_t k = 0; k < opens.size(); ++k) {
                if ((pick >> k) & 1) {
                    cover.push_back(opens[k]);
                    uni |= opens[k];
                }
            }
            if (uni == full_set(t.n)) covers.push_back(std::move(cover));
        }
        return covers;
    };
    // Closed forms for the default readings (per-set anchor, strict target).
    const auto survivable = [](const BitopSpace& y, int i,
                               const std::vector<PointSet>& cover, int a,
                               SelectMode mode, CoverFamilyKind kind) {
        const int j = 3 - i;
        const PointSet full = full_set(y.n);
        PointSet anchored_union = 0, anchored_closures = 0, open_union = 0;
        bool open_carrier = false, carrier = false;
        for (PointSet u : cover) {
            const bool has_a = set_contains(u, a);
            carrier = carrier || has_a;
            if (has_a) {
                anchored_union |= u;
                anchored_closures |= y.topo(j).closure(u);
            }
            if (y.topo(j).is_open(u)) {
                open_union |= u;
                if (has_a) open_carrier = true;
            }
        }
        if (mode == SelectMode::single) {
            switch (kind) {
                case CoverFamilyKind::open_cover: {
                    PointSet anchored_open = 0;
                    for (PointSet u : cover) {
                        if (set_contains(u, a) && y.topo(j).is_open(u)) anchored_open |= u;
                    }
                    return anchored_open == full;
                }
                case CoverFamilyKind::closure_cover:
                    return anchored_closures == full;
                case CoverFamilyKind::dense_union:
                    return y.topo(j).closure(anchored_union) == full;
            }
        }
        switch (kind) {
            case CoverFamilyKind::open_cover:
                return open_carrier && open_union == full;
            case CoverFamilyKind::closure_cover:
            case CoverFamilyKind::dense_union:
                return carrier;  // whole cover selectable; closures reach everything
        }
        return false;
    };

    for (const auto& s : all_spaces_up_to(2)) {
        for (int i = 1; i <= 2; ++i) {
            const auto covers = all_covers(s.topo(i));
            for (int a = 0; a < s.n; ++a) {
                for (HProperty prop : all_properties) {
                    SelectionProblem p;
                    p.Y = s;
                    p.i = i;
                    p.kind = kind_of(prop);
                    p.mode = mode_of(prop);
                    p.anchors = {AnchorPair{a, a}};
                    bool over_all = true;
                    for (const auto& cover : covers) {
                        over_all = over_all &&
                                   survivable(s, i, cover, a, p.mode, p.kind);
                    }
                    CHECK(decide_selection(p).verdict == over_all);
                }
            }
        }
    }
}

TEST_CASE("selection witnesses are canonical minima") {
    const BitopSpace y = disc_indisc();
    SelectionProblem p;
    p.Y = y;
    p.i = 1;
    p.mode = SelectMode::single;
    p.kind = CoverFamilyKind::closure_cover;
    p.anchors = {AnchorPair{0, 0}};
    const auto r = decide_selection(p);
    REQUIRE(r.verdict);
    REQUIRE_FALSE(r.selections.empty());
    for (const auto& sel : r.selections) {
        REQUIRE(sel.chosen.size() == 1);  // one anchored member already closes up
        CHECK(set_contains(sel.chosen[0], 0));
        CHECK(y.t2.closure(sel.chosen[0]) == full_set(2));
    }
}
