#include <doctest.h>

#include "btds/bitop.hpp"

using namespace btds;

namespace {

BitopSpace space(const FiniteTopology& t1, const FiniteTopology& t2) {
    return BitopSpace{t1.n, t1, t2};
}

FiniteTopology sierpinski() { return from_open_family(2, {0b00, 0b01, 0b11}); }

// psi_1 of the three-point fixture space.
FiniteTopology psi1() { return from_open_family(3, {0b000, 0b111, 0b001, 0b011}); }

std::vector<BitopSpace> all_spaces_up_to(int n_max) {
    std::vector<BitopSpace> out;
    for (int n = 1; n <= n_max; ++n) {
        const auto topologies = enumerate_topologies(n);
        for (const auto& a : topologies) {
            for (const auto& b : topologies) out.push_back(space(a, b));
        }
    }
    return out;
}

}  // namespace

TEST_CASE("pairwise T1") {
    CHECK(is_pairwise_t1(space(discrete_topology(2), discrete_topology(2))));
    CHECK_FALSE(is_pairwise_t1(space(discrete_topology(2), indiscrete_topology(2))));
    CHECK_FALSE(is_pairwise_t1(space(discrete_topology(3), indiscrete_topology(3))));

    // Fixture Y space: psi_2 indiscrete, so no pair is T1-separated; the
    // returned witness must be a genuine violation.
    const BitopSpace y = space(psi1(), indiscrete_topology(3));
    const auto w = pairwise_t1_violation(y);
    REQUIRE(w.has_value());
    CHECK(w->x != w->y);
    bool v_exists = false;
    for (PointSet v : enumerate_opens(y.t2)) {
        if (set_contains(v, w->y) && !set_contains(v, w->x)) v_exists = true;
    }
    bool u_exists = false;
    for (PointSet u : enumerate_opens(y.t1)) {
        if (set_contains(u, w->x) && !set_contains(u, w->y)) u_exists = true;
    }
    CHECK((!u_exists || !v_exists));
}

TEST_CASE("pairwise T1 is invariant under swapping the topologies") {
    for (const auto& s : all_spaces_up_to(3)) {
        CHECK(is_pairwise_t1(s) == is_pairwise_t1(swap_topologies(s)));
    }
}

TEST_CASE("regularity and its three internal forms") {
    CHECK(is_regular_wrt(space(discrete_topology(2), discrete_topology(2)), 1));
    CHECK(is_regular_wrt(space(discrete_topology(2), discrete_topology(2)), 2));

    const BitopSpace si = space(sierpinski(), indiscrete_topology(2));
    const auto w = regularity_violation(si, 1);
    REQUIRE(w.has_value());
    CHECK(w->x == 0);
    CHECK(w->closed_set == 0b10);

    // Indiscrete first factor: only closed sets are empty and full, so with
    // the empty-set convention index 1 is always regular.
    for (const auto& t : enumerate_topologies(3)) {
        CHECK(is_regular_wrt(space(indiscrete_topology(3), t), 1));
    }

    // The three formulations must agree everywhere (no throw).
    for (const auto& s : all_spaces_up_to(3)) {
        CHECK_NOTHROW(regularity_violation(s, 1));
        CHECK_NOTHROW(regularity_violation(s, 2));
    }
}

TEST_CASE("pairwise T3 decomposes definitionally") {
    CHECK(is_pairwise_t3(space(discrete_topology(2), discrete_topology(2))));
    CHECK_FALSE(is_pairwise_t3(space(discrete_topology(2), indiscrete_topology(2))));
    CHECK_FALSE(is_pairwise_t3(space(sierpinski(), indiscrete_topology(2))));

    for (const auto& s : all_spaces_up_to(3)) {
        if (is_pairwise_t3(s)) {
            CHECK(is_pairwise_t1(s));
            CHECK(is_regular_wrt(s, 1));
            CHECK(is_regular_wrt(s, 2));
        }
    }
}

TEST_CASE("finite spaces are locally compact pairwise P-spaces") {
    for (const auto& s : all_spaces_up_to(2)) {
        CHECK(is_locally_compact_wrt(s, 1));
        CHECK(is_locally_compact_wrt(s, 2));
        CHECK(is_pairwise_locally_compact(s));
        CHECK(is_pairwise_p_space(s));
    }
    CHECK(is_pairwise_locally_compact(space(psi1(), indiscrete_topology(3))));
}

TEST_CASE("inclusion of t1 in t2 under regular+Hausdorff+locally-compact") {
    const auto dd = check_prop_2_2(space(discrete_topology(2), discrete_topology(2)));
    CHECK(dd.verdict == Prop22Verdict::confirmed);

    const auto si = check_prop_2_2(space(sierpinski(), indiscrete_topology(2)));
    CHECK(si.verdict == Prop22Verdict::vacuous);

    // Indiscrete t1 is contained in every t2: whatever the hypotheses say,
    // this can never come out violated.
    const auto id = check_prop_2_2(space(indiscrete_topology(2), discrete_topology(2)));
    CHECK(id.verdict != Prop22Verdict::violated);

    for (const auto& s : all_spaces_up_to(3)) {
        const auto r = check_prop_2_2(s);
        CHECK(r.verdict != Prop22Verdict::violated);
    }
}

TEST_CASE("adopted vs one-sided Hausdorff readings") {
    const BitopSpace dd = space(discrete_topology(2), discrete_topology(2));
    CHECK(is_pairwise_hausdorff(dd));
    CHECK(is_pairwise_hausdorff_weak(dd));

    const BitopSpace di = space(discrete_topology(2), indiscrete_topology(2));
    CHECK_FALSE(is_pairwise_hausdorff(di));
    CHECK_FALSE(is_pairwise_hausdorff_weak(di));

    // The strong reading implies the weak one everywhere.
    for (const auto& s : all_spaces_up_to(3)) {
        if (is_pairwise_hausdorff(s)) CHECK(is_pairwise_hausdorff_weak(s));
    }
}
