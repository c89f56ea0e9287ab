#include <doctest.h>

#include "btds/dynamics.hpp"

using namespace btds;

namespace {

// The two fixture spaces: X = {1, 1/2, 1/3, 1/4} discrete/indiscrete,
// Y = {1, 1/2, 1/3} with psi_1 = {{}, {0}, {0,1}, Y} and psi_2 indiscrete.
BitopSpace fixture_x() {
    return BitopSpace{4, discrete_topology(4), indiscrete_topology(4)};
}

BitopSpace fixture_y() {
    return BitopSpace{3, from_open_family(3, {0b000, 0b111, 0b001, 0b011}),
                      indiscrete_topology(3)};
}

const PointMap fixture_f{4, 4, {1, 1, 1, 1}};      // constant at 1/2
const PointMap fixture_g{3, 3, {1, 2, 0}};         // 1 -> 1/2 -> 1/3 -> 1
const PointMap fixture_F{4, 3, {0, 1, 2, 2}};

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

std::vector<PointMap> all_maps(int dom_n, int cod_n) {
    std::vector<PointMap> out;
    std::vector<int> table(dom_n, 0);
    while (true) {
        out.push_back(PointMap{dom_n, cod_n, table});
        int i = dom_n - 1;
        while (i >= 0 && table[i] == cod_n - 1) table[i--] = 0;
        if (i < 0) break;
        ++table[i];
    }
    return out;
}

}  // namespace

TEST_CASE("composition tables") {
    const PointMap ff = compose(fixture_F, fixture_f);
    CHECK(ff.table == std::vector<int>{1, 1, 1, 1});

    const PointMap gf = compose(fixture_g, fixture_F);
    CHECK(gf.table == std::vector<int>{1, 2, 0, 0});

    CHECK(compose(PointMap::identity(3), fixture_g) == fixture_g);
    CHECK_THROWS_AS(compose(fixture_f, fixture_F), ShapeMismatch);
}

TEST_CASE("continuity, both tests in lockstep") {
    for (const auto& s : all_spaces_up_to(3)) {
        CHECK(is_pairwise_continuous(s, s, PointMap::identity(s.n)));
    }

    // F is pairwise continuous: discrete domain for index 1, indiscrete
    // codomain for index 2.
    CHECK(is_pairwise_continuous(fixture_x(), fixture_y(), fixture_F));

    // g fails psi_1-continuity: the preimage of {0} is {2}, not psi_1-open.
    const auto w = continuity_violation(fixture_y().t1, fixture_y().t1, fixture_g);
    REQUIRE(w.has_value());
    CHECK(w->open_set == 0b001);
    CHECK(fixture_g.preimage(0b001) == 0b100);

    const auto pw = pairwise_continuity_violation(fixture_y(), fixture_y(), fixture_g);
    REQUIRE(pw.has_value());
    CHECK(pw->index == 1);
    CHECK(pw->open_set == 0b001);

    // Everything is continuous into an indiscrete-indiscrete codomain.
    const BitopSpace ind{3, indiscrete_topology(3), indiscrete_topology(3)};
    for (const auto& m : all_maps(3, 3)) {
        CHECK(is_pairwise_continuous(fixture_y(), ind, m));
    }
}

TEST_CASE("checked and unchecked system construction") {
    CHECK_THROWS_AS(Btds::checked(fixture_y(), fixture_g), NotPairwiseContinuous);
    const Btds loaded = Btds::unchecked(fixture_y(), fixture_g);
    CHECK_FALSE(loaded.certified);

    const Btds ok = Btds::checked(fixture_x(), fixture_f);
    CHECK(ok.certified);
}

TEST_CASE("orbits") {
    const BitopSpace ind{3, indiscrete_topology(3), indiscrete_topology(3)};
    const Btds cycle = Btds::checked(ind, PointMap{3, 3, {1, 2, 0}});

    const Orbit fwd = orbit(cycle, 0, OrbitKind::forward);
    CHECK(fwd.points == std::vector<int>{0, 1, 2});
    CHECK(fwd.period == 3);

    const Orbit bwd = orbit(cycle, 0, OrbitKind::backward);
    CHECK(bwd.points == std::vector<int>{0, 2, 1});
    CHECK(bwd.period == 3);

    const Orbit full = orbit(cycle, 0, OrbitKind::full);
    CHECK(full.points == std::vector<int>{0, 1, 2});

    const Btds constant = Btds::checked(fixture_x(), fixture_f);
    const Orbit c = orbit(constant, 0, OrbitKind::forward);
    CHECK(c.points == std::vector<int>{0, 1});
    CHECK(c.period == 1);
    CHECK_THROWS_AS(orbit(constant, 0, OrbitKind::backward), NotInvertible);
}

TEST_CASE("orbits close within n steps") {
    const BitopSpace ind{3, indiscrete_topology(3), indiscrete_topology(3)};
    for (const auto& m : all_maps(3, 3)) {
        const Btds b = Btds::checked(ind, m);
        for (int x = 0; x < 3; ++x) {
            const Orbit o = orbit(b, x, OrbitKind::forward);
            CHECK(o.period >= 1);
            CHECK(static_cast<int>(o.points.size()) <= 3);
            CHECK(o.period <= static_cast<int>(o.points.size()));
        }
    }
}

TEST_CASE("compositions of pairwise continuous maps stay pairwise continuous") {
    // Exhaustive at up to two points; the acceptance suite resamples at n = 3.
    const auto spaces = all_spaces_up_to(2);
    int triples = 0;
    for (const auto& X : spaces) {
        for (const auto& Y : spaces) {
            std::vector<PointMap> fs, gs, Fs;
            for (const auto& m : all_maps(X.n, X.n)) {
                if (is_pairwise_continuous(X, X, m)) fs.push_back(m);
            }
            for (const auto& m : all_maps(Y.n, Y.n)) {
                if (is_pairwise_continuous(Y, Y, m)) gs.push_back(m);
            }
            for (const auto& m : all_maps(X.n, Y.n)) {
                if (is_pairwise_continuous(X, Y, m)) Fs.push_back(m);
            }
            for (const auto& f : fs) {
                for (const auto& g : gs) {
                    for (const auto& F : Fs) {
                        ++triples;
                        CHECK(is_pairwise_continuous(X, Y, compose(F, f)));
                        CHECK(is_pairwise_continuous(X, Y, compose(g, F)));
                    }
                }
            }
        }
    }
    CHECK(triples > 1000);
}
