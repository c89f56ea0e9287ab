#include "btds/context.hpp"

namespace btds {

namespace {

std::vector<AnchorPair> homotopy_anchors(const Homotopy& h) {
    std::vector<AnchorPair> out;
    for (int x = 0; x < h.X.n; ++x) {
        out.push_back(AnchorPair{h.at(x, h.T.e0), h.at(x, h.T.e1)});
    }
    return out;
}

std::vector<AnchorPair> iteration_anchors(const Homotopy& h, const PointMap& f, int x0) {
    // The conditions of the iteration variant run over x_1 = f(x_0), x_2, ...
    std::vector<AnchorPair> out;
    std::vector<bool> seen(h.X.n, false);
    int xn = x0;
    while (!seen[xn]) {
        seen[xn] = true;
        const int xnext = f(xn);
        out.push_back(AnchorPair{h.at(xnext, h.T.e0), h.at(xnext, h.T.e1)});
        xn = xnext;
    }
    return out;
}

std::vector<AnchorPair> path_anchors(const Homotopy& h, const IntervalModel& t_dom) {
    std::vector<AnchorPair> out;
    for (PointSet ms = t_dom.interior; ms; ms &= ms - 1) {
        const int m = std::countr_zero(ms);
        out.push_back(AnchorPair{h.at(m, h.T.e0), h.at(m, h.T.e1)});
    }
    return out;
}

[[noreturn]] void bundle_bug(const std::string& name, const std::string& what) {
    throw InternalEquivalenceViolation("context library: " + name + ": " + what);
}

}  // namespace

std::vector<ContextBundle> make_context_library(const BitopSpace& s, int k) {
    if (!s.valid()) throw ShapeMismatch("make_context_library: invalid space");
    const IntervalModel T = standard_interval(k);
    std::vector<ContextBundle> out;

    const BitopSpace one{1, discrete_topology(1), discrete_topology(1)};
    const PointMap id_one = PointMap::identity(1);
    const PointMap id_s = PointMap::identity(s.n);

    for (int p = 0; p < s.n; ++p) {
        ContextBundle b;
        b.name = "const@" + std::to_string(p);

        Homotopy h;
        h.X = one;
        h.Y = s;
        h.T = T;
        h.F = PointMap::constant(1, s.n, p);
        h.table.assign(T.n(), p);
        if (!verify_btds_homotopy(h, id_one, id_s).ok) bundle_bug(b.name, "H not verified");
        b.h = HomotopyContext{ContextKind::h, homotopy_anchors(h), true, b.name};
        if (!verify_iteration_homotopy(h, id_one, id_s, 0).ok) bundle_bug(b.name, "HI not verified");
        b.hi = HomotopyContext{ContextKind::hi, iteration_anchors(h, id_one, 0), true, b.name};

        Homotopy hp;
        hp.X = T.space;
        hp.Y = s;
        hp.T = T;
        hp.F = PointMap::constant(T.n(), s.n, p);  // constant path at p
        hp.table.assign(T.n() * T.n(), p);
        const PointMap id_dom = PointMap::identity(T.n());
        if (!verify_path_homotopy(hp, T, id_dom, id_s, p, p).ok) bundle_bug(b.name, "PH not verified");
        b.ph = HomotopyContext{ContextKind::ph, path_anchors(hp, T), true, b.name};

        out.push_back(std::move(b));
    }

    if (s.n >= 2) {
        ContextBundle b;
        b.name = "id";

        Homotopy h;
        h.X = s;
        h.Y = s;
        h.T = T;
        h.F = id_s;
        h.table.assign(s.n * T.n(), 0);
        for (int x = 0; x < s.n; ++x) {
            for (int t = 0; t < T.n(); ++t) h.at(x, t) = x;
        }
        if (!verify_btds_homotopy(h, id_s, id_s).ok) bundle_bug(b.name, "H not verified");
        b.h = HomotopyContext{ContextKind::h, homotopy_anchors(h), true, b.name};
        if (!verify_iteration_homotopy(h, id_s, id_s, 0).ok) bundle_bug(b.name, "HI not verified");
        b.hi = HomotopyContext{ContextKind::hi, iteration_anchors(h, id_s, 0), true, b.name};
        b.ph = out[0].ph;  // no surjective path exists in general; reuse const@0
        b.ph.name = b.name;
        out.push_back(std::move(b));
    }
    return out;
}

}  // namespace btds
