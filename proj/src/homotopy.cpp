#include "btds/homotopy.hpp"

namespace btds {

IntervalModel standard_interval(int k) {
    if (k < 1) throw CapExceeded("standard_interval: k must be >= 1");
    if (2 * k + 1 > max_ground_points) {
        throw CapExceeded("standard_interval: model would exceed the point-set width");
    }
    const int n = 2 * k + 1;
    FiniteTopology t;
    t.n = n;
    t.min_nbhd.resize(n);
    for (int p = 0; p < n; ++p) {
        if (p % 2 == 1) {
            t.min_nbhd[p] = point_bit(p);  // open point
        } else {
            PointSet m = point_bit(p);
            if (p > 0) m |= point_bit(p - 1);
            if (p < n - 1) m |= point_bit(p + 1);
            t.min_nbhd[p] = m;  // closed point plus adjacent open points
        }
    }

    IntervalModel model;
    model.space = BitopSpace{n, t, t};
    model.e0 = 0;
    model.e1 = n - 1;
    model.interior = full_set(n) & ~point_bit(0) & ~point_bit(n - 1);
    model.reversal = PointMap{n, n, {}};
    model.reversal.table.resize(n);
    for (int p = 0; p < n; ++p) model.reversal.table[p] = n - 1 - p;

    if (!is_pairwise_homeomorphism(model.space, model.reversal) ||
        !is_pairwise_continuous(model.space, model.space, model.reversal)) {
        throw InternalEquivalenceViolation("standard_interval: reversal is not a homeomorphism");
    }
    return model;
}

ProductSpace product(const BitopSpace& left, const BitopSpace& right, int cap) {
    const int n = left.n * right.n;
    if (n > cap || n > max_ground_points) {
        throw CapExceeded("product: " + std::to_string(left.n) + "x" +
                          std::to_string(right.n) + " exceeds cap");
    }
    ProductSpace p;
    p.left = left;
    p.right = right;
    p.space.n = n;
    for (int index = 1; index <= 2; ++index) {
        FiniteTopology t;
        t.n = n;
        t.min_nbhd.resize(n);
        const FiniteTopology& lt = left.topo(index);
        const FiniteTopology& rt = right.topo(index);
        for (int a = 0; a < left.n; ++a) {
            for (int b = 0; b < right.n; ++b) {
                PointSet m = 0;
                for (PointSet la = lt.min_nbhd[a]; la; la &= la - 1) {
                    const int aa = std::countr_zero(la);
                    for (PointSet rb = rt.min_nbhd[b]; rb; rb &= rb - 1) {
                        m |= point_bit(aa * right.n + std::countr_zero(rb));
                    }
                }
                t.min_nbhd[a * right.n + b] = m;
            }
        }
        (index == 1 ? p.space.t1 : p.space.t2) = std::move(t);
    }
    return p;
}

PointMap left_projection(const ProductSpace& p) {
    PointMap m{p.space.n, p.left.n, std::vector<int>(p.space.n)};
    for (int i = 0; i < p.space.n; ++i) m.table[i] = i / p.right.n;
    return m;
}

PointMap right_projection(const ProductSpace& p) {
    PointMap m{p.space.n, p.right.n, std::vector<int>(p.space.n)};
    for (int i = 0; i < p.space.n; ++i) m.table[i] = i % p.right.n;
    return m;
}

BitopPath BitopPath::make(IntervalModel t, BitopSpace y, PointMap map) {
    if (map.dom_n != t.n() || map.cod_n != y.n) {
        throw ShapeMismatch("BitopPath: map shape does not match model/space");
    }
    if (auto w = pairwise_continuity_violation(t.space, y, map)) {
        throw NotPairwiseContinuous("BitopPath: map is not pairwise continuous; open " +
                                    set_to_string(w->open_set, y.n) + " fails on index " +
                                    std::to_string(w->index));
    }
    BitopPath p{std::move(t), std::move(y), std::move(map), 0, 0};
    p.start = p.map(p.T.e0);
    p.end = p.map(p.T.e1);
    return p;
}

namespace {

void require_homotopy_shapes(const Homotopy& h, const PointMap& f, const PointMap& g) {
    if (!h.shapes_ok()) throw ShapeMismatch("homotopy: table/F shapes inconsistent");
    if (f.dom_n != h.X.n || f.cod_n != h.X.n) throw ShapeMismatch("homotopy: f is not a self-map of X");
    if (g.dom_n != h.Y.n || g.cod_n != h.Y.n) throw ShapeMismatch("homotopy: g is not a self-map of Y");
    for (int v : h.table) {
        if (v < 0 || v >= h.Y.n) throw ShapeMismatch("homotopy: table value out of range");
    }
}

std::optional<PairwiseContinuityWitness> table_continuity_violation(const Homotopy& h) {
    const ProductSpace prod = product(h.X, h.T.space);
    return pairwise_continuity_violation(prod.space, h.Y, h.as_point_map());
}

}  // namespace

HomotopyVerdict verify_btds_homotopy(const Homotopy& h, const PointMap& f,
                                     const PointMap& g) {
    require_homotopy_shapes(h, f, g);
    HomotopyVerdict v;
    for (int x = 0; x < h.X.n; ++x) {
        if (h.at(x, h.T.e0) != h.F(f(x))) {
            v.boundary = BoundaryWitness{x, 0};
            break;
        }
        if (h.at(x, h.T.e1) != g(h.F(x))) {
            v.boundary = BoundaryWitness{x, 1};
            break;
        }
    }
    v.continuity = table_continuity_violation(h);
    v.ok = !v.boundary && !v.continuity;
    return v;
}

HomotopyVerdict verify_iteration_homotopy(const Homotopy& h, const PointMap& f,
                                          const PointMap& g, int x0, int budget) {
    require_homotopy_shapes(h, f, g);
    if (x0 < 0 || x0 >= h.X.n) throw ShapeMismatch("iteration homotopy: x0 out of range");

    HomotopyVerdict v;
    // The conditions are indexed by the orbit, not by all of X.
    std::vector<bool> seen(h.X.n, false);
    int xn = x0;
    for (int step = 0; step < budget && !seen[xn]; ++step) {
        seen[xn] = true;
        const int xnext = f(xn);
        if (h.at(xnext, h.T.e0) != h.F(f(xn))) {
            v.boundary = BoundaryWitness{xnext, 0};
            break;
        }
        if (h.at(xnext, h.T.e1) != g(h.F(xn))) {
            v.boundary = BoundaryWitness{xnext, 1};
            break;
        }
        xn = xnext;
    }
    v.continuity = table_continuity_violation(h);
    v.ok = !v.boundary && !v.continuity;
    return v;
}

Homotopy reverse(const Homotopy& h) {
    Homotopy r = h;
    for (int x = 0; x < h.X.n; ++x) {
        for (int t = 0; t < h.T.n(); ++t) {
            r.at(x, t) = h.at(x, h.T.reversal(t));
        }
    }
    return r;
}

HomotopyVerdict verify_btds_homotopy_swapped(const Homotopy& h, const PointMap& f,
                                             const PointMap& g) {
    require_homotopy_shapes(h, f, g);
    HomotopyVerdict v;
    for (int x = 0; x < h.X.n; ++x) {
        if (h.at(x, h.T.e0) != g(h.F(x))) {
            v.boundary = BoundaryWitness{x, 0};
            break;
        }
        if (h.at(x, h.T.e1) != h.F(f(x))) {
            v.boundary = BoundaryWitness{x, 1};
            break;
        }
    }
    v.continuity = table_continuity_violation(h);
    v.ok = !v.boundary && !v.continuity;
    return v;
}

PathHomotopyVerdict verify_path_homotopy(const Homotopy& h,
                                         const IntervalModel& t_dom,
                                         const PointMap& f, const PointMap& g,
                                         int x, int y) {
    if (h.X != t_dom.space) {
        throw ShapeMismatch("path homotopy: homotopy domain is not the given interval model");
    }
    require_homotopy_shapes(h, f, g);
    if (h.F(t_dom.e0) != x || h.F(t_dom.e1) != y) {
        throw ShapeMismatch("path homotopy: F is not a path from x to y");
    }

    PathHomotopyVerdict v;
    // Endpoint columns are constant at x and y across every time level.
    for (int t = 0; t < h.T.n() && !v.condition; ++t) {
        if (h.at(t_dom.e0, t) != x) {
            v.condition = PathHomotopyWitness{PathHomotopyWitness::Kind::endpoint_column, t_dom.e0, t};
        } else if (h.at(t_dom.e1, t) != y) {
            v.condition = PathHomotopyWitness{PathHomotopyWitness::Kind::endpoint_column, t_dom.e1, t};
        }
    }
    // Boundary rows hold for interior domain points only.
    for (PointSet ms = t_dom.interior; ms && !v.condition; ms &= ms - 1) {
        const int m = std::countr_zero(ms);
        if (h.at(m, h.T.e0) != h.F(f(m))) {
            v.condition = PathHomotopyWitness{PathHomotopyWitness::Kind::interior_row, m, 0};
        } else if (h.at(m, h.T.e1) != g(h.F(m))) {
            v.condition = PathHomotopyWitness{PathHomotopyWitness::Kind::interior_row, m, 1};
        }
    }
    v.continuity = table_continuity_violation(h);
    v.ok = !v.condition && !v.continuity;
    return v;
}

namespace {

// Odometer over the free cells, ascending values, last cell fastest: the
// first verified table is the canonical minimum.
template <typename Verify>
SearchResult search_tables(Homotopy h, const std::vector<int>& free_cells,
                           std::uint64_t budget, Verify&& verified) {
    SearchResult r;
    for (int c : free_cells) h.table[c] = 0;
    while (true) {
        ++r.tried;
        if (verified(h)) {
            r.status = SearchStatus::found;
            r.homotopy = h;
            return r;
        }
        if (r.tried >= budget) {
            r.status = SearchStatus::timeout;
            return r;
        }
        int i = static_cast<int>(free_cells.size()) - 1;
        while (i >= 0 && h.table[free_cells[i]] == h.Y.n - 1) {
            h.table[free_cells[i]] = 0;
            --i;
        }
        if (i < 0) {
            r.status = SearchStatus::exhausted;
            return r;
        }
        ++h.table[free_cells[i]];
    }
}

}  // namespace

SearchResult search_btds_homotopy(const BitopSpace& X, const BitopSpace& Y,
                                  const IntervalModel& T, const PointMap& f,
                                  const PointMap& g, const PointMap& F,
                                  std::uint64_t budget) {
    Homotopy h;
    h.X = X;
    h.Y = Y;
    h.T = T;
    h.F = F;
    h.table.assign(X.n * T.n(), 0);

    std::vector<int> free_cells;
    for (int x = 0; x < X.n; ++x) {
        for (int t = 0; t < T.n(); ++t) {
            if (t == T.e0) {
                h.at(x, t) = F(f(x));
            } else if (t == T.e1) {
                h.at(x, t) = g(F(x));
            } else {
                free_cells.push_back(x * T.n() + t);
            }
        }
    }
    SearchResult r = search_tables(std::move(h), free_cells, budget,
                                   [&](const Homotopy& cand) {
                                       return verify_btds_homotopy(cand, f, g).ok;
                                   });
    r.level = (T.n() - 1) / 2;
    return r;
}

SearchResult search_path_homotopy(const IntervalModel& t_dom, const BitopSpace& Y,
                                  const IntervalModel& T, const PointMap& f,
                                  const PointMap& g, const PointMap& F, int x,
                                  int y, std::uint64_t budget) {
    if (F(t_dom.e0) != x || F(t_dom.e1) != y) {
        throw ShapeMismatch("search_path_homotopy: F is not a path from x to y");
    }
    Homotopy h;
    h.X = t_dom.space;
    h.Y = Y;
    h.T = T;
    h.F = F;
    h.table.assign(h.X.n * T.n(), 0);

    std::vector<int> free_cells;
    for (int m = 0; m < h.X.n; ++m) {
        for (int t = 0; t < T.n(); ++t) {
            if (m == t_dom.e0) {
                h.at(m, t) = x;
            } else if (m == t_dom.e1) {
                h.at(m, t) = y;
            } else if (t == T.e0) {
                h.at(m, t) = F(f(m));
            } else if (t == T.e1) {
                h.at(m, t) = g(F(m));
            } else {
                free_cells.push_back(m * T.n() + t);
            }
        }
    }
    SearchResult r = search_tables(std::move(h), free_cells, budget,
                                   [&](const Homotopy& cand) {
                                       return verify_path_homotopy(cand, t_dom, f, g, x, y).ok;
                                   });
    r.level = (T.n() - 1) / 2;
    return r;
}

SearchResult search_btds_homotopy_escalating(const BitopSpace& X,
                                             const BitopSpace& Y,
                                             const PointMap& f, const PointMap& g,
                                             const PointMap& F, int k_cap,
                                             std::uint64_t budget) {
    SearchResult last;
    for (int k = 1; k <= k_cap; ++k) {
        last = search_btds_homotopy(X, Y, standard_interval(k), f, g, F, budget);
        if (last.status == SearchStatus::found) return last;
    }
    return last;
}

SearchResult search_path_homotopy_escalating(const IntervalModel& t_dom,
                                             const BitopSpace& Y, const PointMap& f,
                                             const PointMap& g, const PointMap& F,
                                             int x, int y, int k_cap,
                                             std::uint64_t budget) {
    SearchResult last;
    for (int k = 1; k <= k_cap; ++k) {
        last = search_path_homotopy(t_dom, Y, standard_interval(k), f, g, F, x, y, budget);
        if (last.status == SearchStatus::found) return last;
    }
    return last;
}

Homotopy reembed(const Homotopy& h, int k2) {
    const int k = (h.T.n() - 1) / 2;
    if (h.T.space != standard_interval(k).space) {
        throw ShapeMismatch("reembed: homotopy is not on a standard interval model");
    }
    if (k2 % k != 0) {
        throw ShapeMismatch("reembed: target level must be a multiple of the source level");
    }
    const IntervalModel fine = standard_interval(k2);
    const int m = k2 / k;

    // Subdivision quotient fine -> coarse: closed point i/k2 goes to the
    // aligned coarse closed point when m divides i, otherwise to the open
    // point of the coarse subinterval containing it; open points go to the
    // open point of their enclosing coarse subinterval.
    PointMap q{fine.n(), h.T.n(), std::vector<int>(fine.n())};
    for (int p = 0; p < fine.n(); ++p) {
        if (p % 2 == 0) {
            const int i = p / 2;
            q.table[p] = (i % m == 0) ? 2 * (i / m) : 2 * ((i / m) + 1) - 1;
        } else {
            const int i = (p + 1) / 2;  // fine subinterval number, 1-based
            q.table[p] = 2 * (((i - 1) / m) + 1) - 1;
        }
    }
    if (!is_pairwise_continuous(fine.space, h.T.space, q)) {
        throw InternalEquivalenceViolation("reembed: subdivision quotient is not continuous");
    }

    Homotopy out;
    out.X = h.X;
    out.Y = h.Y;
    out.T = fine;
    out.F = h.F;
    out.table.assign(h.X.n * fine.n(), 0);
    for (int x = 0; x < h.X.n; ++x) {
        for (int t = 0; t < fine.n(); ++t) {
            out.at(x, t) = h.at(x, q(t));
        }
    }
    return out;
}

}  // namespace btds
