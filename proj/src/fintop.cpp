#include "btds/fintop.hpp"

#include <algorithm>
#include <set>

namespace btds {

std::string set_to_string(PointSet s, int n) {
    std::string out = "{";
    bool first = true;
    for (int p = 0; p < n; ++p) {
        if (!set_contains(s, p)) continue;
        if (!first) out += ",";
        out += std::to_string(p);
        first = false;
    }
    out += "}";
    return out;
}

bool FiniteTopology::valid() const {
    if (n < 1 || n > max_ground_points) return false;
    if (static_cast<int>(min_nbhd.size()) != n) return false;
    const PointSet full = full_set(n);
    for (int p = 0; p < n; ++p) {
        if (min_nbhd[p] & ~full) return false;
        if (!set_contains(min_nbhd[p], p)) return false;
        for (PointSet m = min_nbhd[p]; m; m &= m - 1) {
            int q = std::countr_zero(m);
            if (min_nbhd[q] & ~min_nbhd[p]) return false;
        }
    }
    return true;
}

FiniteTopology discrete_topology(int n) {
    FiniteTopology t;
    t.n = n;
    t.min_nbhd.resize(n);
    for (int p = 0; p < n; ++p) t.min_nbhd[p] = point_bit(p);
    return t;
}

FiniteTopology indiscrete_topology(int n) {
    FiniteTopology t;
    t.n = n;
    t.min_nbhd.assign(n, full_set(n));
    return t;
}

FiniteTopology from_open_family(int n, const std::vector<PointSet>& family,
                                bool strict) {
    if (n < 1 || n > max_ground_points) {
        throw CapExceeded("from_open_family: point count " + std::to_string(n) +
                          " out of range [1," + std::to_string(max_ground_points) + "]");
    }
    // Closing a family under union/intersection can touch up to 2^n sets.
    if (n > 20) {
        throw CapExceeded("from_open_family: canonicalization capped at 20 points");
    }
    const PointSet full = full_set(n);
    std::set<PointSet> opens;
    for (PointSet u : family) {
        if (u & ~full) {
            throw ParseError("from_open_family: member " + set_to_string(u, 64) +
                             " is not a subset of the ground set");
        }
        opens.insert(u);
    }
    if (strict) {
        if (!opens.count(0) || !opens.count(full)) {
            throw StrictNotATopology(
                "strict topology check: family must contain the empty set and the full set");
        }
        for (PointSet a : opens) {
            for (PointSet b : opens) {
                if (!opens.count(a | b)) {
                    throw StrictNotATopology("strict topology check: union " +
                                             set_to_string(a | b, n) + " missing");
                }
                if (!opens.count(a & b)) {
                    throw StrictNotATopology("strict topology check: intersection " +
                                             set_to_string(a & b, n) + " missing");
                }
            }
        }
    }
    opens.insert(0);
    opens.insert(full);
    // Fixpoint closure under pairwise union/intersection.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<PointSet> cur(opens.begin(), opens.end());
        for (size_t a = 0; a < cur.size(); ++a) {
            for (size_t b = a + 1; b < cur.size(); ++b) {
                if (opens.insert(cur[a] | cur[b]).second) grew = true;
                if (opens.insert(cur[a] & cur[b]).second) grew = true;
            }
        }
    }

    FiniteTopology t;
    t.n = n;
    t.min_nbhd.assign(n, full);
    for (PointSet u : opens) {
        for (PointSet m = u; m; m &= m - 1) {
            t.min_nbhd[std::countr_zero(m)] &= u;
        }
    }
    return t;
}

std::vector<PointSet> enumerate_opens(const FiniteTopology& t, int cap) {
    if (t.n > cap) {
        throw CapExceeded("enumerate_opens: n=" + std::to_string(t.n) +
                          " exceeds cap " + std::to_string(cap));
    }
    std::vector<PointSet> out;
    const PointSet full = full_set(t.n);
    for (PointSet u = 0;; ++u) {
        if (t.is_open(u)) out.push_back(u);
        if (u == full) break;
    }
    return out;
}

namespace {

// Branch on the least uncovered point: every irredundant cover is reached
// because each of its members keeps a point the others miss.
void irredundant_cover_search(const std::vector<PointSet>& opens, PointSet full,
                              std::vector<PointSet>& chosen, PointSet covered,
                              std::set<std::vector<PointSet>>& out) {
    if (covered == full) {
        for (size_t k = 0; k < chosen.size(); ++k) {
            PointSet rest = 0;
            for (size_t l = 0; l < chosen.size(); ++l) {
                if (l != k) rest |= chosen[l];
            }
            if (rest == full) return;  // member k removable
        }
        std::vector<PointSet> key = chosen;
        std::sort(key.begin(), key.end());
        out.insert(std::move(key));
        return;
    }
    const int p = first_point(full & ~covered);
    for (PointSet u : opens) {
        if (!set_contains(u, p)) continue;
        if ((u & ~covered) == 0) continue;
        chosen.push_back(u);
        irredundant_cover_search(opens, full, chosen, covered | u, out);
        chosen.pop_back();
    }
}

}  // namespace

std::vector<Cover> enumerate_irredundant_covers(const FiniteTopology& t,
                                                int topology_index, int cap) {
    if (t.n > cap) {
        throw CapExceeded("enumerate_irredundant_covers: n=" + std::to_string(t.n) +
                          " exceeds cap " + std::to_string(cap));
    }
    std::vector<PointSet> opens;
    for (PointSet u : enumerate_opens(t, cap)) {
        if (u != 0) opens.push_back(u);
    }
    std::set<std::vector<PointSet>> found;
    std::vector<PointSet> chosen;
    irredundant_cover_search(opens, full_set(t.n), chosen, 0, found);

    std::vector<Cover> out;
    out.reserve(found.size());
    for (const auto& members : found) {
        out.push_back(Cover{members, topology_index});
    }
    return out;  // std::set iteration is already the canonical order
}

std::vector<FiniteTopology> enumerate_topologies(int n, int cap) {
    if (n > cap) {
        throw CapExceeded("enumerate_topologies: n=" + std::to_string(n) +
                          " exceeds cap " + std::to_string(cap));
    }
    if (n < 1) throw CapExceeded("enumerate_topologies: n must be >= 1");

    // Candidate minimal neighborhoods per point: masks containing the point,
    // ascending; the odometer below therefore emits lexicographic order.
    std::vector<std::vector<PointSet>> candidates(n);
    const PointSet full = full_set(n);
    for (int p = 0; p < n; ++p) {
        for (PointSet u = 0; u <= full; ++u) {
            if (set_contains(u, p)) candidates[p].push_back(u);
        }
    }

    std::vector<FiniteTopology> out;
    std::vector<size_t> idx(n, 0);
    FiniteTopology t;
    t.n = n;
    t.min_nbhd.resize(n);
    while (true) {
        for (int p = 0; p < n; ++p) t.min_nbhd[p] = candidates[p][idx[p]];
        bool transitive = true;
        for (int p = 0; p < n && transitive; ++p) {
            for (PointSet m = t.min_nbhd[p]; m; m &= m - 1) {
                if (t.min_nbhd[std::countr_zero(m)] & ~t.min_nbhd[p]) {
                    transitive = false;
                    break;
                }
            }
        }
        if (transitive) out.push_back(t);

        int p = n - 1;
        while (p >= 0 && idx[p] + 1 == candidates[p].size()) {
            idx[p] = 0;
            --p;
        }
        if (p < 0) break;
        ++idx[p];
    }
    return out;
}

}  // namespace btds
