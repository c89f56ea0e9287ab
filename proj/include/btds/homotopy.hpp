#ifndef BTDS_HOMOTOPY_HPP
#define BTDS_HOMOTOPY_HPP

#include <cstdint>
#include <optional>

#include "btds/dynamics.hpp"

namespace btds {

inline constexpr int default_interval_escalation_cap = 3;
inline constexpr int default_product_cap = 64;
inline constexpr std::uint64_t default_search_budget = 4'000'000;

// Finite stand-in for the unit interval: two closed endpoints, open interior
// points, both topologies equal, and an order-reversing automorphism.
// Homotopy verification against such a model is sound: a pairwise continuous
// table on X x model induces a genuine homotopy on X x [0,1] through the
// quotient that sends 0 and 1 to the endpoints and open subintervals to the
// open points. Failure at one level refutes nothing; callers escalate k.
struct IntervalModel {
    BitopSpace space;
    int e0 = 0;
    int e1 = 0;
    PointSet interior = 0;  // all non-endpoint points
    PointMap reversal;      // pairwise homeomorphism swapping e0 and e1

    int n() const { return space.n; }
};

// The 2k+1 point model with alternating closed points c0..ck and open points
// o1..ok; c_i sits at index 2i, o_i at 2i-1. min_nbhd(o) = {o} and
// min_nbhd(c) adds the adjacent open points.
IntervalModel standard_interval(int k);

// Product of two bitopological spaces: minimal neighborhoods are computed
// componentwise per topology index. Point (a, b) lives at index a*right.n + b.
struct ProductSpace {
    BitopSpace left;
    BitopSpace right;
    BitopSpace space;

    int index(int a, int b) const { return a * right.n + b; }
};

ProductSpace product(const BitopSpace& left, const BitopSpace& right,
                     int cap = default_product_cap);

PointMap left_projection(const ProductSpace& p);
PointMap right_projection(const ProductSpace& p);

// A finite homotopy table H : X x T -> Y together with the bridging map F.
// Nothing is verified at construction; unverified tables are loadable
// fixtures and verification is an operation.
struct Homotopy {
    BitopSpace X;
    BitopSpace Y;
    IntervalModel T;
    PointMap F;               // X -> Y
    std::vector<int> table;   // value in Y at (x, t), row-major in x

    int at(int x, int t) const { return table[x * T.n() + t]; }
    int& at(int x, int t) { return table[x * T.n() + t]; }

    PointMap as_point_map() const {
        return PointMap{X.n * T.n(), Y.n, table};
    }

    bool shapes_ok() const {
        return static_cast<int>(table.size()) == X.n * T.n() &&
               F.dom_n == X.n && F.cod_n == Y.n;
    }
};

// Pairwise continuous map from an interval model into Y hitting start and end
// at the endpoints.
struct BitopPath {
    IntervalModel T;
    BitopSpace Y;
    PointMap map;
    int start = 0;
    int end = 0;

    static BitopPath make(IntervalModel t, BitopSpace y, PointMap map);
};

struct BoundaryWitness {
    int x = 0;    // domain point whose boundary row is wrong
    int end = 0;  // 0 for the e0 condition, 1 for the e1 condition
};

struct HomotopyVerdict {
    bool ok = false;
    std::optional<BoundaryWitness> boundary;
    std::optional<PairwiseContinuityWitness> continuity;
};

// H is a homotopy between f and g relative to H.F: boundary rows satisfy
// H(x, e0) = (F o f)(x) and H(x, e1) = (g o F)(x) for every x, and the table
// is pairwise continuous on product(X, T).
HomotopyVerdict verify_btds_homotopy(const Homotopy& h, const PointMap& f,
                                     const PointMap& g);

// Iteration variant: the boundary conditions are imposed only along the orbit
// x0, x1 = f(x0), ...: H(x_{n+1}, e0) = (F o f)(x_n), H(x_{n+1}, e1) =
// (g o F)(x_n), until the orbit cycles or the budget runs out.
HomotopyVerdict verify_iteration_homotopy(const Homotopy& h, const PointMap& f,
                                          const PointMap& g, int x0,
                                          int budget = default_orbit_budget);

// H*(x, t) = H(x, reversal(t)). Involution; swaps the boundary roles of f, g.
Homotopy reverse(const Homotopy& h);

// Verification with the composite roles traded: the e0 column must carry
// (g o F) and the e1 column (F o f). This is what a reversed homotopy
// satisfies; the pre/post typing of the two composites cannot literally swap
// f and g when X and Y differ.
HomotopyVerdict verify_btds_homotopy_swapped(const Homotopy& h, const PointMap& f,
                                             const PointMap& g);

struct PathHomotopyWitness {
    enum class Kind { endpoint_column, interior_row } kind = Kind::endpoint_column;
    int m = 0;    // domain point
    int t = 0;    // time point (endpoint_column) or end index (interior_row)
};

struct PathHomotopyVerdict {
    bool ok = false;
    std::optional<PathHomotopyWitness> condition;
    std::optional<PairwiseContinuityWitness> continuity;
};

// Path homotopy between f (a self-map of the domain interval model t_dom) and
// g relative to the path h.F from x to y. Endpoint columns stay at x and y
// for every time level; the two boundary-row conditions apply to interior
// domain points only, which is how the endpoint rows escape them.
PathHomotopyVerdict verify_path_homotopy(const Homotopy& h,
                                         const IntervalModel& t_dom,
                                         const PointMap& f, const PointMap& g,
                                         int x, int y);

enum class SearchStatus { found, exhausted, timeout };

struct SearchResult {
    SearchStatus status = SearchStatus::exhausted;
    std::optional<Homotopy> homotopy;
    int level = 0;            // interval subdivision k that produced the result
    std::uint64_t tried = 0;  // candidate tables examined
};

// Exhaustive search for a verified homotopy with the boundary cells pinned.
// Free cells are enumerated in ascending canonical order, so a found table is
// the canonical minimum among all verified tables.
SearchResult search_btds_homotopy(const BitopSpace& X, const BitopSpace& Y,
                                  const IntervalModel& T, const PointMap& f,
                                  const PointMap& g, const PointMap& F,
                                  std::uint64_t budget = default_search_budget);

SearchResult search_path_homotopy(const IntervalModel& t_dom, const BitopSpace& Y,
                                  const IntervalModel& T, const PointMap& f,
                                  const PointMap& g, const PointMap& F, int x,
                                  int y,
                                  std::uint64_t budget = default_search_budget);

// Retry at time level k = 1, 2, ..., k_cap until found; the result records
// the level. For path searches the domain model is part of the instance and
// stays fixed; only the time model escalates.
SearchResult search_btds_homotopy_escalating(
    const BitopSpace& X, const BitopSpace& Y, const PointMap& f,
    const PointMap& g, const PointMap& F,
    int k_cap = default_interval_escalation_cap,
    std::uint64_t budget = default_search_budget);

SearchResult search_path_homotopy_escalating(
    const IntervalModel& t_dom, const BitopSpace& Y, const PointMap& f,
    const PointMap& g, const PointMap& F, int x, int y,
    int k_cap = default_interval_escalation_cap,
    std::uint64_t budget = default_search_budget);

// Transport a table on X x model(k) to X x model(k2), k2 >= k, through the
// subdivision quotient (endpoint to endpoint, everything strictly inside to
// the coarse model's matching cell). Verified homotopies stay verified.
Homotopy reembed(const Homotopy& h, int k2);

}  // namespace btds

#endif
