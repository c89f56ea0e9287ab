#ifndef BTDS_SELECTION_HPP
#define BTDS_SELECTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "btds/bitop.hpp"

namespace btds {

// The three target families. For a space (Y, psi_1, psi_2) with source index
// i and j the other index:
//   open_cover    O_j      : families of psi_j-open sets covering Y,
//   closure_cover O-bar_ij : families of psi_i-open sets whose psi_j-closures
//                            cover Y,
//   dense_union   O^D_ij   : families of psi_i-open sets whose union is
//                            psi_j-dense.
enum class CoverFamilyKind { open_cover, closure_cover, dense_union };

struct FamilyKind {
    CoverFamilyKind kind = CoverFamilyKind::open_cover;
    int i = 1;
    int j = 2;
};

// Membership of an explicit family in the indicated target class.
bool family_member(const FamilyKind& kind, const BitopSpace& y,
                   const std::vector<PointSet>& family);

// Select one set per cover (S_1) or finitely many (S_fin).
enum class SelectMode { single, finite };

// How the anchor condition "H(x,1) in U_n for each n" is read for S_1:
// per_set demands the anchor in every selected set (the literal reading);
// union_only demands it in the union of all selections. For S_fin the same
// flag switches between the per-cover union (literal) and the global union.
enum class AnchorReading { per_set, union_only };

// Whether selections aimed at O_j must themselves be psi_j-open (strict, the
// default: O_j consists of psi_j-open covers) or merely need to cover.
enum class TargetOpenness { strict, cover_only };

struct Readings {
    AnchorReading anchor = AnchorReading::per_set;
    TargetOpenness target = TargetOpenness::strict;

    bool operator==(const Readings&) const = default;
};

// The pair (H(x,0), H(x,1)) contributed by one domain point x: at_zero feeds
// the side condition "H(x,0) in the union of every adversary cover", at_one
// is the anchor each selection must hit.
struct AnchorPair {
    int at_zero = 0;
    int at_one = 0;

    auto operator<=>(const AnchorPair&) const = default;
};

enum class ContextKind { h, hi, ph };

const char* to_string(ContextKind k);

// Descriptor of a verified homotopy: just the anchor pairs the selection
// hypotheses quantify over, plus the verification verdict. Deciders refuse
// unverified contexts unless forced.
struct HomotopyContext {
    ContextKind kind = ContextKind::h;
    std::vector<AnchorPair> anchors;
    bool verified = false;
    std::string name;
};

struct SelectionProblem {
    BitopSpace Y;
    int i = 1;  // adversary covers are psi_i-open covers
    CoverFamilyKind kind = CoverFamilyKind::open_cover;
    SelectMode mode = SelectMode::single;
    // Empty means the classical, unanchored reading.
    std::vector<AnchorPair> anchors;
    Readings readings;
    // delta_2-style selection: instead of cover members, pick psi_j-open
    // refinements of cover members.
    bool refine_selection = false;

    int j() const { return 3 - i; }
};

enum class DecisionMethod { characterization, both };

// Player strategy against one adversary cover: the canonical-minimum
// subfamily that satisfies the target (per anchor when anchored).
struct CoverSelection {
    Cover cover;
    std::optional<AnchorPair> anchor;
    std::vector<PointSet> chosen;
};

// One adversary cover the player cannot survive, with the point that stays
// uncovered under the best possible selection.
struct Refutation {
    Cover cover;
    std::optional<AnchorPair> anchor;
    int uncoverable_point = 0;
};

struct SelectionReport {
    bool verdict = false;
    DecisionMethod method = DecisionMethod::characterization;
    int oracle_len_checked = 0;
    std::vector<CoverSelection> selections;  // verdict true
    std::optional<Refutation> refutation;    // verdict false
};

struct DecisionOptions {
    int cover_cap = default_open_cap;
    bool use_oracle = true;
    int oracle_len = 2;
    int oracle_opens_cap = 12;
    int oracle_covers_cap = 64;
};

// Decides the infinite-sequence selection property by the constant-cover
// characterization (every irredundant adversary cover must be survivable on
// its own), cross-checked against the bounded oracle whenever the instance is
// inside the oracle caps. A mismatch throws OracleDisagreement.
//
// The characterization is valid because adversary sequences over finitely
// many covers repeat some cover infinitely often, selections may be spread
// across repetitions, and enlarging a cover only helps the player, so
// irredundant covers are the worst adversaries. The oracle never relies on
// any of that: it enumerates bounded adversary tuples and searches selections
// exhaustively.
SelectionReport decide_selection(const SelectionProblem& p,
                                 const DecisionOptions& opts = {});

// Length-L adversary tuples over irredundant covers, each slot standing for
// infinitely many repetitions of its cover; exhaustive selection search.
// CapExceeded outside the oracle caps.
bool oracle_bounded(const SelectionProblem& p, int L,
                    const DecisionOptions& opts = {});

enum class HProperty {
    rothberger,
    almost_rothberger,
    weak_rothberger,
    menger,
    almost_menger,
    weak_menger,
};

const char* to_string(HProperty p);
SelectMode mode_of(HProperty p);
CoverFamilyKind kind_of(HProperty p);

// Both directions of a homotopy-based property.
struct PropertyReport {
    bool verdict = false;
    SelectionReport dir12;
    SelectionReport dir21;
};

// The (1,2) and (2,1) directions of the selection hypothesis named by
// `property`, anchored by the context. Throws UnverifiedContext for an
// unverified context unless force is set.
PropertyReport decide_h_property(const BitopSpace& y, HProperty property,
                                 const HomotopyContext& context,
                                 const Readings& readings = {},
                                 bool force = false,
                                 const DecisionOptions& opts = {});

// Classical (unanchored) deciders. delta_2-Menger quantifies both source
// indices; the others are single-direction, (i, j)-parameterized.
PropertyReport delta2_menger(const BitopSpace& y, const DecisionOptions& opts = {});
SelectionReport weakly_menger(const BitopSpace& y, int i, int j,
                              const DecisionOptions& opts = {});
SelectionReport almost_menger(const BitopSpace& y, int i, int j,
                              const DecisionOptions& opts = {});
SelectionReport almost_rothberger(const BitopSpace& y, int i, int j,
                                  const DecisionOptions& opts = {});

}  // namespace btds

#endif
