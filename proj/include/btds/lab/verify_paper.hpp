#ifndef BTDS_LAB_VERIFY_PAPER_HPP
#define BTDS_LAB_VERIFY_PAPER_HPP

#include "btds/lab/instance.hpp"
#include "btds/lab/sweep.hpp"

namespace btds::lab {

// Compositions of pairwise continuous maps stay pairwise continuous:
// exhaustive over all space pairs with up to two points, sampled at three.
struct CompositionSuite {
    std::size_t exhaustive_triples = 0;
    std::size_t sampled_triples = 0;
    std::size_t violations = 0;
};
CompositionSuite run_composition_suite(unsigned seed, std::size_t sample_target);

// Reflexivity / symmetry / transitivity witness constructions over every
// search success with |X|, |Y| (and the third space) at most two, k = 1.
struct EquivalenceSuite {
    std::size_t reflexivity_instances = 0;
    std::size_t success_instances = 0;
    std::size_t symmetry_checked = 0;
    std::size_t transitivity_checked = 0;
    std::size_t failures = 0;
};
EquivalenceSuite run_equivalence_suite();

// The seven arrows of each implication diagram, evaluated per atlas row.
struct ImplicationStats {
    std::size_t rows = 0;
    std::size_t h_violations = 0;
    std::size_t ph_violations = 0;
};
ImplicationStats check_implication_diagram(const std::vector<AtlasRecord>& records);

// Conditional equivalences: almost vs weak on every row (finite spaces are
// pairwise P-spaces) and the full collapse on pairwise-T3 rows.
struct EquivalenceStats {
    std::size_t rows = 0;
    std::size_t p_space_violations = 0;
    std::size_t t3_rows = 0;
    std::size_t t3_violations = 0;
};
EquivalenceStats check_conditional_equivalences(const std::vector<AtlasRecord>& records);

struct DualPathStats {
    std::size_t rows = 0;
    std::size_t oracle_everywhere = 0;
};
DualPathStats check_dual_path(const std::vector<AtlasRecord>& records);

struct VerifyPaperResult {
    std::string text;             // byte-stable across identical configs
    std::vector<json> findings;   // machine-checkable records for reverify
    std::size_t pass = 0;
    std::size_t finding_count = 0;
    std::size_t vacuous = 0;
};

// Runs the bundled fixtures and the exhaustive suites; pre-computed records
// may be supplied to avoid re-sweeping.
VerifyPaperResult cmd_verify_paper(const SweepConfig& c,
                                   const std::vector<AtlasRecord>* records = nullptr);

}  // namespace btds::lab

#endif
