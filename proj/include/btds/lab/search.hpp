#ifndef BTDS_LAB_SEARCH_HPP
#define BTDS_LAB_SEARCH_HPP

#include "btds/lab/predicate.hpp"
#include "btds/lab/sweep.hpp"

namespace btds::lab {

struct Finding {
    AtlasRecord record;
    // Full reports for every property the predicate mentions, keyed by name.
    json witnesses;
    bool oracle_reconfirmed = false;
};

struct SearchOutcome {
    std::vector<Finding> findings;
    std::size_t instances_scanned = 0;
    std::string exhausted_bound;  // human-readable statement of what was swept
};

// Scans the configured sweep, keeps the records matching the predicate, and
// re-derives every mentioned property with the oracle cross-check required.
// Writes a findings file to c.out when set (header, one finding per line,
// summary line last).
SearchOutcome cmd_search(const SweepConfig& c, const std::string& predicate_text);

std::string findings_header_line(const SweepConfig& c, const std::string& predicate_text);
std::string finding_to_line(const Finding& f, const SweepConfig& c);
std::string findings_summary_line(const SearchOutcome& o);

}  // namespace btds::lab

#endif
