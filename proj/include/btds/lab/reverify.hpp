#ifndef BTDS_LAB_REVERIFY_HPP
#define BTDS_LAB_REVERIFY_HPP

#include "btds/lab/sweep.hpp"

namespace btds::lab {

struct ReverifyResult {
    std::size_t confirmed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    std::string text;
};

// Re-checks every finding in a findings file from its own embedded data:
// claim mismatches are re-run from the embedded instance document, search
// findings are recomputed from the recorded topology pair and context, and
// recorded refuting covers are structurally validated. Independent of the
// run that produced the file.
ReverifyResult cmd_reverify(const std::string& findings_path);

}  // namespace btds::lab

#endif
