#ifndef BTDS_LAB_SWEEP_HPP
#define BTDS_LAB_SWEEP_HPP

#include <map>

#include "btds/context.hpp"
#include "btds/lab/config.hpp"
#include "btds/lab/json_util.hpp"

namespace btds::lab {

// One atlas row: a topology pair plus one bundled context.
struct SweepInstance {
    BitopSpace space;
    int bundle_index = 0;
    std::string key;
    std::uint64_t hash = 0;
};

// All instances for the config, sorted by (hash, key): the canonical record
// order of the atlas.
std::vector<SweepInstance> list_instances(const SweepConfig& c);

// Number of distinct topology pairs the listing covers.
std::size_t count_pairs(const SweepConfig& c);

struct AtlasRecord {
    std::string key;
    std::uint64_t hash = 0;
    int n = 0;
    std::vector<PointSet> t1_opens;
    std::vector<PointSet> t2_opens;
    std::string context;
    std::vector<AnchorPair> h_anchors, hi_anchors, ph_anchors;
    std::map<std::string, bool> props;
    std::vector<std::string> divergent;  // verdicts that flip under alternate readings
    bool oracle_everywhere = false;      // every default-reading decision ran both paths
};

AtlasRecord compute_record(const SweepInstance& inst, const SweepConfig& c);

// Records for every instance, in canonical order, fanned out over
// c.workers threads.
std::vector<AtlasRecord> compute_all_records(const SweepConfig& c);

std::string record_to_line(const AtlasRecord& r);
std::string atlas_header_line(const SweepConfig& c, std::size_t instances);

struct EnumerateResult {
    std::size_t pairs = 0;
    std::vector<std::size_t> pairs_per_n;  // indexed by n-1
    std::size_t rows = 0;
    std::size_t resumed_from = 0;  // records already present before this run
};

// Writes (or resumes) the atlas at c.out. Resume requires a matching header;
// the appended bytes always equal what a fresh single run would have written.
EnumerateResult cmd_enumerate(const SweepConfig& c);

// Canonical property names in a fixed order, for predicate validation and
// report layout.
const std::vector<std::string>& property_names();

}  // namespace btds::lab

#endif
