#ifndef BTDS_LAB_INSTANCE_HPP
#define BTDS_LAB_INSTANCE_HPP

#include <map>
#include <optional>

#include "btds/context.hpp"
#include "btds/lab/config.hpp"
#include "btds/lab/json_util.hpp"

namespace btds::lab {

// A declared space: labeled points plus two topologies given as explicit open
// families ("discrete" / "indiscrete" shorthands allowed), or a standard
// interval model ({"interval_k": k}).
struct SpaceDoc {
    std::string name;
    std::vector<std::string> labels;
    BitopSpace space;
    std::optional<IntervalModel> interval;

    int label_index(const std::string& label) const;
};

struct MapDoc {
    std::string name;
    std::string from;
    std::string to;
    PointMap map;
};

struct HomotopyDoc {
    std::string name;
    std::string x;
    std::string y;
    std::string f;  // bridging map id
    Homotopy homotopy;
};

// A parsed instance document: named spaces, maps and homotopy tables together
// with the declared claims to evaluate.
struct InstanceDoc {
    std::string name;
    std::string anchor;
    int interval_k = 1;
    std::map<std::string, SpaceDoc> spaces;
    std::map<std::string, MapDoc> maps;
    std::map<std::string, HomotopyDoc> homotopies;
    json claims = json::array();

    const SpaceDoc& space(const std::string& id) const;
    const MapDoc& map(const std::string& id) const;
    const HomotopyDoc& homotopy(const std::string& id) const;
};

InstanceDoc parse_instance(const json& doc, bool strict_topology);
InstanceDoc parse_instance_text(const std::string& text, bool strict_topology);
InstanceDoc parse_instance_file(const std::string& path, bool strict_topology);

struct ClaimResult {
    json claim;     // the declared claim, echoed
    json expected;
    json computed;
    bool match = false;
    json witness;   // machine-checkable payload on interesting verdicts
    std::string method;
};

struct CheckReport {
    std::string name;
    std::string anchor;
    std::vector<ClaimResult> claims;
    std::size_t matched = 0;
    std::size_t mismatched = 0;

    json to_json() const;
    std::string to_text() const;
};

// Evaluates every declared claim. Claim mismatches are data (reported, not
// fatal); genuinely broken inputs raise ParseError and internal-invariant
// failures propagate.
CheckReport run_claims(const InstanceDoc& doc, const SweepConfig& config);

}  // namespace btds::lab

#endif
