#ifndef BTDS_LAB_CONFIG_HPP
#define BTDS_LAB_CONFIG_HPP

#include <string>

#include "btds/selection.hpp"

namespace btds::lab {

// Hard limits; SweepConfig values beyond these are input errors.
inline constexpr int hard_max_points = 4;
inline constexpr int hard_max_interval_k = 3;
inline constexpr int hard_max_oracle_len = 4;

// Everything a sweep, search or verification run needs. Loaded from the file
// named by BTDS_LAB_CONFIG when set, then overridden by CLI flags.
struct SweepConfig {
    int max_points = 3;
    int interval_k = 1;
    int oracle_len = 2;
    int workers = 1;
    unsigned seed = 1;
    bool strict_topology = false;
    bool dedup_iso = false;
    bool force_contexts = false;
    Readings readings;
    std::string out;
    std::string findings_out;
    std::string predicate;

    DecisionOptions decision_options() const {
        DecisionOptions o;
        o.oracle_len = oracle_len;
        return o;
    }

    void validate() const;

    // Semantic fields only (no paths, no worker count): two runs with equal
    // keys must produce byte-identical atlases.
    std::string canonical_key() const;
};

// Name of the environment variable pointing at a JSON defaults file.
inline constexpr const char* config_env_var = "BTDS_LAB_CONFIG";

// Applies the env-named defaults file to c (missing file with unset variable
// is fine; a set variable naming an unreadable/bad file is a ParseError).
void apply_env_defaults(SweepConfig& c);

}  // namespace btds::lab

#endif
