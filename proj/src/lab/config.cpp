#include "btds/lab/config.hpp"

#include <cstdlib>
#include <fstream>

#include "btds/lab/json_util.hpp"

namespace btds::lab {

void SweepConfig::validate() const {
    if (max_points < 1 || max_points > hard_max_points) {
        throw ParseError("config: max_points must be in [1," +
                         std::to_string(hard_max_points) + "]");
    }
    if (interval_k < 1 || interval_k > hard_max_interval_k) {
        throw ParseError("config: interval_k must be in [1," +
                         std::to_string(hard_max_interval_k) + "]");
    }
    if (oracle_len < 1 || oracle_len > hard_max_oracle_len) {
        throw ParseError("config: oracle_len must be in [1," +
                         std::to_string(hard_max_oracle_len) + "]");
    }
    if (workers < 1 || workers > 64) {
        throw ParseError("config: workers must be in [1,64]");
    }
}

std::string SweepConfig::canonical_key() const {
    std::string key = "max_points=" + std::to_string(max_points);
    key += ";interval_k=" + std::to_string(interval_k);
    key += ";oracle_len=" + std::to_string(oracle_len);
    key += ";seed=" + std::to_string(seed);
    key += ";anchor=";
    key += readings.anchor == AnchorReading::per_set ? "per-set" : "union";
    key += ";target=";
    key += readings.target == TargetOpenness::strict ? "strict" : "cover-only";
    key += ";dedup_iso=" + std::to_string(dedup_iso ? 1 : 0);
    return key;
}

void apply_env_defaults(SweepConfig& c) {
    const char* path = std::getenv(config_env_var);
    if (!path || !*path) return;
    std::ifstream in(path);
    if (!in) {
        throw ParseError(std::string("config: cannot read ") + config_env_var +
                         " file: " + path);
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ParseError(std::string("config: bad JSON in defaults file: ") + e.what());
    }
    if (doc.contains("max_points")) c.max_points = doc["max_points"].get<int>();
    if (doc.contains("interval_k")) c.interval_k = doc["interval_k"].get<int>();
    if (doc.contains("oracle_len")) c.oracle_len = doc["oracle_len"].get<int>();
    if (doc.contains("workers")) c.workers = doc["workers"].get<int>();
    if (doc.contains("seed")) c.seed = doc["seed"].get<unsigned>();
    if (doc.contains("strict_topology")) c.strict_topology = doc["strict_topology"].get<bool>();
    if (doc.contains("dedup_iso")) c.dedup_iso = doc["dedup_iso"].get<bool>();
    if (doc.contains("anchor_reading")) {
        const std::string v = doc["anchor_reading"].get<std::string>();
        if (v == "per-set") {
            c.readings.anchor = AnchorReading::per_set;
        } else if (v == "union") {
            c.readings.anchor = AnchorReading::union_only;
        } else {
            throw ParseError("config: anchor_reading must be per-set or union");
        }
    }
    if (doc.contains("target_openness")) {
        const std::string v = doc["target_openness"].get<std::string>();
        if (v == "strict") {
            c.readings.target = TargetOpenness::strict;
        } else if (v == "cover-only") {
            c.readings.target = TargetOpenness::cover_only;
        } else {
            throw ParseError("config: target_openness must be strict or cover-only");
        }
    }
}

}  // namespace btds::lab
