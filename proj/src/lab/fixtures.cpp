#include "btds/lab/fixtures.hpp"

namespace btds::lab {

namespace {

// Two dynamical systems on {1, 1/2, 1/3, 1/4} and {1, 1/2, 1/3}: f collapses
// everything to 1/2, g cycles the three points, F identifies 1/4 with 1/3.
// The declared claims are the source assertions; the g and K continuity
// claims are expected to come back as mismatches with witnesses.
const char* example_3_1 = R"json({
  "name": "example-3.1",
  "anchor": "example-3.1",
  "interval_k": 1,
  "spaces": {
    "X": {"points": ["1", "1/2", "1/3", "1/4"], "t1": "discrete", "t2": "indiscrete"},
    "Y": {"points": ["1", "1/2", "1/3"],
          "t1": {"opens": [[], ["1"], ["1", "1/2"], ["1", "1/2", "1/3"]]},
          "t2": "indiscrete"}
  },
  "maps": {
    "f": {"from": "X", "to": "X",
          "table": {"1": "1/2", "1/2": "1/2", "1/3": "1/2", "1/4": "1/2"}},
    "g": {"from": "Y", "to": "Y", "table": {"1": "1/2", "1/2": "1/3", "1/3": "1"}},
    "F": {"from": "X", "to": "Y",
          "table": {"1": "1", "1/2": "1/2", "1/3": "1/3", "1/4": "1/3"}}
  },
  "homotopies": {
    "K": {"X": "X", "Y": "Y", "F": "F", "k": 1,
          "rows": {"1":   ["1/2", "1/2", "1/2"],
                   "1/2": ["1/2", "1/3", "1/3"],
                   "1/3": ["1/2", "1", "1"],
                   "1/4": ["1/2", "1", "1"]}}
  },
  "claims": [
    {"check": "pairwise_continuous", "map": "f", "expect": true},
    {"check": "pairwise_continuous", "map": "F", "expect": true},
    {"check": "continuous", "map": "g", "index": 1, "expect": true},
    {"check": "pairwise_continuous", "map": "g", "expect": true},
    {"check": "compose_table", "outer": "F", "inner": "f",
     "equals": {"1": "1/2", "1/2": "1/2", "1/3": "1/2", "1/4": "1/2"}, "expect": true},
    {"check": "compose_table", "outer": "g", "inner": "F",
     "equals": {"1": "1/2", "1/2": "1/3", "1/3": "1", "1/4": "1"}, "expect": true},
    {"check": "btds_homotopy_boundary", "homotopy": "K", "f": "f", "g": "g", "expect": true},
    {"check": "btds_homotopy", "homotopy": "K", "f": "f", "g": "g", "expect": true},
    {"check": "search_homotopy", "X": "X", "Y": "Y", "f": "f", "g": "g", "F": "F",
     "expect": "found"},
    {"check": "pairwise_t1", "space": "Y", "expect": false},
    {"check": "pairwise_locally_compact", "space": "Y", "expect": true},
    {"check": "pairwise_p_space", "space": "Y", "expect": true},
    {"check": "orbit", "space": "X", "map": "f", "x": "1", "kind": "forward",
     "expect": {"points": ["1", "1/2"], "period": 1}}
  ]
})json";

// Finite two-point analogue of the real-line separation: discrete against
// indiscrete splits almost-Rothberger from Rothberger (and Menger from
// almost-Menger). All claims here state the tool's own verified verdicts.
const char* example_4_1 = R"json({
  "name": "example-4.1-finite-analogue",
  "anchor": "example-4.1",
  "spaces": {
    "Y": {"points": ["a", "b"], "t1": "discrete", "t2": "indiscrete"}
  },
  "claims": [
    {"check": "h_property", "space": "Y", "property": "H_almost_Rothberger",
     "context": {"type": "const", "at": "a"}, "expect": true},
    {"check": "h_property", "space": "Y", "property": "H_Rothberger",
     "context": {"type": "const", "at": "a"}, "expect": false},
    {"check": "h_property", "space": "Y", "property": "H_Menger",
     "context": {"type": "const", "at": "a"}, "expect": false},
    {"check": "h_property", "space": "Y", "property": "H_almost_Menger",
     "context": {"type": "const", "at": "a"}, "expect": true},
    {"check": "h_property", "space": "Y", "property": "PH_Rothberger",
     "context": {"type": "const", "at": "a"}, "expect": false},
    {"check": "h_property", "space": "Y", "property": "HI_almost_Rothberger",
     "context": {"type": "const", "at": "a"}, "expect": true},
    {"check": "classical", "space": "Y", "property": "delta2_Menger", "expect": false},
    {"check": "classical", "space": "Y", "property": "almost_Rothberger_12", "expect": true},
    {"check": "classical", "space": "Y", "property": "weakly_Menger_12", "expect": true},
    {"check": "pairwise_t1", "space": "Y", "expect": false},
    {"check": "prop_2_2", "space": "Y", "expect": "VACUOUS"}
  ]
})json";

}  // namespace

const std::vector<Fixture>& builtin_fixtures() {
    static const std::vector<Fixture> fixtures = {
        {"example-3.1", example_3_1},
        {"example-4.1-finite-analogue", example_4_1},
    };
    return fixtures;
}

}  // namespace btds::lab
