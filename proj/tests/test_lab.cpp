#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "btds/lab/fixtures.hpp"
#include "btds/lab/instance.hpp"
#include "btds/lab/predicate.hpp"
#include "btds/lab/reverify.hpp"
#include "btds/lab/search.hpp"
#include "btds/lab/sweep.hpp"
#include "btds/lab/verify_paper.hpp"

using namespace btds;
using namespace btds::lab;

namespace {

SweepConfig small_config() {
    SweepConfig c;
    c.max_points = 2;
    return c;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name)
        : path(std::string("btds_test_") + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("predicates parse and evaluate") {
    const Predicate p = Predicate::parse(
        "H_almost_Rothberger AND NOT (H_Rothberger OR pairwise_t1)");
    CHECK(p.identifiers() ==
          std::set<std::string>{"H_almost_Rothberger", "H_Rothberger", "pairwise_t1"});
    CHECK(p.eval({{"H_almost_Rothberger", true},
                  {"H_Rothberger", false},
                  {"pairwise_t1", false}}));
    CHECK_FALSE(p.eval({{"H_almost_Rothberger", true},
                        {"H_Rothberger", true},
                        {"pairwise_t1", false}}));

    CHECK_THROWS_AS(Predicate::parse("AND H_Rothberger"), PredicateError);
    CHECK_THROWS_AS(Predicate::parse("(H_Rothberger"), PredicateError);
    CHECK_THROWS_AS(Predicate::parse("H_Rothberger %"), PredicateError);
    CHECK_THROWS_AS(
        Predicate::parse("nosuch").eval(std::map<std::string, bool>{{"a", true}}),
        PredicateError);

    // A contradiction matches nothing regardless of the record.
    const Predicate contra = Predicate::parse("H_Rothberger AND NOT H_Rothberger");
    CHECK_FALSE(contra.eval({{"H_Rothberger", true}}));
    CHECK_FALSE(contra.eval({{"H_Rothberger", false}}));
}

TEST_CASE("instance documents parse, with strict topology checking") {
    const std::string good = R"({
        "name": "t",
        "spaces": {"Y": {"points": ["a","b"],
                         "t1": {"opens": [[], ["a"], ["a","b"]]},
                         "t2": "indiscrete"}},
        "claims": []
    })";
    const InstanceDoc doc = parse_instance_text(good, true);
    CHECK(doc.space("Y").space.t1.min_nbhd ==
          std::vector<PointSet>{0b01, 0b11});

    // Missing union {a} | {b} = {a,b} is fine non-strict, rejected strict.
    const std::string gap = R"({
        "name": "t",
        "spaces": {"Y": {"points": ["a","b","c"],
                         "t1": {"opens": [[], ["a"], ["b"], ["a","b","c"]]},
                         "t2": "discrete"}},
        "claims": []
    })";
    CHECK_NOTHROW(parse_instance_text(gap, false));
    CHECK_THROWS_AS(parse_instance_text(gap, true), ParseError);

    CHECK_THROWS_AS(parse_instance_text("{not json", false), ParseError);
    CHECK_THROWS_AS(parse_instance_text(R"({"name":"x"})", false), ParseError);
}

TEST_CASE("an empty claims list yields an empty report") {
    const std::string doc = R"({
        "name": "t",
        "spaces": {"Y": {"points": ["a"], "t1": "discrete", "t2": "discrete"}},
        "claims": []
    })";
    SweepConfig c;
    const CheckReport report = run_claims(parse_instance_text(doc, false), c);
    CHECK(report.claims.empty());
    CHECK(report.matched == 0);
    CHECK(report.mismatched == 0);
}

TEST_CASE("claims over unknown names are input errors") {
    const std::string doc = R"({
        "name": "t",
        "spaces": {"Y": {"points": ["a"], "t1": "discrete", "t2": "discrete"}},
        "claims": [{"check": "no_such_predicate", "space": "Y"}]
    })";
    SweepConfig c;
    CHECK_THROWS_AS(run_claims(parse_instance_text(doc, false), c), ParseError);
}

TEST_CASE("bundled fixtures reproduce the expected mismatch set") {
    SweepConfig c;
    const auto& fixtures = builtin_fixtures();
    REQUIRE(fixtures.size() == 2);

    const CheckReport first = run_claims(parse_instance_text(fixtures[0].text, false), c);
    // Exactly the three continuity claims mismatch; everything else agrees.
    CHECK(first.mismatched == 3);
    for (const auto& claim : first.claims) {
        if (claim.match) continue;
        const std::string check = claim.claim.value("check", "");
        CHECK((check == "continuous" || check == "pairwise_continuous" ||
               check == "btds_homotopy"));
    }

    const CheckReport second = run_claims(parse_instance_text(fixtures[1].text, false), c);
    CHECK(second.mismatched == 0);
}

TEST_CASE("interval spaces drive path claims end to end") {
    const std::string text = R"({
        "name": "path-claims",
        "spaces": {
            "I": {"interval_k": 1},
            "Y": {"points": ["a", "b"], "t1": "indiscrete", "t2": "indiscrete"}
        },
        "maps": {
            "fI": {"from": "I", "to": "I", "table": {"t0": "t0", "t1": "t1", "t2": "t2"}},
            "g":  {"from": "Y", "to": "Y", "table": {"a": "a", "b": "b"}},
            "F":  {"from": "I", "to": "Y", "table": {"t0": "a", "t1": "a", "t2": "a"}}
        },
        "homotopies": {
            "P": {"X": "I", "Y": "Y", "F": "F", "k": 1,
                  "rows": {"t0": ["a", "a", "a"],
                           "t1": ["a", "a", "a"],
                           "t2": ["a", "a", "a"]}}
        },
        "claims": [
            {"check": "path_homotopy", "homotopy": "P", "f": "fI", "g": "g",
             "from": "a", "to": "a", "expect": true},
            {"check": "search_homotopy", "mode": "path", "X": "I", "Y": "Y",
             "f": "fI", "g": "g", "F": "F", "from": "a", "to": "a",
             "k_cap": 1, "expect": "found"}
        ]
    })";
    SweepConfig c;
    const CheckReport report = run_claims(parse_instance_text(text, false), c);
    CHECK(report.mismatched == 0);
    CHECK(report.matched == 2);
}

TEST_CASE("atlas records flatten every named property") {
    const SweepConfig c = small_config();
    const auto instances = list_instances(c);
    REQUIRE(!instances.empty());
    const AtlasRecord r = compute_record(instances.front(), c);
    for (const auto& name : property_names()) {
        CHECK(r.props.count(name) == 1);
    }
    CHECK(r.oracle_everywhere);
}

TEST_CASE("instance listing is canonical and sized as expected") {
    SweepConfig c;
    c.max_points = 1;
    CHECK(count_pairs(c) == 1);
    CHECK(list_instances(c).size() == 1);  // a single context bundle at one point

    c.max_points = 2;
    CHECK(count_pairs(c) == 17);           // 1 + 4*4 topology pairs
    CHECK(list_instances(c).size() == 49); // 1 + 16*3 context rows

    const auto a = list_instances(c);
    for (size_t i = 1; i < a.size(); ++i) {
        CHECK(std::tie(a[i - 1].hash, a[i - 1].key) < std::tie(a[i].hash, a[i].key));
    }
}

TEST_CASE("relabeling dedup keeps one pair per orbit") {
    SweepConfig c;
    c.max_points = 2;
    c.dedup_iso = true;
    // The 16 labeled two-point pairs fall into 10 relabeling orbits
    // (Burnside: (16 + 4)/2), plus the single one-point pair.
    CHECK(count_pairs(c) == 11);
}

TEST_CASE("atlas writing is deterministic and resumable") {
    SweepConfig c = small_config();
    TempFile full("atlas_full.jsonl");
    TempFile partial("atlas_partial.jsonl");

    c.out = full.path;
    const EnumerateResult r1 = cmd_enumerate(c);
    CHECK(r1.rows == 49);
    CHECK(r1.resumed_from == 0);
    const std::string bytes_full = slurp(full.path);

    // A second full run over the existing file appends nothing and changes
    // nothing.
    const EnumerateResult r2 = cmd_enumerate(c);
    CHECK(r2.resumed_from == 49);
    CHECK(slurp(full.path) == bytes_full);

    // Truncate to the header plus 20 records, then resume.
    {
        std::ifstream in(full.path);
        std::ofstream out(partial.path, std::ios::trunc);
        std::string line;
        for (int i = 0; i < 21 && std::getline(in, line); ++i) out << line << "\n";
    }
    c.out = partial.path;
    const EnumerateResult r3 = cmd_enumerate(c);
    CHECK(r3.resumed_from == 20);
    CHECK(slurp(partial.path) == bytes_full);

    // A torn final line (interrupted write) is dropped and rewritten.
    TempFile torn("atlas_torn.jsonl");
    {
        std::ofstream out(torn.path, std::ios::trunc | std::ios::binary);
        out << bytes_full.substr(0, bytes_full.size() / 2);  // mid-record cut
    }
    c.out = torn.path;
    cmd_enumerate(c);
    CHECK(slurp(torn.path) == bytes_full);

    // A different configuration refuses to resume the same file.
    SweepConfig other = c;
    other.oracle_len = 1;
    CHECK_THROWS_AS(cmd_enumerate(other), ParseError);

    // Workers do not change the bytes.
    SweepConfig parallel = small_config();
    TempFile par("atlas_parallel.jsonl");
    parallel.out = par.path;
    parallel.workers = 4;
    cmd_enumerate(parallel);
    CHECK(slurp(par.path) == bytes_full);
}

TEST_CASE("search finds the separating instance and reverify confirms it") {
    SweepConfig c = small_config();
    TempFile findings("findings.jsonl");
    c.out = findings.path;

    const SearchOutcome out = cmd_search(c, "H_almost_Rothberger AND NOT H_Rothberger");
    CHECK(out.instances_scanned == 49);
    REQUIRE(!out.findings.empty());
    bool separating_found = false;
    for (const auto& f : out.findings) {
        CHECK(f.oracle_reconfirmed);
        if (f.record.key.rfind("n=2;t1=0,1,2,3;t2=0,3", 0) == 0) separating_found = true;
    }
    CHECK(separating_found);

    const ReverifyResult rv = cmd_reverify(findings.path);
    CHECK(rv.confirmed == out.findings.size());
    CHECK(rv.failed == 0);

    // Menger failing while almost-Menger holds, same sweep.
    const SearchOutcome menger = cmd_search(c, "H_almost_Menger AND NOT H_Menger");
    CHECK(!menger.findings.empty());

    // A contradiction returns an explicitly-exhausted empty result.
    const SearchOutcome none = cmd_search(c, "H_Rothberger AND NOT H_Rothberger");
    CHECK(none.findings.empty());
    CHECK(none.exhausted_bound.find("49 instances") != std::string::npos);

    CHECK_THROWS_AS(cmd_search(c, "H_Rothberger AND"), PredicateError);
    CHECK_THROWS_AS(cmd_search(c, "no_such_property"), PredicateError);
}

TEST_CASE("weak-properties never separate on finite instances") {
    // Pairwise P-spaces make weak and almost variants coincide, so the
    // separating predicate must come back empty, stating its bound.
    SweepConfig c = small_config();
    const SearchOutcome out = cmd_search(c, "H_weak_Menger AND NOT H_almost_Menger");
    CHECK(out.findings.empty());
    CHECK(!out.exhausted_bound.empty());
}

TEST_CASE("verify-paper output is byte-stable and carries the key content") {
    SweepConfig c = small_config();
    const VerifyPaperResult a = cmd_verify_paper(c);
    const VerifyPaperResult b = cmd_verify_paper(c);
    CHECK(a.text == b.text);
    REQUIRE(!a.findings.empty());

    // The composite tables, the continuity finding and its witness.
    CHECK(a.text.find("table={\"1\":\"1/2\",\"1/2\":\"1/2\",\"1/3\":\"1/2\",\"1/4\":\"1/2\"}") !=
          std::string::npos);
    CHECK(a.text.find("table={\"1\":\"1/2\",\"1/2\":\"1/3\",\"1/3\":\"1\",\"1/4\":\"1\"}") !=
          std::string::npos);
    CHECK(a.text.find("\"open\":[\"1\"]") != std::string::npos);
    CHECK(a.text.find("btds_homotopy_boundary") != std::string::npos);
    CHECK(a.text.find("[FINDING] example-3.1 continuous") != std::string::npos);

    TempFile findings("vp_findings.jsonl");
    {
        std::ofstream out(findings.path);
        for (const auto& f : a.findings) out << f.dump() << "\n";
    }
    const ReverifyResult rv = cmd_reverify(findings.path);
    CHECK(rv.failed == 0);
    CHECK(rv.confirmed > 0);
}

TEST_CASE("reverify rejects corrupted witnesses") {
    SweepConfig c = small_config();
    const VerifyPaperResult a = cmd_verify_paper(c);
    REQUIRE(!a.findings.empty());
    json broken;
    for (const auto& f : a.findings) {
        if (f.value("type", "") == "claim_mismatch") {
            broken = f;
            break;
        }
    }
    REQUIRE(!broken.is_null());
    broken["computed"] = !broken["computed"].get<bool>();

    TempFile findings("broken_findings.jsonl");
    {
        std::ofstream out(findings.path);
        out << broken.dump() << "\n";
    }
    const ReverifyResult rv = cmd_reverify(findings.path);
    CHECK(rv.failed == 1);
    CHECK(rv.confirmed == 0);
}

TEST_CASE("env defaults feed the config") {
    TempFile cfg("env_config.json");
    {
        std::ofstream out(cfg.path);
        out << R"({"max_points": 2, "oracle_len": 1, "anchor_reading": "union"})";
    }
    setenv(config_env_var, cfg.path.c_str(), 1);
    SweepConfig c;
    apply_env_defaults(c);
    unsetenv(config_env_var);
    CHECK(c.max_points == 2);
    CHECK(c.oracle_len == 1);
    CHECK(c.readings.anchor == AnchorReading::union_only);

    setenv(config_env_var, "definitely_missing_file.json", 1);
    SweepConfig d;
    CHECK_THROWS_AS(apply_env_defaults(d), ParseError);
    unsetenv(config_env_var);
}

TEST_CASE("record lines are stable json with sorted keys") {
    const SweepConfig c = small_config();
    const auto instances = list_instances(c);
    const AtlasRecord r = compute_record(instances.front(), c);
    const std::string line1 = record_to_line(r);
    const std::string line2 = record_to_line(compute_record(instances.front(), c));
    CHECK(line1 == line2);
    const json parsed = json::parse(line1);
    CHECK(parsed.at("hash").get<std::string>() == hex64(r.hash));
    CHECK(parsed.at("props").size() == property_names().size());
}
