// Command-line driver: instance checking, exhaustive enumeration,
// counterexample search, bundled-fixture regression and witness
// re-verification for finite bitopological dynamical systems.
//
// Exit codes: 0 = ran (findings and claim mismatches are data),
//             1 = internal invariant violation, 2 = input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "btds/lab/instance.hpp"
#include "btds/lab/reverify.hpp"
#include "btds/lab/search.hpp"
#include "btds/lab/sweep.hpp"
#include "btds/lab/verify_paper.hpp"

namespace {

using namespace btds;
using namespace btds::lab;

void write_or_print(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw ParseError("cannot open output file " + path);
    out << content;
}

int run(int argc, char** argv) {
    CLI::App app{"btds-lab: finite-model verification and search for "
                 "bitopological dynamical systems"};
    app.require_subcommand(1);
    app.fallthrough();

    SweepConfig config;
    apply_env_defaults(config);

    std::string anchor_reading =
        config.readings.anchor == AnchorReading::per_set ? "per-set" : "union";
    std::string target_openness =
        config.readings.target == TargetOpenness::strict ? "strict" : "cover-only";

    app.add_option("--max-points", config.max_points,
                   "largest ground set swept (hard cap 4)");
    app.add_option("--interval-k", config.interval_k,
                   "interval model subdivision level");
    app.add_option("--oracle-len", config.oracle_len,
                   "bounded-oracle adversary tuple length");
    app.add_option("--workers", config.workers, "worker threads for sweeps");
    app.add_option("--seed", config.seed, "seed for sampled regimes");
    app.add_option("--out", config.out, "output file (default: stdout/none)");
    app.add_option("--findings-out", config.findings_out,
                   "machine-checkable findings file");
    app.add_option("--anchor-reading", anchor_reading,
                   "anchor condition reading: per-set | union")
        ->check(CLI::IsMember({"per-set", "union"}));
    app.add_option("--target-openness", target_openness,
                   "selection target openness: strict | cover-only")
        ->check(CLI::IsMember({"strict", "cover-only"}));
    app.add_flag("--strict-topology", config.strict_topology,
                 "reject open families that are not already topologies");
    app.add_flag("--dedup-iso", config.dedup_iso,
                 "keep one topology pair per relabeling orbit");
    app.add_flag("--force", config.force_contexts,
                 "analyze selection properties under unverified contexts");

    auto* check = app.add_subcommand(
        "check", "evaluate the declared claims of an instance document");
    std::string check_file;
    check->add_option("file", check_file, "instance document (JSON)")->required();

    auto* enumerate = app.add_subcommand(
        "enumerate", "stream every instance with its full property vector");

    auto* search = app.add_subcommand(
        "search", "emit instances matching a boolean property predicate");
    search->add_option("--predicate", config.predicate,
                       "boolean combination of property names (AND/OR/NOT)");

    auto* verify = app.add_subcommand(
        "verify-paper", "run the bundled fixtures and theorem suites");

    auto* reverify = app.add_subcommand(
        "reverify-witness", "re-confirm findings from their embedded witnesses");
    std::string reverify_file;
    reverify->add_option("file", reverify_file, "findings file (JSONL)")->required();

    auto* props = app.add_subcommand("properties", "list all property names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    config.readings.anchor =
        anchor_reading == "per-set" ? AnchorReading::per_set : AnchorReading::union_only;
    config.readings.target =
        target_openness == "strict" ? TargetOpenness::strict : TargetOpenness::cover_only;
    config.validate();

    if (check->parsed()) {
        const InstanceDoc doc = parse_instance_file(check_file, config.strict_topology);
        const CheckReport report = run_claims(doc, config);
        write_or_print(config.out, report.to_json().dump(2) + "\n");
        std::cerr << report.to_text();
        return 0;
    }
    if (enumerate->parsed()) {
        const EnumerateResult r = cmd_enumerate(config);
        std::cout << "atlas: " << r.rows << " rows over " << r.pairs
                  << " topology pairs (";
        for (size_t n = 1; n <= r.pairs_per_n.size(); ++n) {
            if (n > 1) std::cout << ", ";
            std::cout << "n=" << n << ": " << r.pairs_per_n[n - 1];
        }
        std::cout << ")";
        if (r.resumed_from > 0) std::cout << " (resumed after " << r.resumed_from << ")";
        std::cout << ", written to " << config.out << "\n";
        return 0;
    }
    if (search->parsed()) {
        const SearchOutcome r = cmd_search(config, config.predicate);
        std::cout << findings_header_line(config, config.predicate) << "\n";
        for (const auto& f : r.findings) std::cout << finding_to_line(f, config) << "\n";
        std::cout << findings_summary_line(r) << "\n";
        return 0;
    }
    if (verify->parsed()) {
        const VerifyPaperResult r = cmd_verify_paper(config);
        write_or_print(config.out, r.text);
        if (!config.findings_out.empty()) {
            std::string lines;
            for (const auto& f : r.findings) lines += f.dump() + "\n";
            write_or_print(config.findings_out, lines);
        }
        return 0;
    }
    if (reverify->parsed()) {
        const ReverifyResult r = cmd_reverify(reverify_file);
        std::cout << r.text;
        return r.failed == 0 ? 0 : 1;
    }
    if (props->parsed()) {
        for (const auto& name : property_names()) std::cout << name << "\n";
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const OracleDisagreement& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 1;
    } catch (const InternalEquivalenceViolation& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 1;
    } catch (const LabError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
