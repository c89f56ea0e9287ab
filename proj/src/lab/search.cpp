#include "btds/lab/search.hpp"

#include <fstream>

namespace btds::lab {

namespace {

struct NamedProperty {
    std::string base;     // name without direction suffix
    int direction = 0;    // 0 = conjunction, 12 or 21
    std::string prefix;   // H / PH / HI for homotopy-based, empty for classical
    HProperty property = HProperty::rothberger;
    bool homotopy_based = false;
    bool classical = false;
    bool axiom = false;
};

NamedProperty parse_name(const std::string& name) {
    NamedProperty out;
    out.base = name;
    if (name.size() > 3 && name.compare(name.size() - 3, 3, "_12") == 0) {
        out.direction = 12;
        out.base = name.substr(0, name.size() - 3);
    } else if (name.size() > 3 && name.compare(name.size() - 3, 3, "_21") == 0) {
        out.direction = 21;
        out.base = name.substr(0, name.size() - 3);
    }
    for (const char* prefix : {"H", "PH", "HI"}) {
        const std::string p = std::string(prefix) + "_";
        if (out.base.rfind(p, 0) != 0) continue;
        const std::string rest = out.base.substr(p.size());
        for (HProperty hp :
             {HProperty::rothberger, HProperty::almost_rothberger, HProperty::weak_rothberger,
              HProperty::menger, HProperty::almost_menger, HProperty::weak_menger}) {
            if (rest == to_string(hp)) {
                out.prefix = prefix;
                out.property = hp;
                out.homotopy_based = true;
                return out;
            }
        }
    }
    for (const char* c : {"delta2_Menger", "weakly_Menger", "almost_Menger",
                          "almost_Rothberger"}) {
        if (out.base == c) {
            out.classical = true;
            return out;
        }
    }
    out.axiom = true;
    return out;
}

// Recompute one named property from scratch, demanding the oracle cross-check
// wherever the decision engine is involved.
bool reconfirm_property(const std::string& name, const AtlasRecord& record,
                        const BitopSpace& s, const std::vector<ContextBundle>& bundles,
                        int bundle_index, const SweepConfig& c, json& witness,
                        bool& oracle_ok) {
    const NamedProperty np = parse_name(name);
    const auto labels = numeric_labels(s.n);
    const DecisionOptions opts = c.decision_options();

    if (np.homotopy_based) {
        const ContextBundle& b = bundles.at(bundle_index);
        const HomotopyContext& ctx = np.prefix == "H"    ? b.h
                                     : np.prefix == "PH" ? b.ph
                                                         : b.hi;
        const PropertyReport rep =
            decide_h_property(s, np.property, ctx, c.readings, c.force_contexts, opts);
        witness = property_report_to_json(rep, labels);
        oracle_ok = rep.dir12.method == DecisionMethod::both &&
                    rep.dir21.method == DecisionMethod::both;
        if (np.direction == 12) return rep.dir12.verdict;
        if (np.direction == 21) return rep.dir21.verdict;
        return rep.verdict;
    }
    if (np.classical) {
        PropertyReport rep;
        if (np.base == "delta2_Menger") {
            rep = delta2_menger(s, opts);
        } else {
            const auto decider = [&](int i, int j) {
                if (np.base == "weakly_Menger") return weakly_menger(s, i, j, opts);
                if (np.base == "almost_Menger") return almost_menger(s, i, j, opts);
                return almost_rothberger(s, i, j, opts);
            };
            rep.dir12 = decider(1, 2);
            rep.dir21 = decider(2, 1);
            rep.verdict = rep.dir12.verdict && rep.dir21.verdict;
        }
        witness = property_report_to_json(rep, labels);
        oracle_ok = rep.dir12.method == DecisionMethod::both &&
                    rep.dir21.method == DecisionMethod::both;
        if (np.direction == 12) return rep.dir12.verdict;
        if (np.direction == 21) return rep.dir21.verdict;
        return rep.verdict;
    }
    // Axioms have no oracle path; recomputing them is the whole check.
    oracle_ok = true;
    const auto it = record.props.find(name);
    if (it == record.props.end()) {
        throw PredicateError("search: unknown property '" + name + "'");
    }
    witness = json{{"recomputed", true}};
    if (name == "pairwise_t1") return is_pairwise_t1(s);
    if (name == "pairwise_regular") return is_pairwise_regular(s);
    if (name == "pairwise_regular_12") return is_regular_wrt(s, 1);
    if (name == "pairwise_regular_21") return is_regular_wrt(s, 2);
    if (name == "pairwise_hausdorff") return is_pairwise_hausdorff(s);
    if (name == "pairwise_hausdorff_weak") return is_pairwise_hausdorff_weak(s);
    if (name == "pairwise_t3") return is_pairwise_t3(s);
    if (name == "pairwise_locally_compact") return is_pairwise_locally_compact(s);
    if (name == "pairwise_p_space") return is_pairwise_p_space(s);
    const Prop22Report p22 = check_prop_2_2(s);
    if (name == "prop_2_2_confirmed") return p22.verdict == Prop22Verdict::confirmed;
    if (name == "prop_2_2_vacuous") return p22.verdict == Prop22Verdict::vacuous;
    if (name == "prop_2_2_violated") return p22.verdict == Prop22Verdict::violated;
    if (name == "prop_2_2_weak_violated") {
        return p22.verdict_weak_reading == Prop22Verdict::violated;
    }
    throw PredicateError("search: unknown property '" + name + "'");
}

}  // namespace

SearchOutcome cmd_search(const SweepConfig& c, const std::string& predicate_text) {
    c.validate();
    if (predicate_text.empty()) throw PredicateError("search: --predicate is required");
    const Predicate predicate = Predicate::parse(predicate_text);
    for (const auto& ident : predicate.identifiers()) {
        const auto& known = property_names();
        if (std::find(known.begin(), known.end(), ident) == known.end()) {
            throw PredicateError("search: unknown property '" + ident +
                                 "' (see the atlas property list)");
        }
    }

    SearchOutcome out;
    const auto instances = list_instances(c);
    out.instances_scanned = instances.size();
    out.exhausted_bound = "all labeled topology pairs with n <= " +
                          std::to_string(c.max_points) +
                          " x bundled context library (" +
                          std::to_string(instances.size()) + " instances)";

    for (const auto& inst : instances) {
        AtlasRecord record = compute_record(inst, c);
        if (!predicate.eval(record.props)) continue;

        Finding f;
        f.record = std::move(record);
        f.oracle_reconfirmed = true;
        const auto bundles = make_context_library(inst.space, c.interval_k);
        for (const auto& ident : predicate.identifiers()) {
            json witness;
            bool oracle_ok = false;
            const bool again = reconfirm_property(ident, f.record, inst.space, bundles,
                                                  inst.bundle_index, c, witness, oracle_ok);
            if (again != f.record.props.at(ident)) {
                throw OracleDisagreement("search: property '" + ident +
                                         "' changed verdict on reconfirmation for " +
                                         inst.key);
            }
            f.oracle_reconfirmed = f.oracle_reconfirmed && oracle_ok;
            f.witnesses[ident] = witness;
        }
        out.findings.push_back(std::move(f));
    }

    if (!c.out.empty()) {
        std::ofstream file(c.out, std::ios::trunc);
        if (!file) throw ParseError("search: cannot open output file " + c.out);
        file << findings_header_line(c, predicate_text) << "\n";
        for (const auto& f : out.findings) file << finding_to_line(f, c) << "\n";
        file << findings_summary_line(out) << "\n";
    }
    return out;
}

std::string findings_header_line(const SweepConfig& c, const std::string& predicate_text) {
    json j;
    j["findings"] = "btds-findings-v1";
    j["config"] = c.canonical_key();
    j["predicate"] = predicate_text;
    return j.dump();
}

std::string finding_to_line(const Finding& f, const SweepConfig& c) {
    json j = json::parse(record_to_line(f.record));
    j["config"] = c.canonical_key();
    j["witnesses"] = f.witnesses;
    j["oracle_reconfirmed"] = f.oracle_reconfirmed;
    return j.dump();
}

std::string findings_summary_line(const SearchOutcome& o) {
    json j;
    j["summary"] = json{{"findings", o.findings.size()},
                        {"instances_scanned", o.instances_scanned},
                        {"exhausted", o.exhausted_bound}};
    return j.dump();
}

}  // namespace btds::lab
