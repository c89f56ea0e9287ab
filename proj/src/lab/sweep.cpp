#include "btds/lab/sweep.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <thread>

namespace btds::lab {

namespace {

std::string opens_csv(const FiniteTopology& t) {
    std::string out;
    bool first = true;
    for (PointSet u : enumerate_opens(t, t.n)) {
        if (!first) out += ",";
        out += std::to_string(u);
        first = false;
    }
    return out;
}

std::string pair_key(const BitopSpace& s) {
    return "n=" + std::to_string(s.n) + ";t1=" + opens_csv(s.t1) +
           ";t2=" + opens_csv(s.t2);
}

FiniteTopology relabel(const FiniteTopology& t, const std::vector<int>& perm) {
    FiniteTopology out;
    out.n = t.n;
    out.min_nbhd.assign(t.n, 0);
    for (int p = 0; p < t.n; ++p) {
        PointSet m = 0;
        for (PointSet b = t.min_nbhd[p]; b; b &= b - 1) {
            m |= point_bit(perm[std::countr_zero(b)]);
        }
        out.min_nbhd[perm[p]] = m;
    }
    return out;
}

// Is this pair the lexicographically-least member of its relabeling orbit?
bool is_iso_canonical(const BitopSpace& s) {
    std::vector<int> perm(s.n);
    std::iota(perm.begin(), perm.end(), 0);
    const auto self = std::make_pair(s.t1.min_nbhd, s.t2.min_nbhd);
    while (std::next_permutation(perm.begin(), perm.end())) {
        const auto other = std::make_pair(relabel(s.t1, perm).min_nbhd,
                                          relabel(s.t2, perm).min_nbhd);
        if (other < self) return false;
    }
    return true;
}

std::vector<BitopSpace> list_spaces(const SweepConfig& c) {
    std::vector<BitopSpace> out;
    for (int n = 1; n <= c.max_points; ++n) {
        const auto topologies = enumerate_topologies(n, hard_max_points);
        for (const auto& a : topologies) {
            for (const auto& b : topologies) {
                BitopSpace s{n, a, b};
                if (c.dedup_iso && !is_iso_canonical(s)) continue;
                out.push_back(std::move(s));
            }
        }
    }
    return out;
}

int bundle_count(const BitopSpace& s) { return s.n >= 2 ? s.n + 1 : s.n; }

std::string bundle_name(const BitopSpace& s, int index) {
    return index < s.n ? "const@" + std::to_string(index) : "id";
}

const std::vector<HProperty> properties_in_order = {
    HProperty::rothberger,      HProperty::almost_rothberger,
    HProperty::weak_rothberger, HProperty::menger,
    HProperty::almost_menger,   HProperty::weak_menger,
};

void flatten_property(AtlasRecord& r, const std::string& prefix, HProperty p,
                      const PropertyReport& rep, bool& oracle_everywhere) {
    const std::string base = prefix + "_" + to_string(p);
    r.props[base] = rep.verdict;
    r.props[base + "_12"] = rep.dir12.verdict;
    r.props[base + "_21"] = rep.dir21.verdict;
    oracle_everywhere = oracle_everywhere &&
                        rep.dir12.method == DecisionMethod::both &&
                        rep.dir21.method == DecisionMethod::both;
}

}  // namespace

std::vector<SweepInstance> list_instances(const SweepConfig& c) {
    c.validate();
    std::vector<SweepInstance> out;
    for (const auto& s : list_spaces(c)) {
        const std::string prefix = pair_key(s);
        for (int b = 0; b < bundle_count(s); ++b) {
            SweepInstance inst;
            inst.space = s;
            inst.bundle_index = b;
            inst.key = prefix + ";ctx=" + bundle_name(s, b);
            inst.hash = fnv1a64(inst.key);
            out.push_back(std::move(inst));
        }
    }
    std::sort(out.begin(), out.end(), [](const SweepInstance& a, const SweepInstance& b) {
        return std::tie(a.hash, a.key) < std::tie(b.hash, b.key);
    });
    return out;
}

std::size_t count_pairs(const SweepConfig& c) {
    return list_spaces(c).size();
}

AtlasRecord compute_record(const SweepInstance& inst, const SweepConfig& c) {
    const BitopSpace& s = inst.space;
    AtlasRecord r;
    r.key = inst.key;
    r.hash = inst.hash;
    r.n = s.n;
    r.t1_opens = enumerate_opens(s.t1, s.n);
    r.t2_opens = enumerate_opens(s.t2, s.n);
    r.context = bundle_name(s, inst.bundle_index);

    const auto bundles = make_context_library(s, c.interval_k);
    const ContextBundle& bundle = bundles.at(inst.bundle_index);
    r.h_anchors = bundle.h.anchors;
    r.hi_anchors = bundle.hi.anchors;
    r.ph_anchors = bundle.ph.anchors;

    // Separation axioms and the inclusion proposition.
    r.props["pairwise_t1"] = is_pairwise_t1(s);
    const bool reg12 = is_regular_wrt(s, 1);
    const bool reg21 = is_regular_wrt(s, 2);
    r.props["pairwise_regular_12"] = reg12;
    r.props["pairwise_regular_21"] = reg21;
    r.props["pairwise_regular"] = reg12 && reg21;
    r.props["pairwise_hausdorff"] = is_pairwise_hausdorff(s);
    r.props["pairwise_hausdorff_weak"] = is_pairwise_hausdorff_weak(s);
    r.props["pairwise_t3"] = is_pairwise_t3(s);
    r.props["pairwise_locally_compact"] = is_pairwise_locally_compact(s);
    r.props["pairwise_p_space"] = is_pairwise_p_space(s);
    const Prop22Report p22 = check_prop_2_2(s);
    r.props["prop_2_2_confirmed"] = p22.verdict == Prop22Verdict::confirmed;
    r.props["prop_2_2_vacuous"] = p22.verdict == Prop22Verdict::vacuous;
    r.props["prop_2_2_violated"] = p22.verdict == Prop22Verdict::violated;
    r.props["prop_2_2_weak_violated"] = p22.verdict_weak_reading == Prop22Verdict::violated;

    DecisionOptions opts = c.decision_options();
    bool oracle_everywhere = true;

    // Classical, unanchored properties.
    const PropertyReport d2 = delta2_menger(s, opts);
    r.props["delta2_Menger"] = d2.verdict;
    r.props["delta2_Menger_12"] = d2.dir12.verdict;
    r.props["delta2_Menger_21"] = d2.dir21.verdict;
    oracle_everywhere = oracle_everywhere && d2.dir12.method == DecisionMethod::both &&
                        d2.dir21.method == DecisionMethod::both;

    const auto classical_pair = [&](const char* name, auto decider) {
        const SelectionReport r12 = decider(s, 1, 2, opts);
        const SelectionReport r21 = decider(s, 2, 1, opts);
        r.props[std::string(name) + "_12"] = r12.verdict;
        r.props[std::string(name) + "_21"] = r21.verdict;
        r.props[name] = r12.verdict && r21.verdict;
        oracle_everywhere = oracle_everywhere && r12.method == DecisionMethod::both &&
                            r21.method == DecisionMethod::both;
    };
    classical_pair("weakly_Menger", [](const BitopSpace& y, int i, int j,
                                       const DecisionOptions& o) {
        return weakly_menger(y, i, j, o);
    });
    classical_pair("almost_Menger", [](const BitopSpace& y, int i, int j,
                                       const DecisionOptions& o) {
        return almost_menger(y, i, j, o);
    });
    classical_pair("almost_Rothberger", [](const BitopSpace& y, int i, int j,
                                           const DecisionOptions& o) {
        return almost_rothberger(y, i, j, o);
    });

    // The twelve homotopy-based properties plus the iteration variant.
    struct Variant {
        const char* prefix;
        const HomotopyContext* ctx;
    };
    const Variant variants[] = {{"H", &bundle.h}, {"PH", &bundle.ph}, {"HI", &bundle.hi}};
    for (const auto& v : variants) {
        for (HProperty prop : properties_in_order) {
            const PropertyReport rep =
                decide_h_property(s, prop, *v.ctx, c.readings, c.force_contexts, opts);
            flatten_property(r, v.prefix, prop, rep, oracle_everywhere);
        }
    }

    // Alternate-reading divergences, characterization path only.
    DecisionOptions alt_opts = opts;
    alt_opts.use_oracle = false;
    const struct {
        Readings readings;
        const char* tag;
    } alternates[] = {
        {{AnchorReading::union_only, c.readings.target}, "@anchor=union"},
        {{c.readings.anchor, TargetOpenness::cover_only}, "@target=cover-only"},
    };
    for (const auto& alt : alternates) {
        if (alt.readings == c.readings) continue;
        for (const auto& v : variants) {
            if (std::string(v.prefix) == "HI") continue;  // tracked for H and PH
            for (HProperty prop : properties_in_order) {
                const PropertyReport rep = decide_h_property(s, prop, *v.ctx, alt.readings,
                                                             c.force_contexts, alt_opts);
                const std::string base = std::string(v.prefix) + "_" + to_string(prop);
                if (rep.verdict != r.props.at(base)) {
                    r.divergent.push_back(base + alt.tag);
                }
            }
        }
    }
    std::sort(r.divergent.begin(), r.divergent.end());
    r.oracle_everywhere = oracle_everywhere;
    return r;
}

std::vector<AtlasRecord> compute_all_records(const SweepConfig& c) {
    const auto instances = list_instances(c);
    std::vector<AtlasRecord> records(instances.size());
    const int workers = std::max(1, std::min<int>(c.workers, instances.size()));
    if (workers == 1) {
        for (size_t i = 0; i < instances.size(); ++i) {
            records[i] = compute_record(instances[i], c);
        }
        return records;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (size_t i = w; i < instances.size(); i += workers) {
                    records[i] = compute_record(instances[i], c);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return records;
}

std::string record_to_line(const AtlasRecord& r) {
    const auto labels = numeric_labels(r.n);
    json j;
    j["key"] = r.key;
    j["hash"] = hex64(r.hash);
    j["n"] = r.n;
    j["t1"] = r.t1_opens;
    j["t2"] = r.t2_opens;
    j["context"] = r.context;
    j["anchors"] = json{{"h", anchors_to_json(r.h_anchors, labels)},
                        {"hi", anchors_to_json(r.hi_anchors, labels)},
                        {"ph", anchors_to_json(r.ph_anchors, labels)}};
    j["props"] = r.props;
    j["divergent"] = r.divergent;
    j["method"] = r.oracle_everywhere ? "both" : "characterization";
    return j.dump();
}

std::string atlas_header_line(const SweepConfig& c, std::size_t instances) {
    json j;
    j["atlas"] = "btds-atlas-v1";
    j["config"] = c.canonical_key();
    j["instances"] = instances;
    return j.dump();
}

EnumerateResult cmd_enumerate(const SweepConfig& c) {
    c.validate();
    if (c.out.empty()) throw ParseError("enumerate: --out is required");
    const auto instances = list_instances(c);
    const std::string header = atlas_header_line(c, instances.size());

    // Resume: keep only newline-terminated lines (an interrupted run may have
    // torn the last one), check the header, count complete records, append.
    std::size_t done = 0;
    bool existing = false;
    std::string keep;
    {
        std::ifstream in(c.out, std::ios::binary);
        if (in) {
            std::string content((std::istreambuf_iterator<char>(in)),
                                std::istreambuf_iterator<char>());
            const std::size_t last_nl = content.rfind('\n');
            if (last_nl != std::string::npos) {
                keep = content.substr(0, last_nl + 1);
                existing = true;
                std::size_t pos = 0;
                std::size_t line_no = 0;
                while (pos < keep.size()) {
                    const std::size_t end = keep.find('\n', pos);
                    const std::string line = keep.substr(pos, end - pos);
                    if (line_no == 0) {
                        if (line != header) {
                            throw ParseError(
                                "enumerate: existing atlas was produced by a different "
                                "configuration; refusing to resume");
                        }
                    } else if (!line.empty()) {
                        ++done;
                    }
                    ++line_no;
                    pos = end + 1;
                }
            }
        }
    }
    if (done > instances.size()) {
        throw ParseError("enumerate: existing atlas has more records than this "
                         "configuration can produce");
    }

    std::vector<SweepInstance> todo(instances.begin() + done, instances.end());

    std::ofstream out(c.out, std::ios::trunc | std::ios::binary);
    if (!out) throw ParseError("enumerate: cannot open output file " + c.out);
    if (existing) {
        out << keep;  // identical prefix, minus any torn tail
    } else {
        out << header << "\n";
    }

    // Compute in canonical order, in parallel chunks, and write in order.
    const int workers = std::max(1, std::min<int>(c.workers, todo.size() ? todo.size() : 1));
    const std::size_t chunk = 256;
    for (std::size_t base = 0; base < todo.size(); base += chunk) {
        const std::size_t end = std::min(base + chunk, todo.size());
        std::vector<std::string> lines(end - base);
        if (workers == 1) {
            for (std::size_t i = base; i < end; ++i) {
                lines[i - base] = record_to_line(compute_record(todo[i], c));
            }
        } else {
            std::vector<std::thread> pool;
            std::vector<std::exception_ptr> errors(workers);
            for (int w = 0; w < workers; ++w) {
                pool.emplace_back([&, w] {
                    try {
                        for (std::size_t i = base + w; i < end; i += workers) {
                            lines[i - base] = record_to_line(compute_record(todo[i], c));
                        }
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            }
            for (auto& t : pool) t.join();
            for (auto& e : errors) {
                if (e) std::rethrow_exception(e);
            }
        }
        for (const auto& line : lines) out << line << "\n";
        out.flush();  // checkpoint boundary
    }

    EnumerateResult res;
    res.pairs_per_n.assign(c.max_points, 0);
    for (const auto& s : list_spaces(c)) {
        ++res.pairs_per_n[s.n - 1];
        ++res.pairs;
    }
    res.rows = instances.size();
    res.resumed_from = done;
    return res;
}

const std::vector<std::string>& property_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out = {
            "pairwise_t1", "pairwise_regular", "pairwise_regular_12",
            "pairwise_regular_21", "pairwise_hausdorff", "pairwise_hausdorff_weak",
            "pairwise_t3", "pairwise_locally_compact", "pairwise_p_space",
            "prop_2_2_confirmed", "prop_2_2_vacuous", "prop_2_2_violated",
            "prop_2_2_weak_violated", "delta2_Menger", "delta2_Menger_12",
            "delta2_Menger_21",
        };
        for (const char* base : {"weakly_Menger", "almost_Menger", "almost_Rothberger"}) {
            out.push_back(base);
            out.push_back(std::string(base) + "_12");
            out.push_back(std::string(base) + "_21");
        }
        for (const char* prefix : {"H", "PH", "HI"}) {
            for (HProperty p : properties_in_order) {
                const std::string base = std::string(prefix) + "_" + to_string(p);
                out.push_back(base);
                out.push_back(base + "_12");
                out.push_back(base + "_21");
            }
        }
        return out;
    }();
    return names;
}

}  // namespace btds::lab
