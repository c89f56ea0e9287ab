#include "btds/lab/instance.hpp"

#include <fstream>

namespace btds::lab {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError("instance: " + what); }

const json& get(const json& obj, const char* field) {
    if (!obj.is_object() || !obj.contains(field)) {
        bad(std::string("missing field '") + field + "'");
    }
    return obj.at(field);
}

std::string get_str(const json& obj, const char* field) {
    const json v = get(obj, field);
    if (!v.is_string()) bad(std::string("field '") + field + "' must be a string");
    return v.get<std::string>();
}

PointSet parse_point_set(const json& arr, const SpaceDoc& s) {
    if (!arr.is_array()) bad("open sets must be arrays of point labels");
    PointSet out = 0;
    for (const auto& l : arr) {
        out |= point_bit(s.label_index(l.get<std::string>()));
    }
    return out;
}

FiniteTopology parse_topology(const json& spec, const SpaceDoc& s, bool strict) {
    const int n = static_cast<int>(s.labels.size());
    if (spec.is_string()) {
        const std::string kind = spec.get<std::string>();
        if (kind == "discrete") return discrete_topology(n);
        if (kind == "indiscrete") return indiscrete_topology(n);
        bad("unknown topology shorthand '" + kind + "'");
    }
    if (!spec.is_object() || !spec.contains("opens")) {
        bad("a topology needs an 'opens' list or a shorthand");
    }
    std::vector<PointSet> family;
    for (const auto& o : spec.at("opens")) family.push_back(parse_point_set(o, s));
    try {
        return from_open_family(n, family, strict);
    } catch (const StrictNotATopology& e) {
        bad(std::string("space '") + s.name + "': " + e.what());
    }
}

}  // namespace

int SpaceDoc::label_index(const std::string& label) const {
    for (size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == label) return static_cast<int>(i);
    }
    bad("space '" + name + "' has no point labeled '" + label + "'");
}

const SpaceDoc& InstanceDoc::space(const std::string& id) const {
    const auto it = spaces.find(id);
    if (it == spaces.end()) bad("unknown space '" + id + "'");
    return it->second;
}

const MapDoc& InstanceDoc::map(const std::string& id) const {
    const auto it = maps.find(id);
    if (it == maps.end()) bad("unknown map '" + id + "'");
    return it->second;
}

const HomotopyDoc& InstanceDoc::homotopy(const std::string& id) const {
    const auto it = homotopies.find(id);
    if (it == homotopies.end()) bad("unknown homotopy '" + id + "'");
    return it->second;
}

InstanceDoc parse_instance(const json& doc, bool strict_topology) {
    InstanceDoc out;
    if (!doc.is_object()) bad("document must be a JSON object");
    out.name = doc.value("name", "unnamed");
    out.anchor = doc.value("anchor", "");
    out.interval_k = doc.value("interval_k", 1);
    if (out.interval_k < 1 || out.interval_k > hard_max_interval_k) {
        bad("interval_k out of range");
    }

    for (const auto& [id, spec] : get(doc, "spaces").items()) {
        SpaceDoc s;
        s.name = id;
        if (spec.is_object() && spec.contains("interval_k")) {
            const int k = spec.at("interval_k").get<int>();
            if (k < 1 || k > hard_max_interval_k) bad("interval_k out of range");
            const IntervalModel m = standard_interval(k);
            for (int p = 0; p < m.n(); ++p) s.labels.push_back("t" + std::to_string(p));
            s.space = m.space;
            s.interval = m;
        } else {
            for (const auto& l : get(spec, "points")) {
                s.labels.push_back(l.get<std::string>());
            }
            if (s.labels.empty()) bad("space '" + id + "' has no points");
            if (static_cast<int>(s.labels.size()) > max_ground_points) {
                bad("space '" + id + "' is too large");
            }
            s.space.n = static_cast<int>(s.labels.size());
            s.space.t1 = parse_topology(get(spec, "t1"), s, strict_topology);
            s.space.t2 = parse_topology(get(spec, "t2"), s, strict_topology);
        }
        out.spaces.emplace(id, std::move(s));
    }

    if (doc.contains("maps")) {
        for (const auto& [id, spec] : doc.at("maps").items()) {
            MapDoc m;
            m.name = id;
            m.from = get_str(spec, "from");
            m.to = get_str(spec, "to");
            const SpaceDoc& dom = out.space(m.from);
            const SpaceDoc& cod = out.space(m.to);
            m.map.dom_n = dom.space.n;
            m.map.cod_n = cod.space.n;
            m.map.table.assign(dom.space.n, -1);
            for (const auto& [from_label, to_label] : get(spec, "table").items()) {
                m.map.table[dom.label_index(from_label)] =
                    cod.label_index(to_label.get<std::string>());
            }
            if (!m.map.valid()) bad("map '" + id + "' is not total");
            out.maps.emplace(id, std::move(m));
        }
    }

    if (doc.contains("homotopies")) {
        for (const auto& [id, spec] : doc.at("homotopies").items()) {
            HomotopyDoc h;
            h.name = id;
            h.x = get_str(spec, "X");
            h.y = get_str(spec, "Y");
            h.f = get_str(spec, "F");
            const SpaceDoc& xs = out.space(h.x);
            const SpaceDoc& ys = out.space(h.y);
            const MapDoc& f = out.map(h.f);
            if (f.from != h.x || f.to != h.y) {
                bad("homotopy '" + id + "': F must map " + h.x + " to " + h.y);
            }
            const int k = spec.value("k", out.interval_k);
            h.homotopy.X = xs.space;
            h.homotopy.Y = ys.space;
            h.homotopy.T = standard_interval(k);
            h.homotopy.F = f.map;
            h.homotopy.table.assign(xs.space.n * h.homotopy.T.n(), -1);
            const json rows = get(spec, "rows");
            for (const auto& [row_label, row] : rows.items()) {
                const int x = xs.label_index(row_label);
                if (!row.is_array() ||
                    static_cast<int>(row.size()) != h.homotopy.T.n()) {
                    bad("homotopy '" + id + "': row '" + row_label + "' must list " +
                        std::to_string(h.homotopy.T.n()) + " values");
                }
                for (int t = 0; t < h.homotopy.T.n(); ++t) {
                    h.homotopy.at(x, t) = ys.label_index(row[t].get<std::string>());
                }
            }
            for (int v : h.homotopy.table) {
                if (v < 0) bad("homotopy '" + id + "' is missing rows");
            }
            out.homotopies.emplace(id, std::move(h));
        }
    }

    if (doc.contains("claims")) {
        out.claims = doc.at("claims");
        if (!out.claims.is_array()) bad("claims must be an array");
    }
    return out;
}

InstanceDoc parse_instance_text(const std::string& text, bool strict_topology) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        bad(std::string("bad JSON: ") + e.what());
    }
    return parse_instance(doc, strict_topology);
}

InstanceDoc parse_instance_file(const std::string& path, bool strict_topology) {
    std::ifstream in(path);
    if (!in) bad("cannot read file " + path);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return parse_instance_text(text, strict_topology);
}

namespace {

struct ClaimContext {
    const InstanceDoc& doc;
    const SweepConfig& config;
};

// Either a named property of the H/HI/PH family or a classical one.
struct PropertySpec {
    bool classical = false;
    ContextKind kind = ContextKind::h;
    HProperty property = HProperty::rothberger;
    std::string classical_name;
};

PropertySpec parse_property_name(const std::string& name) {
    PropertySpec spec;
    const auto try_prefix = [&](const std::string& prefix, ContextKind kind) {
        if (name.rfind(prefix + "_", 0) != 0) return false;
        const std::string rest = name.substr(prefix.size() + 1);
        for (HProperty p :
             {HProperty::rothberger, HProperty::almost_rothberger, HProperty::weak_rothberger,
              HProperty::menger, HProperty::almost_menger, HProperty::weak_menger}) {
            if (rest == to_string(p)) {
                spec.kind = kind;
                spec.property = p;
                return true;
            }
        }
        return false;
    };
    if (try_prefix("H", ContextKind::h) || try_prefix("HI", ContextKind::hi) ||
        try_prefix("PH", ContextKind::ph)) {
        return spec;
    }
    spec.classical = true;
    spec.classical_name = name;
    return spec;
}

HomotopyContext claim_context(const ClaimContext& ctx, const SpaceDoc& s,
                              const json& claim, ContextKind kind) {
    const json spec = claim.contains("context") ? claim.at("context")
                                                : json{{"type", "identity"}};
    const std::string type = spec.value("type", "identity");
    const auto bundles = make_context_library(s.space, ctx.config.interval_k);
    int index = -1;
    if (type == "const") {
        index = s.label_index(get_str(spec, "at"));
    } else if (type == "identity") {
        index = s.space.n >= 2 ? s.space.n : 0;
    } else {
        bad("unknown context type '" + type + "'");
    }
    const ContextBundle& b = bundles.at(index);
    switch (kind) {
        case ContextKind::h:  return b.h;
        case ContextKind::hi: return b.hi;
        case ContextKind::ph: return b.ph;
    }
    return b.h;
}

json classical_property(const ClaimContext& ctx, const BitopSpace& s,
                        const std::string& name, json& witness) {
    const DecisionOptions opts = ctx.config.decision_options();
    const auto labels = numeric_labels(s.n);
    const auto with_dirs = [&](const std::string& base, auto decider) -> std::optional<bool> {
        if (name == base + "_12") {
            const SelectionReport r = decider(s, 1, 2, opts);
            witness = selection_report_to_json(r, labels);
            return r.verdict;
        }
        if (name == base + "_21") {
            const SelectionReport r = decider(s, 2, 1, opts);
            witness = selection_report_to_json(r, labels);
            return r.verdict;
        }
        if (name == base) {
            const SelectionReport r12 = decider(s, 1, 2, opts);
            const SelectionReport r21 = decider(s, 2, 1, opts);
            witness = json{{"dir12", selection_report_to_json(r12, labels)},
                           {"dir21", selection_report_to_json(r21, labels)}};
            return r12.verdict && r21.verdict;
        }
        return std::nullopt;
    };
    if (name == "delta2_Menger" || name == "delta2_Menger_12" || name == "delta2_Menger_21") {
        const PropertyReport r = delta2_menger(s, opts);
        witness = property_report_to_json(r, labels);
        if (name == "delta2_Menger_12") return r.dir12.verdict;
        if (name == "delta2_Menger_21") return r.dir21.verdict;
        return r.verdict;
    }
    if (auto v = with_dirs("weakly_Menger",
                           [](const BitopSpace& y, int i, int j, const DecisionOptions& o) {
                               return weakly_menger(y, i, j, o);
                           })) {
        return *v;
    }
    if (auto v = with_dirs("almost_Menger",
                           [](const BitopSpace& y, int i, int j, const DecisionOptions& o) {
                               return almost_menger(y, i, j, o);
                           })) {
        return *v;
    }
    if (auto v = with_dirs("almost_Rothberger",
                           [](const BitopSpace& y, int i, int j, const DecisionOptions& o) {
                               return almost_rothberger(y, i, j, o);
                           })) {
        return *v;
    }
    bad("unknown classical property '" + name + "'");
}

ClaimResult eval_claim(const ClaimContext& ctx, const json& claim) {
    ClaimResult r;
    r.claim = claim;
    r.expected = claim.contains("expect") ? claim.at("expect") : json(true);
    const std::string check = get_str(claim, "check");
    const InstanceDoc& doc = ctx.doc;
    r.method = "direct";

    if (check == "continuous") {
        const MapDoc& m = doc.map(get_str(claim, "map"));
        const int index = claim.value("index", 1);
        if (index != 1 && index != 2) bad("continuity index must be 1 or 2");
        const SpaceDoc& from = doc.space(m.from);
        const SpaceDoc& to = doc.space(m.to);
        const auto w =
            continuity_violation(from.space.topo(index), to.space.topo(index), m.map);
        r.computed = !w.has_value();
        if (w) {
            r.witness = json{{"index", index},
                             {"open", set_to_json(w->open_set, to.labels)},
                             {"preimage", set_to_json(m.map.preimage(w->open_set), from.labels)}};
        }
    } else if (check == "pairwise_continuous") {
        const MapDoc& m = doc.map(get_str(claim, "map"));
        const SpaceDoc& from = doc.space(m.from);
        const SpaceDoc& to = doc.space(m.to);
        const auto w = pairwise_continuity_violation(from.space, to.space, m.map);
        r.computed = !w.has_value();
        if (w) {
            r.witness = json{{"index", w->index},
                             {"open", set_to_json(w->open_set, to.labels)}};
        }
    } else if (check == "compose_table") {
        const MapDoc& outer = doc.map(get_str(claim, "outer"));
        const MapDoc& inner = doc.map(get_str(claim, "inner"));
        const PointMap got = compose(outer.map, inner.map);
        const SpaceDoc& dom = doc.space(inner.from);
        const SpaceDoc& cod = doc.space(outer.to);
        json table;
        for (int x = 0; x < got.dom_n; ++x) table[dom.labels[x]] = cod.labels[got(x)];
        if (claim.contains("equals")) {
            r.computed = (table == claim.at("equals"));
            r.witness = json{{"table", table}};
        } else {
            r.computed = table;
        }
    } else if (check == "pairwise_t1") {
        const SpaceDoc& s = doc.space(get_str(claim, "space"));
        const auto w = pairwise_t1_violation(s.space);
        r.computed = !w.has_value();
        if (w) r.witness = json{{"x", s.labels[w->x]}, {"y", s.labels[w->y]}};
    } else if (check == "regular_wrt") {
        const SpaceDoc& s = doc.space(get_str(claim, "space"));
        const int index = claim.value("index", 1);
        const auto w = regularity_violation(s.space, index);
        r.computed = !w.has_value();
        if (w) {
            r.witness = json{{"x", s.labels[w->x]},
                             {"closed_set", set_to_json(w->closed_set, s.labels)}};
        }
    } else if (check == "pairwise_regular") {
        const SpaceDoc& s = doc.space(get_str(claim, "space"));
        r.computed = is_pairwise_regular(s.space);
    } else if (check == "pairwise_hausdorff") {
        const SpaceDoc& s = doc.space(get_str(claim, "space"));
        r.computed = is_pairwise_hausdorff(s.space);
    } else if (check == "pairwise_t3") {
        const SpaceDoc& s = doc.space(get_str(claim, "space"));
        r.computed = is_pairwise_t3(s.space);
    } else if (check == "pairwise_locally_compact") {
        const SpaceDoc& s = doc.space(get_str(claim, "space"));
        r.computed = is_pairwise_locally_compact(s.space);
    } else if (check == "pairwise_p_space") {
        const SpaceDoc& s = doc.space(get_str(claim, "space"));
        r.computed = is_pairwise_p_space(s.space);
    } else if (check == "prop_2_2") {
        const SpaceDoc& s = doc.space(get_str(claim, "space"));
        const Prop22Report rep = check_prop_2_2(s.space);
        r.computed = to_string(rep.verdict);
        json w;
        w["weak_reading"] = to_string(rep.verdict_weak_reading);
        if (rep.witness_open) w["witness_open"] = set_to_json(*rep.witness_open, s.labels);
        r.witness = w;
    } else if (check == "btds_homotopy" || check == "btds_homotopy_boundary") {
        const HomotopyDoc& h = doc.homotopy(get_str(claim, "homotopy"));
        const MapDoc& f = doc.map(get_str(claim, "f"));
        const MapDoc& g = doc.map(get_str(claim, "g"));
        const HomotopyVerdict v = verify_btds_homotopy(h.homotopy, f.map, g.map);
        const SpaceDoc& xs = doc.space(h.x);
        const SpaceDoc& ys = doc.space(h.y);
        json w;
        if (v.boundary) {
            w["boundary"] = json{{"x", xs.labels[v.boundary->x]}, {"end", v.boundary->end}};
        }
        if (v.continuity) {
            w["continuity"] = json{{"index", v.continuity->index},
                                   {"open", set_to_json(v.continuity->open_set, ys.labels)}};
        }
        r.witness = w;
        r.computed = check == "btds_homotopy" ? v.ok : !v.boundary.has_value();
    } else if (check == "iteration_homotopy") {
        const HomotopyDoc& h = doc.homotopy(get_str(claim, "homotopy"));
        const MapDoc& f = doc.map(get_str(claim, "f"));
        const MapDoc& g = doc.map(get_str(claim, "g"));
        const SpaceDoc& xs = doc.space(h.x);
        const int x0 = xs.label_index(get_str(claim, "x0"));
        const HomotopyVerdict v = verify_iteration_homotopy(h.homotopy, f.map, g.map, x0);
        r.computed = v.ok;
        if (v.boundary) {
            r.witness = json{{"boundary", json{{"x", xs.labels[v.boundary->x]},
                                               {"end", v.boundary->end}}}};
        }
    } else if (check == "path_homotopy") {
        const HomotopyDoc& h = doc.homotopy(get_str(claim, "homotopy"));
        const SpaceDoc& xs = doc.space(h.x);
        if (!xs.interval) bad("path_homotopy: domain space must be an interval model");
        const MapDoc& f = doc.map(get_str(claim, "f"));
        const MapDoc& g = doc.map(get_str(claim, "g"));
        const SpaceDoc& ys = doc.space(h.y);
        const int from = ys.label_index(get_str(claim, "from"));
        const int to = ys.label_index(get_str(claim, "to"));
        const PathHomotopyVerdict v =
            verify_path_homotopy(h.homotopy, *xs.interval, f.map, g.map, from, to);
        r.computed = v.ok;
        json w;
        if (v.condition) {
            w["condition"] =
                json{{"kind", v.condition->kind == PathHomotopyWitness::Kind::endpoint_column
                                  ? "endpoint_column"
                                  : "interior_row"},
                     {"m", xs.labels[v.condition->m]},
                     {"t", v.condition->t}};
        }
        if (v.continuity) {
            w["continuity"] = json{{"index", v.continuity->index},
                                   {"open", set_to_json(v.continuity->open_set, ys.labels)}};
        }
        r.witness = w;
    } else if (check == "orbit") {
        const SpaceDoc& s = doc.space(get_str(claim, "space"));
        const MapDoc& m = doc.map(get_str(claim, "map"));
        const Btds b = Btds::unchecked(s.space, m.map);
        const std::string kind_name = claim.value("kind", "forward");
        OrbitKind kind = OrbitKind::forward;
        if (kind_name == "backward") kind = OrbitKind::backward;
        else if (kind_name == "full") kind = OrbitKind::full;
        else if (kind_name != "forward") bad("orbit kind must be forward/backward/full");
        const Orbit o = orbit(b, s.label_index(get_str(claim, "x")), kind);
        json points = json::array();
        for (int p : o.points) points.push_back(s.labels[p]);
        r.computed = json{{"points", points}, {"period", o.period}};
        r.witness = json{{"certified", b.certified}};
    } else if (check == "h_property") {
        const SpaceDoc& s = doc.space(get_str(claim, "space"));
        const std::string name = get_str(claim, "property");
        const PropertySpec spec = parse_property_name(name);
        if (spec.classical) bad("h_property: '" + name + "' is not an H/HI/PH property");
        const HomotopyContext context = claim_context(ctx, s, claim, spec.kind);
        const PropertyReport rep =
            decide_h_property(s.space, spec.property, context, ctx.config.readings,
                              ctx.config.force_contexts, ctx.config.decision_options());
        r.computed = rep.verdict;
        r.witness = property_report_to_json(rep, s.labels);
        r.method = rep.dir12.method == DecisionMethod::both &&
                           rep.dir21.method == DecisionMethod::both
                       ? "both"
                       : "characterization";
    } else if (check == "classical") {
        const SpaceDoc& s = doc.space(get_str(claim, "space"));
        r.computed = classical_property(ctx, s.space, get_str(claim, "property"), r.witness);
        r.method = "both";
    } else if (check == "search_homotopy") {
        const SpaceDoc& xs = doc.space(get_str(claim, "X"));
        const SpaceDoc& ys = doc.space(get_str(claim, "Y"));
        const MapDoc& f = doc.map(get_str(claim, "f"));
        const MapDoc& g = doc.map(get_str(claim, "g"));
        const MapDoc& F = doc.map(get_str(claim, "F"));
        const int k_cap = claim.value("k_cap", hard_max_interval_k);
        const std::string mode = claim.value("mode", "btds");
        SearchResult res;
        if (mode == "btds") {
            res = search_btds_homotopy_escalating(xs.space, ys.space, f.map, g.map,
                                                  F.map, k_cap);
        } else if (mode == "path") {
            if (!xs.interval) bad("search_homotopy: path mode needs an interval domain");
            res = search_path_homotopy_escalating(
                *xs.interval, ys.space, f.map, g.map, F.map,
                ys.label_index(get_str(claim, "from")),
                ys.label_index(get_str(claim, "to")), k_cap);
        } else {
            bad("search_homotopy: mode must be btds or path");
        }
        switch (res.status) {
            case SearchStatus::found:     r.computed = "found"; break;
            case SearchStatus::exhausted: r.computed = "exhausted"; break;
            case SearchStatus::timeout:   r.computed = "timeout"; break;
        }
        r.witness = json{{"level", res.level}, {"tried", res.tried}};
        if (res.homotopy) {
            json rows = json::array();
            for (int x = 0; x < res.homotopy->X.n; ++x) {
                json row = json::array();
                for (int t = 0; t < res.homotopy->T.n(); ++t) {
                    row.push_back(ys.labels[res.homotopy->at(x, t)]);
                }
                rows.push_back(row);
            }
            r.witness["table"] = rows;
        }
    } else {
        bad("unknown claim check '" + check + "'");
    }

    r.match = (r.computed == r.expected);
    return r;
}

}  // namespace

CheckReport run_claims(const InstanceDoc& doc, const SweepConfig& config) {
    CheckReport report;
    report.name = doc.name;
    report.anchor = doc.anchor;
    const ClaimContext ctx{doc, config};
    for (const auto& claim : doc.claims) {
        report.claims.push_back(eval_claim(ctx, claim));
        (report.claims.back().match ? report.matched : report.mismatched) += 1;
    }
    return report;
}

json CheckReport::to_json() const {
    json out;
    out["name"] = name;
    out["anchor"] = anchor;
    json list = json::array();
    for (const auto& c : claims) {
        json e;
        e["claim"] = c.claim;
        e["expected"] = c.expected;
        e["computed"] = c.computed;
        e["match"] = c.match;
        if (!c.witness.is_null()) e["witness"] = c.witness;
        e["method"] = c.method;
        list.push_back(e);
    }
    out["claims"] = list;
    out["summary"] = json{{"total", claims.size()},
                          {"matched", matched},
                          {"mismatched", mismatched}};
    return out;
}

std::string CheckReport::to_text() const {
    std::string out = "instance " + name + "\n";
    for (const auto& c : claims) {
        out += c.match ? "  [AGREE]    " : "  [MISMATCH] ";
        out += c.claim.value("check", "?");
        json echo = c.claim;
        echo.erase("check");
        echo.erase("expect");
        if (!echo.empty()) out += " " + echo.dump();
        out += " expected=" + c.expected.dump() + " computed=" + c.computed.dump();
        if (!c.match && !c.witness.is_null()) out += " witness=" + c.witness.dump();
        out += "\n";
    }
    out += "summary: " + std::to_string(matched) + " agree, " +
           std::to_string(mismatched) + " mismatch\n";
    return out;
}

}  // namespace btds::lab
