#include "btds/lab/json_util.hpp"

namespace btds::lab {

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

json set_to_json(PointSet s, const std::vector<std::string>& labels) {
    json out = json::array();
    for (size_t p = 0; p < labels.size(); ++p) {
        if (set_contains(s, static_cast<int>(p))) out.push_back(labels[p]);
    }
    return out;
}

std::vector<std::string> numeric_labels(int n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (int p = 0; p < n; ++p) out.push_back(std::to_string(p));
    return out;
}

json anchor_to_json(const AnchorPair& a, const std::vector<std::string>& labels) {
    return json{{"at0", labels[a.at_zero]}, {"at1", labels[a.at_one]}};
}

json anchors_to_json(const std::vector<AnchorPair>& anchors,
                     const std::vector<std::string>& labels) {
    json out = json::array();
    for (const auto& a : anchors) out.push_back(anchor_to_json(a, labels));
    return out;
}

json cover_to_json(const Cover& c, const std::vector<std::string>& labels) {
    json members = json::array();
    for (PointSet m : c.members) members.push_back(set_to_json(m, labels));
    return json{{"members", members}, {"topology_index", c.topology_index}};
}

json selection_report_to_json(const SelectionReport& r,
                              const std::vector<std::string>& labels) {
    json out;
    out["verdict"] = r.verdict;
    out["method"] = r.method == DecisionMethod::both ? "both" : "characterization";
    if (r.refutation) {
        json ref;
        ref["cover"] = cover_to_json(r.refutation->cover, labels);
        if (r.refutation->anchor) {
            ref["anchor"] = anchor_to_json(*r.refutation->anchor, labels);
        }
        ref["uncoverable_point"] = labels[r.refutation->uncoverable_point];
        out["refutation"] = ref;
    }
    if (!r.selections.empty()) {
        json sels = json::array();
        for (const auto& s : r.selections) {
            json sel;
            sel["cover"] = cover_to_json(s.cover, labels);
            if (s.anchor) sel["anchor"] = anchor_to_json(*s.anchor, labels);
            json chosen = json::array();
            for (PointSet m : s.chosen) chosen.push_back(set_to_json(m, labels));
            sel["chosen"] = chosen;
            sels.push_back(sel);
        }
        out["selections"] = sels;
    }
    return out;
}

json property_report_to_json(const PropertyReport& r,
                             const std::vector<std::string>& labels) {
    return json{{"verdict", r.verdict},
                {"dir12", selection_report_to_json(r.dir12, labels)},
                {"dir21", selection_report_to_json(r.dir21, labels)}};
}

}  // namespace btds::lab
