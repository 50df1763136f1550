#include "resemblance/serialize.hpp"

namespace resemblance {

Json to_json(const Ext& e) { return format(e); }

Json to_json(const ClosedSet& s) {
    Json a = Json::array();
    for (const auto& m : s.members()) a.push_back(format(m));
    return a;
}

Json to_json(const CoveringMap& h) {
    Json img = Json::array();
    for (const auto& m : h.image) img.push_back(format(m));
    return {{"domain", to_json(h.domain)}, {"image", img}, {"level", h.level == Level::Covering ? "covering" : "embedding"}};
}

Json to_json(const FinitePattern& p) {
    Json j;
    j["n"] = p.n;
    Json vals = Json::array(), rems = Json::array(), div = Json::array();
    for (size_t i = 0; i < p.n; ++i) {
        if (i < p.values.size()) vals.push_back(format(p.values[i]));
        rems.push_back(format(p.rem_labels[i]));
        div.push_back(bool(p.divisible[i]));
    }
    j["values"] = vals;
    j["rem_labels"] = rems;
    j["divisible"] = div;
    for (auto [name, m] : {std::pair{"le1", &p.le1}, std::pair{"le2", &p.le2}}) {
        Json rows = Json::array();
        for (const auto& row : *m) {
            Json r = Json::array();
            for (Tri t : row) r.push_back(tri_name(t));
            rows.push_back(r);
        }
        j[name] = rows;
    }
    return j;
}

namespace {

Json values_of(const Calculus& c, const Ordinal& b) {
    Json v;
    Ext a = c.index(b);
    v["index"] = to_json(a);
    if (a.known()) {
        ComponentInfo ci = c.component(a.value);
        v["kappa"] = to_json(ci.kappa);
    } else {
        v["kappa"] = "Undetermined";
    }
    v["max1"] = to_json(c.max1(b));
    return v;
}

} // namespace

Json relation_json(const Calculus& c, const std::string& query, const Verdict& v, const Ordinal& subject) {
    return {{"query", query}, {"verdict", tri_name(v.value)}, {"trace", v.trace}, {"values", values_of(c, subject)}};
}

Json nu_json(const Calculus& c, const std::string& query, const Verdict& v, const Ordinal& subject) {
    Json j = relation_json(c, query, v, subject);
    Ext a = c.index(subject);
    j["max2"] = to_json(max2(c, subject));
    j["nu"] = nullptr;
    j["j_lower"] = nullptr;
    j["j_upper"] = nullptr;
    if (a.known() && c.big_epsilon(a.value)) {
        auto p = nu_position(c, a.value, subject);
        if (p) {
            j["nu"] = format(subject);
            auto ji = j_interval(c, a.value, *p);
            j["j_lower"] = format(ji.lower);
            j["j_upper"] = to_json(ji.upper);
        }
    }
    return j;
}

Json verify_json(const VerifyResult& r, const ClosedSet& x, const Budget& b) {
    Json j{{"set", to_json(x)}, {"verdict", verify_name(r.kind)}};
    if (r.witness) j["witness"] = to_json(*r.witness);
    j["budget"] = {{"terms", b.terms}, {"coeff", b.coeff}, {"nodes", r.nodes}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

} // namespace resemblance
