#include "gperm/report.hpp"

#include <sstream>

namespace gperm {

Json to_json(const GeneralizedPermutation& gp) {
    return Json{{"permutation", render(gp)}, {"type", {gp.r(), gp.l()}}, {"letters", gp.letters()}};
}

Json to_json(const SingularityPattern& p) {
    return Json{{"stratum", p.to_string()}, {"orders", p.orders}, {"genus", p.genus}, {"dimension", p.dimension}};
}

Json to_json(const GeneralizedPermutation& gp, const AdmissibleVector& lambda) {
    Json out = Json::object();
    for (int a = 1; a <= gp.letters(); ++a) out[gp.names[a - 1]] = lambda[a - 1];
    return out;
}

Json to_json(const SeparatrixSpectrum& s) {
    Json segs = Json::array();
    for (const auto& seg : s.segments) {
        segs.push_back({{"len", seg.crossings},
                        {"is_gamma", seg.is_gamma},
                        {"start", {{"top", seg.start.top}, {"x", seg.start.x}}},
                        {"end", {{"top", seg.end.top}, {"x", seg.end.x}}}});
    }
    return Json{{"segments", segs}};
}

Json to_json(const CylinderDecomposition& d) {
    Json cyls = Json::array();
    for (const auto& c : d.cylinders) {
        Json j{{"width", c.width}, {"circumference", c.circumference}, {"simple", c.simple}};
        if (c.angle) j["angle"] = {{"s", c.angle->s}, {"complement", c.angle->complement}};
        cyls.push_back(j);
    }
    return Json{{"cylinders", cyls}, {"head", head_cylinder(d)}};
}

Json to_json(const WeakSplit& w) {
    return Json{{"i0", w.i0}, {"j0", w.j0}, {"bullet", w.bullet}};
}

Json to_json(const GeneralizedPermutation& gp, const RedDecomposition& d) {
    auto l = d.lists(gp);
    auto names = [&](const std::vector<int>& v) {
        Json out = Json::array();
        for (int a : v) out.push_back(gp.names[a - 1]);
        return out;
    };
    return Json{{"i0", d.i0},
                {"i1", d.i1},
                {"j0", d.j0},
                {"j1", d.j1},
                {"swapped", d.swapped},
                {"Y1'", names(l.y1a)},
                {"Y1''", names(l.y1b)},
                {"Y1'''", names(l.y1c)},
                {"Y2'", names(l.y2a)},
                {"Y2''", names(l.y2b)},
                {"Y2'''", names(l.y2c)},
                {"zero", gp.names[l.zero - 1]}};
}

Json to_json(const ComponentReport& rep) {
    Json classes = Json::array();
    for (size_t i = 0; i < rep.classes.size(); ++i) {
        const auto& gp = rep.classes[i];
        classes.push_back({{"index", i},
                           {"permutation", render(gp)},
                           {"type", {gp.r(), gp.l()}},
                           {"tag", rep.tags[i].to_string()},
                           {"group", rep.group[i]}});
    }
    Json edges = Json::array();
    for (const auto& e : rep.edges)
        edges.push_back({{"from", e.from}, {"to", e.to}, {"kind", e.kind}, {"detail", e.detail}});
    return Json{{"schema", kSchemaVersion},
                {"stratum", to_json(rep.stratum)},
                {"symmetry", rep.symmetry},
                {"classes", classes},
                {"groups", rep.groups},
                {"edges", edges},
                {"lower_bound", rep.lower_bound},
                {"upper_bound", rep.upper_bound},
                {"cited_lower_bound", rep.cited_lower_bound},
                {"citations", rep.citations}};
}

std::string to_tsv(const ComponentReport& rep) {
    std::vector<int> degree(rep.classes.size(), 0);
    for (const auto& e : rep.edges) {
        ++degree[e.from];
        ++degree[e.to];
    }
    std::ostringstream out;
    out << "class\tpermutation\ttag\tgroup\tedges\n";
    for (size_t i = 0; i < rep.classes.size(); ++i)
        out << i << '\t' << render(rep.classes[i]) << '\t' << rep.tags[i].to_string() << '\t' << rep.group[i] << '\t'
            << degree[i] << '\n';
    return out.str();
}

}  // namespace gperm
