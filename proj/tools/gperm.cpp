// Command-line front end. Every subcommand builds a JSON document; the
// default human output is a short rendering of that document.

#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gperm/appendix.hpp"
#include "gperm/classify.hpp"
#include "gperm/conditions.hpp"
#include "gperm/report.hpp"
#include "gperm/strata.hpp"
#include "gperm/suspension.hpp"

using namespace gperm;

namespace {

struct Globals {
    bool json = false;
    std::uint64_t seed = 0;
    std::string sym = "relabel,rotate,swap";
    int limit = 16;
    long budget = 200000;
    std::string only;
};

struct Output {
    Json doc;
    std::string text;
    int status = 0;
};

Json envelope(const std::string& command) { return Json{{"schema", kSchemaVersion}, {"command", command}}; }

std::string orders_text(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return "{" + s + "}";
}

std::string pattern_line(const SingularityPattern& p) {
    return p.to_string() + " g=" + std::to_string(p.genus) + " dim=" + std::to_string(p.dimension);
}

AdmissibleVector lambda_for(const GeneralizedPermutation& gp, const std::string& text) {
    if (text.empty()) return default_lambda(gp);
    auto lambda = parse_lambda(gp, text);
    if (!is_admissible(gp, lambda)) throw Error(ErrorKind::Infeasible, "lengths do not balance the two rows");
    return lambda;
}

std::string lambda_line(const GeneralizedPermutation& gp, const AdmissibleVector& lambda) {
    std::string s;
    for (int a = 1; a <= gp.letters(); ++a)
        s += (a > 1 ? " " : "") + gp.names[a - 1] + "=" + std::to_string(lambda[a - 1]);
    return s;
}

Output cmd_parse(const std::string& text, const SymmetryGroup& sym) {
    auto gp = parse(text);
    auto canon = canonical_form(gp, sym);
    Output out{envelope("parse")};
    out.doc["permutation"] = to_json(gp);
    out.doc["renumbered"] = render(relabeled(gp));
    out.doc["canonical"] = render(canon);
    out.doc["symmetry"] = sym.to_string();
    out.text = render(relabeled(gp)) + "\ntype (" + std::to_string(gp.r()) + "," + std::to_string(gp.l()) +
               "), " + std::to_string(gp.letters()) + " letters\ncanonical " + render(canon) + "\n";
    return out;
}

Output cmd_stratum(const std::string& text) {
    auto gp = parse(text);
    auto p = singularity_pattern(gp);
    Output out{envelope("stratum")};
    out.doc["permutation"] = render(gp);
    out.doc["stratum"] = to_json(p);
    out.text = pattern_line(p) + "\n";
    return out;
}

Output cmd_check(const std::string& kind, const std::string& text) {
    auto gp = parse(text);
    Output out{envelope("check")};
    out.doc["condition"] = kind;
    out.doc["permutation"] = render(gp);
    std::ostringstream s;
    if (kind == "weak") {
        auto w = weak_reducibility(gp);
        out.doc["verdict"] = w ? "WeaklyReducible" : "WeaklyIrreducible";
        if (w) out.doc["split"] = to_json(*w);
        s << (w ? "WeaklyReducible\n" + describe(*w) : std::string("WeaklyIrreducible")) << "\n";
    } else if (kind == "red") {
        auto d = red_condition(gp);
        out.doc["verdict"] = d ? "Violated" : "Satisfied";
        if (d) out.doc["decomposition"] = to_json(gp, *d);
        s << (d ? "Violated\n" + describe(gp, *d) : std::string("Satisfied")) << "\n";
    } else if (kind == "star") {
        bool holds = condition_star(gp);
        out.doc["verdict"] = holds ? "Holds" : "Fails";
        s << (holds ? "Holds" : "Fails") << "\n";
    } else {
        auto v = is_irreducible(gp);
        const char* verdict = v.kind == IrreducibilityVerdict::Kind::Irreducible ? "Irreducible"
                              : v.kind == IrreducibilityVerdict::Kind::FailsWeak ? "FailsWeak"
                                                                                  : "FailsRed";
        out.doc["verdict"] = verdict;
        s << verdict << "\n";
        if (v.weak) {
            out.doc["split"] = to_json(*v.weak);
            s << describe(*v.weak) << "\n";
        }
        if (v.red) {
            out.doc["decomposition"] = to_json(gp, *v.red);
            s << describe(gp, *v.red) << "\n";
        }
    }
    out.text = s.str();
    return out;
}

Output cmd_suspend(const std::string& text, const std::string& lambda_text) {
    auto gp = parse(text);
    auto lambda = lambda_for(gp, lambda_text);
    auto cover = build_cover(gp, lambda);
    Output out{envelope("suspend")};
    out.doc["permutation"] = render(gp);
    out.doc["lambda"] = to_json(gp, lambda);
    out.doc["width"] = width(gp, lambda);
    out.doc["cover"] = {{"squares", cover.squares()},
                        {"connected", is_connected(cover)},
                        {"euler_characteristic", cover_euler_characteristic(cover)},
                        {"base_orders", base_orders(cover)}};
    out.text = lambda_line(gp, lambda) + "\nwidth " + std::to_string(width(gp, lambda)) + ", cover of " +
               std::to_string(cover.squares()) + " squares, " + (is_connected(cover) ? "connected" : "disconnected") +
               ", Euler characteristic " + std::to_string(cover_euler_characteristic(cover)) + ", base orders " +
               orders_text(base_orders(cover)) + "\n";
    return out;
}

Output cmd_spectrum(const std::string& text, const std::string& lambda_text) {
    auto gp = parse(text);
    auto lambda = lambda_for(gp, lambda_text);
    auto spectrum = separatrix_spectrum(gp, lambda);
    Output out{envelope("spectrum")};
    out.doc["permutation"] = render(gp);
    out.doc["lambda"] = to_json(gp, lambda);
    out.doc["spectrum"] = to_json(spectrum);
    out.doc["shortest_non_gamma"] = shortest_non_gamma(spectrum);
    out.doc["gamma_mult_one_evidence"] = gamma_mult_one_evidence(gp, lambda);
    std::ostringstream s;
    auto germ = [](const Germ& g) { return std::string(g.top ? "top " : "bottom ") + std::to_string(g.x); };
    for (const auto& seg : spectrum.segments)
        s << germ(seg.start) << " -> " << germ(seg.end) << "  len " << seg.crossings << (seg.is_gamma ? "  gamma" : "")
          << "\n";
    s << "shortest non-gamma " << shortest_non_gamma(spectrum) << "\n";
    out.text = s.str();
    return out;
}

Output cmd_decompose(const std::string& text, const std::string& lambda_text) {
    auto gp = parse(text);
    auto lambda = lambda_for(gp, lambda_text);
    auto d = cylinder_decomposition(gp, lambda);
    Output out{envelope("decompose")};
    out.doc["permutation"] = render(gp);
    out.doc["lambda"] = to_json(gp, lambda);
    out.doc["decomposition"] = to_json(d);
    std::ostringstream s;
    s << d.cylinders.size() << " vertical cylinders\n";
    for (size_t i = 0; i < d.cylinders.size(); ++i) {
        const auto& c = d.cylinders[i];
        s << i << ": width " << c.width << ", circumference " << c.circumference;
        if (c.angle) s << ", simple, angle " << c.angle->s << " (complement " << c.angle->complement << ")";
        if (static_cast<int>(i) == head_cylinder(d)) s << ", head";
        s << "\n";
    }
    out.text = s.str();
    return out;
}

Output cmd_angle(const std::string& text, const std::string& lambda_text, int cylinder) {
    auto gp = parse(text);
    auto lambda = lambda_for(gp, lambda_text);
    if (cylinder < 0) cylinder = head_cylinder(cylinder_decomposition(gp, lambda));
    auto a = simple_cylinder_angle(gp, lambda, cylinder);
    Output out{envelope("angle")};
    out.doc["permutation"] = render(gp);
    out.doc["lambda"] = to_json(gp, lambda);
    out.doc["cylinder"] = cylinder;
    out.doc["s"] = a.s;
    out.doc["complement"] = a.complement;
    out.text = "s=" + std::to_string(a.s) + " complement=" + std::to_string(a.complement) + "\n";
    return out;
}

Output cmd_vperm(const std::string& text, const std::string& lambda_text) {
    auto gp = parse(text);
    auto lambda = lambda_for(gp, lambda_text);
    auto e = vertical_permutation(gp, lambda);
    Output out{envelope("vperm")};
    out.doc["permutation"] = render(gp);
    out.doc["lambda"] = to_json(gp, lambda);
    out.doc["result"] = {{"permutation", render(e.gp)}, {"lambda", to_json(e.gp, e.lambda)}};
    out.text = render(e.gp) + "\n" + lambda_line(e.gp, e.lambda) + "\n";
    return out;
}

Output cmd_orbit(const std::string& text, const std::string& lambda_text, std::size_t cap, const SymmetryGroup& sym) {
    auto gp = parse(text);
    auto lambda = lambda_for(gp, lambda_text);
    auto orbit = sl2z_orbit(gp, lambda, cap);
    std::map<CanonicalKey, std::string> classes;
    for (size_t i = 0; i < orbit.covers.size(); ++i) {
        if (horizontal_cylinders(orbit.covers[i]).base.size() != 1) continue;
        auto e = extract_permutation(orbit.covers[i]);
        classes.emplace(canonical_key(e.gp, sym), orbit.words[i].empty() ? "identity" : orbit.words[i]);
    }
    Output out{envelope("orbit")};
    out.doc["permutation"] = render(gp);
    out.doc["lambda"] = to_json(gp, lambda);
    out.doc["size"] = orbit.forms.size();
    out.doc["truncated"] = orbit.truncated;
    Json list = Json::array();
    std::ostringstream s;
    s << "orbit size " << orbit.forms.size() << (orbit.truncated ? " (truncated)" : "") << ", " << classes.size()
      << " one-cylinder classes\n";
    for (const auto& [key, word] : classes) {
        list.push_back({{"permutation", render(from_key(key))}, {"word", word}});
        s << render(from_key(key)) << "  via " << word << "\n";
    }
    out.doc["one_cylinder_classes"] = list;
    out.text = s.str();
    return out;
}

Output cmd_enumerate(const std::string& pattern, const std::string& type, const EnumOptions& opts) {
    std::vector<GeneralizedPermutation> classes;
    Output out{envelope("enumerate")};
    if (!pattern.empty()) {
        auto orders = parse_orders(pattern);
        classes = enumerate_stratum(orders, opts);
        out.doc["stratum"] = to_json(make_pattern(orders));
    } else {
        int r = 0, l = 0;
        char comma = 0;
        std::istringstream in(type);
        if (!(in >> r >> comma >> l) || comma != ',' || r < 1 || l < 1)
            throw Error(ErrorKind::BadParameters, "type must read R,L with positive R and L");
        classes = enumerate_type(r, l, opts);
        out.doc["type"] = {r, l};
    }
    Json list = Json::array();
    std::ostringstream s;
    for (const auto& gp : classes) {
        auto p = singularity_pattern(gp);
        list.push_back({{"permutation", render(gp)}, {"type", {gp.r(), gp.l()}}, {"stratum", p.to_string()}});
        s << render(gp) << "  " << p.to_string() << "\n";
    }
    out.doc["symmetry"] = opts.sym.to_string();
    out.doc["count"] = classes.size();
    out.doc["classes"] = list;
    out.text = s.str() + std::to_string(classes.size()) + " classes\n";
    return out;
}

Output cmd_classify(const std::string& pattern, const MoveConfig& cfg) {
    auto rep = component_report(parse_orders(pattern), cfg);
    Output out{envelope("classify")};
    out.doc = to_json(rep);
    std::ostringstream s;
    s << to_tsv(rep) << rep.stratum.to_string() << ": " << rep.classes.size() << " classes, " << rep.groups
      << " merge groups, components between " << rep.lower_bound << " and " << rep.upper_bound << "\n";
    for (const auto& c : rep.citations) s << "cited lower bound " << rep.cited_lower_bound << ": " << c << "\n";
    out.text = s.str();
    return out;
}

Json excision_json(const Excision& e) {
    Json j{{"rotation", {e.top_shift, e.bottom_shift}},
           {"rotated", render(e.rotated)},
           {"restriction", render(e.hat)},
           {"restriction_stratum", singularity_pattern(e.hat).to_string()},
           {"angle", {{"s", e.angle.s}, {"complement", e.angle.complement}}}};
    if (e.collapsed) {
        j["collapsed"] = render(*e.collapsed);
        j["collapsed_stratum"] = singularity_pattern(*e.collapsed).to_string();
    }
    return j;
}

Output cmd_excise(const std::string& text) {
    auto gp = parse(text);
    auto e = excise_simple_cylinder(gp);
    Output out{envelope("excise")};
    out.doc["permutation"] = render(gp);
    out.doc["excision"] = excision_json(e);
    std::ostringstream s;
    s << "rotation (" << e.top_shift << "," << e.bottom_shift << ") " << render(e.rotated) << "\nrestriction "
      << render(e.hat) << "  " << singularity_pattern(e.hat).to_string() << "\nangle " << e.angle.s << "\n";
    if (e.collapsed)
        s << "collapsed " << render(*e.collapsed) << "  " << singularity_pattern(*e.collapsed).to_string() << "\n";
    out.text = s.str();
    return out;
}

Output cmd_bubble(const std::string& text, int s, long budget) {
    auto gp = parse(text);
    auto result = bubble(gp, s, budget);
    auto p = singularity_pattern(result);
    Output out{envelope("bubble")};
    out.doc["permutation"] = render(gp);
    out.doc["angle"] = s;
    out.doc["result"] = render(result);
    out.doc["stratum"] = to_json(p);
    out.text = render(result) + "\n" + pattern_line(p) + "\n";
    return out;
}

Output cmd_rep(const std::string& kind, const std::vector<std::string>& args) {
    auto number = [&](size_t i) {
        if (i >= args.size()) throw Error(ErrorKind::BadParameters, "rep " + kind + " needs more integer arguments");
        try {
            size_t used = 0;
            int v = std::stoi(args[i], &used);
            if (used != args[i].size()) throw std::invalid_argument(args[i]);
            return v;
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::BadParameters, "'" + args[i] + "' is not an integer");
        }
    };
    GeneralizedPermutation gp;
    if (kind == "pi1") gp = hyperelliptic_rep(Family::Pi1, number(0), number(1));
    else if (kind == "pi2") gp = hyperelliptic_rep(Family::Pi2, number(0), number(1));
    else if (kind == "pi1a") gp = hyperelliptic_rep(Family::Pi1a, number(0), number(1), number(2));
    else {
        if (args.empty()) throw Error(ErrorKind::BadParameters, "rep irr needs a name");
        gp = irreducible_rep(args[0]);
    }
    auto p = singularity_pattern(gp);
    Output out{envelope("rep")};
    out.doc["family"] = kind;
    out.doc["permutation"] = render(gp);
    out.doc["stratum"] = to_json(p);
    out.text = render(gp) + "\n" + pattern_line(p) + "\n";
    return out;
}

Output cmd_reproduce(const AppendixOptions& opts) {
    auto results = reproduce_appendix(opts);
    Output out{envelope("reproduce-appendix")};
    Json checks = Json::array();
    std::ostringstream s;
    int failed = 0;
    for (const auto& r : results) {
        checks.push_back(to_json(r));
        failed += r.status == CheckResult::Status::Fail;
        s << (r.status == CheckResult::Status::Pass ? "PASS" : r.status == CheckResult::Status::Fail ? "FAIL" : "SKIP")
          << "  " << r.id << " [" << r.criterion << ", " << r.source << "]  expected: " << r.expected
          << "\n      actual: " << r.actual << "\n      time: " << std::fixed << std::setprecision(2) << r.seconds
          << " s (limit " << std::defaultfloat << r.limit_seconds << " s)\n";
    }
    s << results.size() - failed << "/" << results.size() << " checks pass\n";
    out.doc["checks"] = checks;
    out.doc["failed"] = failed;
    out.text = s.str();
    out.status = failed ? 1 : 0;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"One-cylinder half-translation surfaces from generalized permutations"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--json", g.json, "Emit JSON instead of text");
    app.add_option("--seed", g.seed, "Seed for sampled lengths");
    app.add_option("--sym", g.sym, "Symmetries: relabel,rotate[,swap][,reverse]");
    app.add_option("--limit", g.limit, "Largest r+l for enumeration, or the orbit size cap");
    app.add_option("--budget", g.budget, "Candidate budget for bubbling");
    app.add_option("--only", g.only, "Run only checks whose id starts with this prefix");

    std::function<Output()> run;
    std::string perm, lambda_text, kind, pattern, type;
    std::vector<std::string> rest;
    int cylinder = -1, angle = 0;
    bool limit_given = false;

    auto with_perm = [&](CLI::App* sub) { sub->add_option("permutation", perm, "\"top / bottom\"")->required(); };
    auto with_lambda = [&](CLI::App* sub) {
        sub->add_option("--lambda", lambda_text, "Lengths, \"a=2 b=1\" or a list in position order");
    };
    auto symmetry = [&] { return SymmetryGroup::parse(g.sym); };
    auto enum_opts = [&] {
        EnumOptions o;
        o.sym = symmetry();
        o.limit = g.limit;
        return o;
    };

    auto* sub = app.add_subcommand("parse", "Validate and renumber a permutation");
    with_perm(sub);
    sub->callback([&] { run = [&] { return cmd_parse(perm, symmetry()); }; });

    sub = app.add_subcommand("stratum", "Singularity pattern, genus and dimension");
    with_perm(sub);
    sub->callback([&] { run = [&] { return cmd_stratum(perm); }; });

    sub = app.add_subcommand("check", "Test weak reducibility, Red, (*) or irreducibility");
    sub->add_option("condition", kind)->required()->check(CLI::IsMember({"weak", "red", "star", "irreducible"}));
    with_perm(sub);
    sub->callback([&] { run = [&] { return cmd_check(kind, perm); }; });

    sub = app.add_subcommand("suspend", "Build the suspension and its square-tiled double cover");
    with_perm(sub);
    with_lambda(sub);
    sub->callback([&] { run = [&] { return cmd_suspend(perm, lambda_text); }; });

    sub = app.add_subcommand("spectrum", "Vertical separatrix lengths");
    with_perm(sub);
    with_lambda(sub);
    sub->callback([&] { run = [&] { return cmd_spectrum(perm, lambda_text); }; });

    sub = app.add_subcommand("decompose", "Vertical cylinder decomposition");
    with_perm(sub);
    with_lambda(sub);
    sub->callback([&] { run = [&] { return cmd_decompose(perm, lambda_text); }; });

    sub = app.add_subcommand("angle", "Angle of a simple vertical cylinder");
    with_perm(sub);
    with_lambda(sub);
    sub->add_option("--cylinder", cylinder, "Cylinder index; defaults to the head cylinder");
    sub->callback([&] { run = [&] { return cmd_angle(perm, lambda_text, cylinder); }; });

    sub = app.add_subcommand("vperm", "Permutation of the vertical direction");
    with_perm(sub);
    with_lambda(sub);
    sub->callback([&] { run = [&] { return cmd_vperm(perm, lambda_text); }; });

    sub = app.add_subcommand("orbit", "SL(2,Z) orbit of the double cover");
    with_perm(sub);
    with_lambda(sub);
    sub->callback([&] {
        limit_given = app.count("--limit") > 0;
        run = [&] { return cmd_orbit(perm, lambda_text, limit_given ? g.limit : 20000, symmetry()); };
    });

    sub = app.add_subcommand("enumerate", "List the classes of a stratum or of a type");
    auto* pat = sub->add_option("--pattern", pattern, "Orders, e.g. 8 or -1,5");
    auto* typ = sub->add_option("--type", type, "R,L");
    pat->excludes(typ);
    sub->require_option(1);
    sub->callback([&] { run = [&] { return cmd_enumerate(pattern, type, enum_opts()); }; });

    sub = app.add_subcommand("classify", "Merge groups and component bounds of a stratum");
    sub->add_option("pattern", pattern, "Orders, e.g. 8 or -1,5")->required();
    sub->callback([&] {
        run = [&] {
            MoveConfig cfg;
            cfg.enumeration = enum_opts();
            cfg.seed = g.seed;
            return cmd_classify(pattern, cfg);
        };
    });

    sub = app.add_subcommand("excise", "Remove a simple vertical cylinder");
    with_perm(sub);
    sub->callback([&] { run = [&] { return cmd_excise(perm); }; });

    sub = app.add_subcommand("bubble", "Insert a simple cylinder of the given angle");
    with_perm(sub);
    sub->add_option("angle", angle, "Angle s in multiples of pi")->required()->check(CLI::PositiveNumber);
    sub->callback([&] { run = [&] { return cmd_bubble(perm, angle, g.budget); }; });

    sub = app.add_subcommand("rep", "Representative permutations");
    sub->add_option("family", kind)->required()->check(CLI::IsMember({"pi1", "pi2", "pi1a", "irr"}));
    sub->add_option("args", rest, "r l [a], or a representative name");
    sub->callback([&] { run = [&] { return cmd_rep(kind, rest); }; });

    sub = app.add_subcommand("reproduce-appendix", "Run the reproduction checks");
    sub->callback([&] {
        run = [&] {
            AppendixOptions opts;
            opts.sym = symmetry();
            opts.seed = g.seed;
            opts.only = g.only;
            return cmd_reproduce(opts);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Output out = run();
        if (g.json) std::cout << out.doc.dump(2) << "\n";
        else std::cout << out.text;
        return out.status;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
