#include "resemblance/serialize.hpp"
#include "resemblance/suites.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace resemblance;

namespace {

struct Options {
    std::string rho = "1";
    int eps_depth = 1;
    bool sequel = false;
    int budget_terms = 6;
    int budget_coeff = 8;
    std::string format = "text";
    std::uint64_t seed = 0;
};

void load_config(Options& o) {
    const char* path = std::getenv("RESEMBLANCE_CONFIG");
    if (!path) return;
    std::ifstream in(path);
    if (!in) throw Error("Usage", std::string("cannot read config ") + path);
    Json j = Json::parse(in);
    if (j.contains("rho")) o.rho = j["rho"].get<std::string>();
    if (j.contains("epsilon_depth")) o.eps_depth = j["epsilon_depth"];
    if (j.contains("assume_sequel")) o.sequel = j["assume_sequel"];
    if (j.contains("budget_terms")) o.budget_terms = j["budget_terms"];
    if (j.contains("budget_coeff")) o.budget_coeff = j["budget_coeff"];
    if (j.contains("format")) o.format = j["format"];
    if (j.contains("seed")) o.seed = j["seed"];
}

std::vector<Ordinal> parse_set(const std::vector<std::string>& args, int depth) {
    std::string all;
    for (const auto& a : args) all += a + ",";
    std::vector<Ordinal> out;
    std::string cur;
    int par = 0;
    for (char ch : all) {
        if (ch == '{' || ch == '}' || ch == '[' || ch == ']') continue;
        if (ch == '(') ++par;
        if (ch == ')') --par;
        if (ch == ',' && par == 0) {
            if (cur.find_first_not_of(' ') != std::string::npos) out.push_back(parse(cur, depth));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

Json result(const std::string& query, const std::string& verdict, const Trace& trace, Json values) {
    return {{"query", query}, {"verdict", verdict}, {"trace", trace}, {"values", std::move(values)}};
}

Json values_for(const Calculus& c, const Ordinal& b) {
    Json v;
    Ext a = c.index(b);
    v["kappa"] = a.known() ? to_json(c.component(a.value).kappa) : Json("Undetermined");
    v["max1"] = to_json(c.max1(b));
    v["index"] = to_json(a);
    return v;
}

std::string ext_text(const Ext& e, const Trace& t = {}) {
    std::string s = format(e);
    if (!t.empty() && e.kind != Ext::Value) s += " (trace: " + join(t) + ")";
    return s;
}

} // namespace

int main(int argc, char** argv) {
    Options o;
    try {
        load_config(o);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    CLI::App app{"Symbolic calculus for the resemblance relations on ordinals"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--rho", o.rho, "additively indecomposable parameter");
    app.add_option("--epsilon-depth", o.eps_depth, "number of epsilon atoms e0..e{k-1}")->check(CLI::NonNegativeNumber);
    app.add_flag("--assume-sequel", o.sequel, "use max1(kappa_e)=kappa_e*(w+1) for the least epsilon above rho");
    app.add_option("--budget-terms", o.budget_terms)->check(CLI::PositiveNumber);
    app.add_option("--budget-coeff", o.budget_coeff)->check(CLI::PositiveNumber);
    app.add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--seed", o.seed);

    std::string a1, a2, mode = "verify", suite = "all", bound_text = "w*10", xi_text;
    std::vector<std::string> set_args;

    auto* eval = app.add_subcommand("eval", "parse and print in canonical form");
    eval->add_option("ordinal", a1)->required();
    std::map<std::string, CLI::App*> unary;
    for (const char* name : {"kappa", "max1", "max2", "index"}) {
        unary[name] = app.add_subcommand(name, std::string(name) + " of an ordinal");
        unary[name]->add_option("ordinal", a1)->required();
    }
    std::map<std::string, CLI::App*> binary;
    for (const char* name : {"le1", "le2"}) {
        binary[name] = app.add_subcommand(name, std::string("decide ") + name);
        binary[name]->add_option("b1", a1)->required();
        binary[name]->add_option("b2", a2)->required();
    }
    auto* nucmd = app.add_subcommand("nu", "nu_{alpha,xi}");
    nucmd->add_option("alpha", a1)->required();
    nucmd->add_option("xi", a2)->required();
    auto* interval = app.add_subcommand("interval", "component I_a, or J_{a,xi} with --xi");
    interval->add_option("a", a1)->required();
    interval->add_option("--xi", xi_text);
    auto* incomp = app.add_subcommand("incompressible", "incompressible coverings and verification");
    incomp->add_option("set", set_args)->required();
    incomp->add_option("--mode", mode)->check(CLI::IsMember({"verify", "cover", "extend", "build"}));
    auto* search = app.add_subcommand("cover-search", "all coverings of a closed set below a bound");
    search->add_option("set", set_args)->required();
    search->add_option("--bound", bound_text);
    auto* verify = app.add_subcommand("verify", "run invariant suites");
    verify->add_option("--suite", suite);
    auto* exp = app.add_subcommand("export", "export the pattern of a closed set");
    exp->add_option("set", set_args)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Config cfg{parse(o.rho, o.eps_depth), o.eps_depth, o.sequel};
        Calculus c(cfg);
        Budget budget;
        budget.terms = o.budget_terms;
        budget.coeff = o.budget_coeff;
        bool json = o.format == "json";
        if (o.sequel)
            std::cerr << "[assume-sequel] max1(kappa_e) = kappa_e*(w+1) is taken as given for the least epsilon above "
                         "rho; results tagged 'sequel' depend on it\n";
        auto P = [&](const std::string& s) { return parse(s, o.eps_depth); };
        auto emit = [&](const Json& j, const std::string& text) {
            if (json) std::cout << j.dump(2) << "\n";
            else std::cout << text << "\n";
        };

        if (*eval) {
            Ordinal a = P(a1);
            auto cl = classify(a);
            const char* kind = cl.kind == Classification::Zero ? "Zero" : cl.kind == Classification::Limit ? "Limit" : "Successor";
            emit({{"query", "eval " + a1}, {"value", format(a)},
                  {"classify", {{"kind", kind}, {"indecomposable", cl.indecomposable}, {"epsilon", cl.epsilon}}}},
                 format(a));
            return 0;
        }
        for (auto& [name, sub] : unary) {
            if (!*sub) continue;
            Ordinal a = P(a1);
            std::string q = name + " " + a1;
            if (name == "kappa") {
                ComponentInfo ci = c.component(a);
                Json v{{"kappa", to_json(ci.kappa)}, {"max1", to_json(ci.max1)}, {"index", format(a)}};
                emit(result(q, format(ci.kappa), ci.kappa_trace, v), ext_text(ci.kappa, ci.kappa_trace));
            } else if (name == "max1") {
                Max1Info mi = c.max1_info(a);
                Ext m = mi.exact() ? Ext::of(mi.lo) : Ext::undetermined();
                Json j = result(q, format(m), mi.trace, values_for(c, a));
                std::string text = format(m);
                if (!mi.exact()) {
                    j["lower_bound"] = format(mi.lo);
                    text += " (lower bound " + format(mi.lo) + ")";
                }
                emit(j, text);
            } else if (name == "max2") {
                Trace t;
                Ext m = max2(c, a, &t);
                Json j = nu_json(c, q, Verdict{Tri::Undetermined, t}, a);
                j["verdict"] = format(m);
                emit(j, format(m));
            } else {
                Trace t;
                Ext i = c.index(a, &t);
                emit(result(q, format(i), t, values_for(c, a)), format(i));
            }
            return 0;
        }
        for (auto& [name, sub] : binary) {
            if (!*sub) continue;
            Ordinal b1 = P(a1), b2 = P(a2);
            std::string q = name + " " + a1 + " " + a2;
            Verdict v = name == "le1" ? c.le1(b1, b2) : le2(c, b1, b2);
            std::string text = std::string(tri_name(v.value)) + (v.trace.empty() ? "" : " (trace: " + join(v.trace) + ")");
            Json j = name == "le1" ? relation_json(c, q, v, b1) : nu_json(c, q, v, b1);
            emit(j, text);
            return 0;
        }
        if (*nucmd) {
            Ordinal alpha = P(a1), xi = P(a2);
            NuInfo ni = nu_info(c, alpha, xi);
            Json j{{"query", "nu " + a1 + " " + a2}, {"verdict", format(ni.nu)}, {"trace", Trace{"lgsJ.11", "lgsJ.2"}},
                   {"values", values_for(c, alpha)}, {"nu", to_json(ni.nu)}, {"max2", to_json(ni.max2)},
                   {"j_lower", to_json(ni.nu)}, {"j_upper", to_json(ni.j_upper)}};
            emit(j, format(ni.nu));
            return 0;
        }
        if (*interval) {
            Ordinal a = P(a1);
            if (!xi_text.empty()) {
                JInterval ji = j_interval(c, a, P(xi_text));
                emit({{"query", "interval " + a1 + " --xi " + xi_text}, {"lower", format(ji.lower)},
                      {"upper", to_json(ji.upper)}, {"closed_upper", to_json(ji.closed_upper)}},
                     "[" + format(ji.lower) + ", " + format(ji.upper) + ")");
            } else {
                ComponentInfo ci = c.component(a);
                std::string hi = ci.max1.known() ? format(ci.max1.value)
                                                 : (c.big_epsilon(a) ? "Undetermined >= " + format(c.max1_lower_bound(a))
                                                                     : "Undetermined");
                emit({{"query", "interval " + a1}, {"kappa", to_json(ci.kappa)}, {"max1", to_json(ci.max1)}},
                     "[" + format(ci.kappa) + ", " + hi + "]");
            }
            return 0;
        }
        if (*incomp) {
            std::vector<Ordinal> s = parse_set(set_args, o.eps_depth);
            if (mode == "build" || mode == "extend") {
                IndexedSet r = mode == "build" ? build_from_index_set(c, s) : extend_incompressible(c, s);
                Json idx = Json::array();
                for (const auto& i : r.indices) idx.push_back(format(i));
                std::string text;
                for (const auto& m : r.base.members()) text += (text.empty() ? "" : ", ") + format(m);
                emit({{"set", to_json(r.base)}, {"indices", idx}}, "{" + text + "}");
                return 0;
            }
            ClosedSet x(s, c.rho());
            if (mode == "cover") {
                CoveringMap h = incompressible_cover(c, x);
                std::string text;
                for (size_t i = 0; i < h.image.size(); ++i)
                    text += (i ? "\n" : "") + format(x[i]) + " -> " + format(h.image[i]);
                emit(to_json(h), text.empty() ? "(empty)" : text);
                return 0;
            }
            VerifyResult r = verify_incompressible(c, x, budget);
            std::string text = verify_name(r.kind);
            if (r.witness)
                for (size_t i = 0; i < r.witness->image.size(); ++i)
                    text += "\n  " + format(x[i]) + " -> " + format(r.witness->image[i]);
            if (!r.note.empty()) text += " (" + r.note + ")";
            emit(verify_json(r, x, budget), text);
            return 0;
        }
        if (*search) {
            ClosedSet y(parse_set(set_args, o.eps_depth), c.rho());
            SearchResult s = covering_search(c, y, P(bound_text), budget);
            Json arr = Json::array();
            std::string text;
            for (const auto& h : s.coverings) {
                arr.push_back(to_json(h));
                std::string line;
                for (size_t i = 0; i < h.image.size(); ++i) line += (i ? ", " : "") + format(y[i]) + " -> " + format(h.image[i]);
                text += line + "\n";
            }
            Json und = Json::array();
            for (const auto& u : s.undetermined) {
                Json a = Json::array();
                for (const auto& m : u) a.push_back(format(m));
                und.push_back(a);
            }
            text += std::to_string(s.coverings.size()) + " coverings";
            if (!s.undetermined.empty()) text += ", " + std::to_string(s.undetermined.size()) + " inconclusive candidates";
            if (s.truncated) text += " (truncated)";
            emit({{"coverings", arr}, {"inconclusive", und}, {"truncated", s.truncated}}, text);
            return 0;
        }
        if (*verify) {
            std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
            Json arr = Json::array();
            std::string text;
            size_t failures = 0;
            for (const auto& n : names) {
                SuiteReport r = run_suite(n, cfg, o.seed, budget);
                failures += r.failures.size();
                arr.push_back({{"suite", n}, {"checks", r.checks}, {"failures", r.failures}, {"notes", r.notes}});
                text += n + ": " + std::to_string(r.checks) + " checks, " + std::to_string(r.failures.size()) + " failures\n";
                for (const auto& f : r.failures) text += "  FAIL " + f + "\n";
                for (const auto& nt : r.notes) text += "  note: " + nt + "\n";
            }
            text += "total failures: " + std::to_string(failures);
            emit({{"seed", o.seed}, {"suites", arr}, {"failures", failures}}, text);
            return failures == 0 ? 0 : 1;
        }
        if (*exp) {
            ClosedSet x(parse_set(set_args, o.eps_depth), c.rho());
            FinitePattern p = extract_pattern(c, x);
            if (json) std::cout << to_json(p).dump(2) << "\n";
            else std::cout << to_dot(p);
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}
