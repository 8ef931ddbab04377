// Acceptance gate: one pass/fail line per criterion, exit code = number of
// failed criteria. Figure deltas are reported as structured notes, never as
// failures, as long as the oracle agrees.

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "fixtures.hpp"
#include "relquiv/extension.hpp"
#include "relquiv/oracle.hpp"
#include "relquiv/selftest.hpp"

using namespace relquiv;
using ordered_json = nlohmann::ordered_json;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& what) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", n, what.c_str());
    if (!ok) ++failures;
}

void note(const std::string& what) { std::printf("  %s\n", what.c_str()); }

void run(int n, const std::string& what, const std::function<bool(std::string&)>& body) {
    std::string extra;
    bool ok = false;
    try {
        ok = body(extra);
    } catch (const std::exception& e) {
        extra = std::string("exception: ") + e.what();
    }
    report(n, ok, what + (extra.empty() ? "" : " (" + extra + ")"));
}

std::vector<std::vector<std::string>> level_points(const StringPresentation& P,
                                                   const Resolution& R) {
    std::vector<std::vector<std::string>> out;
    for (const auto& lvl : R.levels) {
        std::vector<std::string> names;
        for (const ResNode& n : lvl) names.push_back(P.vertex_names[n.point]);
        out.push_back(names);
    }
    return out;
}

ArrowMultiset comb_multiset(const std::vector<NewArrow>& as) {
    ArrowMultiset m;
    for (const NewArrow& a : as) m[{a.z, a.c, a.degree}]++;
    return m;
}

std::set<std::pair<std::string, std::string>> pair_set(const StringPresentation& P,
                                                       const std::vector<NewArrow>& as) {
    std::set<std::pair<std::string, std::string>> s;
    for (const NewArrow& a : as) s.insert({P.vertex_names[a.z], P.vertex_names[a.c]});
    return s;
}

struct FigureArrow {
    std::string z, c;
    std::optional<int> degree;
};

std::vector<FigureArrow> load_figure(const std::string& name) {
    std::ifstream f(fixture_path("expected/" + name + ".figure.json"));
    if (!f) throw ParseError("missing figure file for " + name);
    ordered_json j = ordered_json::parse(f);
    std::vector<FigureArrow> out;
    for (const auto& e : j.at("arrows")) {
        FigureArrow a;
        a.z = e.at("z").get<std::string>();
        a.c = e.at("c").get<std::string>();
        if (e.contains("degree")) a.degree = e.at("degree").get<int>();
        out.push_back(std::move(a));
    }
    return out;
}

// Compares the computed arrows against a published figure: every figure
// entry must be present; surplus arrows are collected for the delta note.
bool figure_check(const StringPresentation& P, const std::vector<NewArrow>& computed,
                  const std::string& name, std::string& delta_line) {
    std::vector<FigureArrow> fig = load_figure(name);
    ArrowMultiset m = comb_multiset(computed);

    ordered_json missing = ordered_json::array();
    std::set<std::pair<std::string, std::string>> fig_pairs;
    for (const FigureArrow& a : fig) {
        fig_pairs.insert({a.z, a.c});
        bool found = false;
        for (const auto& [key, cnt] : m) {
            if (P.vertex_names[std::get<0>(key)] != a.z ||
                P.vertex_names[std::get<1>(key)] != a.c)
                continue;
            if (a.degree && *a.degree != std::get<2>(key)) continue;
            if (cnt > 0) found = true;
        }
        if (!found) {
            ordered_json e{{"z", a.z}, {"c", a.c}};
            if (a.degree) e["degree"] = *a.degree;
            missing.push_back(std::move(e));
        }
    }

    ordered_json extra = ordered_json::array();
    for (const NewArrow& a : computed) {
        if (fig_pairs.count({P.vertex_names[a.z], P.vertex_names[a.c]})) continue;
        extra.push_back(ordered_json{{"z", P.vertex_names[a.z]},
                                     {"c", P.vertex_names[a.c]},
                                     {"degree", a.degree}});
    }

    if (!missing.empty() || !extra.empty()) {
        ordered_json rep{{"fixture", name}, {"missing", missing}, {"extra", extra}};
        delta_line = "figure-delta " + rep.dump();
    }
    return missing.empty();
}

}  // namespace

int main() {
    run(1, "fix-c [3,9] resolves and coresolves to the expected terms, oracle-verified",
        [](std::string&) {
            StringPresentation P = load_fixture("fix-c");
            ExtEngine E(P);
            Oracle O(E);
            Interval iv = make_interval(P, P.vertex_index("3"), P.vertex_index("9"));
            Resolution R = resolve_interval(P, iv);
            bool terms = level_points(P, R) ==
                         std::vector<std::vector<std::string>>{
                             {"3"}, {"10", "4"}, {"16", "11", "6"}, {"12"}, {"13"}};
            Interval ivop = make_interval(E.op(), P.vertex_index("9"), P.vertex_index("3"));
            Resolution C = resolve_interval(E.op(), ivop);
            bool cterms = level_points(E.op(), C) ==
                          std::vector<std::vector<std::string>>{{"9"}, {"1"}};
            bool verified = O.verify_interval_resolution(iv).ok() &&
                            O.verify_op_interval_resolution(ivop).ok();
            return terms && cterms && verified;
        });

    run(2, "fix-f I(1) resolves through P(2) to P(3)+P(4) with a degree-2 difference class",
        [](std::string&) {
            StringPresentation P = load_fixture("fix-f");
            ExtEngine E(P);
            Oracle O(E);
            Resolution R = resolve_injective(P, P.vertex_index("1"));
            bool terms = level_points(P, R) ==
                         std::vector<std::vector<std::string>>{{"1"}, {"2"}, {"3", "4"}};
            int c = P.vertex_index("1"), z = P.vertex_index("2");
            bool dim = O.ext_dim(c, z, 2) == 1;
            std::vector<ExtWitness> ws = ext_witnesses(E, c, z, 2);
            bool wit = ws.size() == 1 && ws[0].kind == WitnessKind::DifferenceClass;
            return terms && dim && wit;
        });

    run(3, "fix-a tops: z=4 survives on the left, c=2 dies on the right, arrows = {4->1}",
        [](std::string&) {
            StringPresentation P = load_fixture("fix-a");
            ExtEngine E(P);
            int c2 = P.vertex_index("2"), z4 = P.vertex_index("4");
            bool left = false;
            for (const TopClass& t : left_top_basis(E, c2, 2))
                if (t.vertex == z4) left = true;
            bool right_absent = true;
            for (const TopClass& t : right_top_basis(E, z4, 2))
                if (t.vertex == c2) right_absent = false;
            ArrowMultiset want{{{z4, P.vertex_index("1"), 2}, 1}};
            bool arrows = comb_multiset(new_arrows(E)) == want;
            return left && right_absent && arrows;
        });

    run(4, "fix-b arrows = {4->1, 4->5, 5->1} and the oracle multiset agrees",
        [](std::string&) {
            StringPresentation P = load_fixture("fix-b");
            ExtEngine E(P);
            Oracle O(E);
            std::vector<NewArrow> as = new_arrows(E);
            bool pairs = pair_set(P, as) == std::set<std::pair<std::string, std::string>>{
                                                {"4", "1"}, {"4", "5"}, {"5", "1"}};
            bool oracle = comb_multiset(as) == O.new_arrow_multiset(false);
            return pairs && oracle;
        });

    run(5, "fix-e chain arrows {3->1, 6->4}: tensor gentle, trivial monomial with the long word",
        [](std::string&) {
            StringPresentation P = load_fixture("fix-e");
            ExtEngine E(P);
            bool fast_full = comb_multiset(gentle_new_arrows(P)) == comb_multiset(new_arrows(E));
            bool pairs = pair_set(P, new_arrows(E)) ==
                         std::set<std::pair<std::string, std::string>>{{"3", "1"}, {"6", "4"}};
            ExtendedPresentation tens = build_extension(P, ExtensionMode::Tensor);
            ExtendedPresentation triv = build_extension(P, ExtensionMode::Trivial);
            bool long_word = false;
            for (const ExtWord& w : triv.relations)
                if (w.size() == 3 && w.front().is_new && !w[1].is_new && w.back().is_new)
                    long_word = true;
            bool g2_fails = !validate(to_presentation(triv)).g2;
            return fast_full && pairs && tens.gentle && triv.monomial && long_word && g2_fails;
        });

    run(6, "fix-d arrows cover the figure and equal the oracle multiset",
        [](std::string& extra) {
            StringPresentation P = load_fixture("fix-d");
            ExtEngine E(P);
            Oracle O(E);
            std::vector<NewArrow> as = new_arrows(E);
            bool oracle = comb_multiset(as) == O.new_arrow_multiset(false);
            std::string delta;
            bool covered = figure_check(P, as, "fix-d", delta);
            if (!delta.empty()) note(delta);
            return covered && oracle;
        });

    run(7, "fix-c arrows cover the figure and equal the oracle multiset",
        [](std::string& extra) {
            StringPresentation P = load_fixture("fix-c");
            ExtEngine E(P);
            Oracle O(E);
            std::vector<NewArrow> as = new_arrows(E);
            bool oracle = comb_multiset(as) == O.new_arrow_multiset(false);
            std::string delta;
            bool covered = figure_check(P, as, "fix-c", delta);
            if (!delta.empty()) note(delta);
            return covered && oracle;
        });

    run(8, "200 random string trees: witnesses match dimensions, multisets match the oracle",
        [](std::string& extra) {
            SelftestOptions opt;
            opt.string_count = 200;
            opt.gentle_count = 0;
            opt.max_vertices = 12;
            auto t0 = std::chrono::steady_clock::now();
            SelftestReport rep = run_selftest(opt);
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                              .count();
            std::ostringstream os;
            os << rep.instances << " instances, " << rep.checks << " checks, " << secs << " s";
            extra = os.str();
            for (const SelftestFailure& f : rep.failures)
                note("selftest failure seed=" + std::to_string(f.seed) + ": " + f.what);
            return rep.ok() && rep.instances == 200 && secs < 300.0;
        });

    run(9, "100 random gentle trees: fast path, full path, oracle and theorem checks agree",
        [](std::string& extra) {
            SelftestOptions opt;
            opt.string_count = 0;
            opt.gentle_count = 100;
            opt.max_vertices = 12;
            SelftestReport rep = run_selftest(opt);
            std::ostringstream os;
            os << rep.instances << " instances, " << rep.checks << " checks";
            extra = os.str();
            for (const SelftestFailure& f : rep.failures)
                note("selftest failure seed=" + std::to_string(f.seed) + ": " + f.what);
            return rep.ok() && rep.instances == 100;
        });

    run(10, "structural invariants hold on the whole fixture corpus",
        [](std::string& extra) {
            long long checks = 0;
            bool ok = true;
            for (const char* name : {"fix-a", "fix-b", "fix-c", "fix-d", "fix-e", "fix-f"}) {
                StringPresentation P = load_fixture(name);
                InstanceResult r = check_instance(P, validate(P).is_gentle());
                checks += r.checks;
                for (const std::string& f : r.failures) {
                    note(std::string(name) + ": " + f);
                    ok = false;
                }
            }
            extra = std::to_string(checks) + " checks";
            return ok;
        });

    std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures;
}
