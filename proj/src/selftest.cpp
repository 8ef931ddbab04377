#include "relquiv/selftest.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace relquiv {

namespace {

ArrowMultiset to_multiset(const std::vector<NewArrow>& v) {
    ArrowMultiset m;
    for (const NewArrow& a : v) m[{a.z, a.c, a.degree}]++;
    return m;
}

void check_resolution_shape(const StringPresentation& P, const Resolution& R,
                            const std::string& tag, InstanceResult& r) {
    auto bad = [&](const std::string& m) { r.failures.push_back(tag + ": " + m); };
    r.checks++;
    if (R.levels.size() > 1 && R.levels[1].size() > 3) bad("more than 3 summands at level 1");
    if (R.levels.size() > 2 && R.levels[2].size() > 6) bad("more than 6 summands at level 2");
    for (size_t lvl = 2; lvl < R.levels.size(); ++lvl) {
        for (const ResNode& n : R.levels[lvl]) {
            if (!n.interval) {
                bad("non-uniserial summand at level " + std::to_string(lvl));
                continue;
            }
            bool hit = false;
            for (const auto& rel : P.relations)
                if (P.arrows[rel.back()].tgt == n.point) hit = true;
            if (!hit)
                bad("level-" + std::to_string(lvl) + " point " + P.vertex_names[n.point] +
                    " is not a relation endpoint");
        }
    }
}

}  // namespace

InstanceResult check_instance(const StringPresentation& P, bool expect_gentle) {
    InstanceResult r;
    auto bad = [&](const std::string& m) { r.failures.push_back(m); };
    try {
        ValidationReport rep = validate(P);
        r.checks++;
        if (!rep.string_tree()) {
            bad("generated presentation is not a string tree");
            return r;
        }
        if (expect_gentle && !rep.is_gentle()) bad("generated presentation is not gentle");

        std::string s1 = serialize_bqv(P);
        r.checks++;
        if (serialize_bqv(parse_bqv(s1)) != s1) bad("bqv round trip not stable");

        ExtEngine E(P);
        Oracle O(E);
        const int g = E.gldim();
        const int n = P.n_vertices();

        for (int v = 0; v < n; ++v) {
            r.checks += 2;
            if (!O.verify_injective_resolution(v).ok())
                bad("injective resolution fails at " + P.vertex_names[v]);
            if (!O.verify_op_injective_resolution(v).ok())
                bad("opposite resolution fails at " + P.vertex_names[v]);
            check_resolution_shape(P, E.injective_resolution(v), "I(" + P.vertex_names[v] + ")",
                                   r);
            check_resolution_shape(E.op(), E.op_injective_resolution(v),
                                   "cores P(" + P.vertex_names[v] + ")", r);
        }

        for (int i = 2; i <= g; ++i) {
            for (int c = 0; c < n; ++c) {
                std::set<int> nonzero;
                for (int z = 0; z < n; ++z) {
                    r.checks += 2;
                    int d = O.ext_dim(c, z, i);
                    int w = static_cast<int>(ext_witnesses(E, c, z, i).size());
                    int wop = static_cast<int>(op_ext_witnesses(E, c, z, i).size());
                    if (w != d)
                        bad("witness count c=" + P.vertex_names[c] + " z=" + P.vertex_names[z] +
                            " i=" + std::to_string(i) + ": " + std::to_string(w) + " vs dim " +
                            std::to_string(d));
                    if (wop != d)
                        bad("op witness count c=" + P.vertex_names[c] +
                            " z=" + P.vertex_names[z] + " i=" + std::to_string(i));
                    if (d > 0) nonzero.insert(z);
                }
                ExtSupport sup = ext_support(E, c, i);
                r.checks++;
                if (std::set<int>(sup.all.begin(), sup.all.end()) != nonzero)
                    bad("support set c=" + P.vertex_names[c] + " i=" + std::to_string(i));
            }
            for (int z = 0; z < n; ++z) {
                std::set<int> nonzero;
                for (int c = 0; c < n; ++c)
                    if (O.ext_dim(c, z, i) > 0) nonzero.insert(c);
                ExtSupport cos = ext_cosupport(E, z, i);
                r.checks++;
                if (std::set<int>(cos.all.begin(), cos.all.end()) != nonzero)
                    bad("cosupport set z=" + P.vertex_names[z] + " i=" + std::to_string(i));
            }
            std::vector<std::vector<int>> lt = O.left_top_dims(i);
            for (int c = 0; c < n; ++c) {
                std::vector<int> counts(n, 0);
                for (const TopClass& t : left_top_basis(E, c, i)) counts[t.vertex]++;
                for (int z = 0; z < n; ++z) {
                    r.checks++;
                    if (counts[z] != lt[z][c])
                        bad("left top c=" + P.vertex_names[c] + " z=" + P.vertex_names[z] +
                            " i=" + std::to_string(i) + ": " + std::to_string(counts[z]) +
                            " vs " + std::to_string(lt[z][c]));
                }
            }
        }

        ArrowMultiset comb = to_multiset(new_arrows(E, true));
        r.checks += 3;
        if (comb != to_multiset(new_arrows(E, false)))
            bad("restricted and unrestricted new_arrows differ");
        ArrowMultiset orac = O.new_arrow_multiset(false);
        if (comb != orac) bad("new_arrows disagrees with the oracle multiset");
        Oracle O2(E, true);
        if (O2.new_arrow_multiset(false) != orac) bad("oracle multiset depends on lift order");

        if (rep.is_gentle()) {
            TheoremReport tr = verify_theorem_7_1(E);
            r.checks += 4;
            if (!tr.tensor_gentle) bad("tensor extension is not gentle");
            if (!tr.trivial_monomial) bad("trivial extension is not monomial");
            if (!tr.arrows_match) bad("gentle fast path disagrees with new_arrows");
            for (const ExtWord& w : tensor_relations(P))
                if (w.size() != 2) bad("tensor relation of length != 2");
        }
        ExtendedPresentation X =
            build_extension(E, rep.is_gentle() ? ExtensionMode::Trivial : ExtensionMode::Tensor);
        std::string js = extension_to_json(X);
        r.checks++;
        if (extension_to_json(extension_from_json(js)) != js)
            bad("extension JSON round trip not stable");
    } catch (const std::exception& e) {
        bad(std::string("exception: ") + e.what());
    }
    return r;
}

SelftestReport run_selftest(const SelftestOptions& opt) {
    SelftestReport rep;
    int total = opt.string_count + opt.gentle_count;

    auto run_one = [&](int idx) {
        std::uint64_t seed = opt.seed * 1000003ull + static_cast<std::uint64_t>(idx);
        Rng rng(seed);
        GeneratorOptions g;
        g.gentle = idx >= opt.string_count;
        g.n_vertices = 1 + rng.below(opt.max_vertices);
        g.density = opt.density > 0 ? opt.density : 0.25 + 0.5 * rng.unit();
        StringPresentation P = random_string_tree(rng, g);
        InstanceResult res = check_instance(P, g.gentle);
        std::vector<SelftestFailure> fails;
        for (std::string& f : res.failures)
            fails.push_back({seed, g.gentle, std::move(f), serialize_bqv(P)});
        return std::make_pair(res.checks, std::move(fails));
    };

#ifdef _OPENMP
    if (opt.parallel) {
        int nt = opt.threads > 0 ? opt.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt)
        for (int idx = 0; idx < total; ++idx) {
            auto [checks, fails] = run_one(idx);
#pragma omp critical
            {
                rep.instances++;
                rep.checks += checks;
                for (auto& f : fails) rep.failures.push_back(std::move(f));
            }
        }
    } else
#endif
    {
        for (int idx = 0; idx < total; ++idx) {
            auto [checks, fails] = run_one(idx);
            rep.instances++;
            rep.checks += checks;
            for (auto& f : fails) rep.failures.push_back(std::move(f));
        }
    }

    std::sort(rep.failures.begin(), rep.failures.end(),
              [](const SelftestFailure& a, const SelftestFailure& b) {
                  return std::tie(a.seed, a.what) < std::tie(b.seed, b.what);
              });
    return rep;
}

std::string selftest_summary(const SelftestReport& rep) {
    std::ostringstream os;
    os << "instances: " << rep.instances << "\nchecks: " << rep.checks
       << "\nfailures: " << rep.failures.size() << "\n";
    for (const SelftestFailure& f : rep.failures) {
        os << "--- seed " << f.seed << (f.gentle ? " (gentle)" : " (string)") << ": " << f.what
           << "\n";
        os << f.bqv;
    }
    return os.str();
}

}  // namespace relquiv
