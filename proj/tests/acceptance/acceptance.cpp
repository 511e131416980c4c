// Exhaustive acceptance sweeps. Prints one PASS/FAIL line per criterion and
// exits non-zero when any criterion fails. Pass criterion numbers as
// arguments to run a subset.

#include "domlab/domination.hpp"
#include "domlab/error.hpp"
#include "domlab/extremal.hpp"
#include "domlab/families.hpp"
#include "domlab/hereditary.hpp"
#include "domlab/patterns.hpp"
#include "domlab/sat_reduction.hpp"

#include "enumerate.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace domlab;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::string first_failure;

    void fail(const std::string& what) {
        if (pass)
            first_failure = what;
        pass = false;
    }
};

std::string describe(const Graph& g) {
    std::ostringstream s;
    s << "order " << g.order() << " edges";
    for (auto [u, v] : g.edges())
        s << ' ' << u << '-' << v;
    return s.str();
}

// 1. gamma_r <= gamma_r2 <= 2 gamma_r on every labeled graph of order <= 6.
Outcome sandwich() {
    Outcome o;
    long graphs = 0;
    long extremal = 0;
    for (int n = 0; n <= 6; ++n)
        oracle::for_each_labeled_graph(n, [&](const Graph& g) {
            ++graphs;
            const int r = weak_roman_value(g);
            const int r2 = rainbow_value(g);
            if (r > r2 || r2 > 2 * r)
                o.fail(describe(g) + ": gamma_r=" + std::to_string(r) + " gamma_r2=" + std::to_string(r2));
            extremal += r2 == 2 * r;
        });
    o.detail = std::to_string(graphs) + " graphs, " + std::to_string(extremal) + " with equality";
    return o;
}

// 2. Every minimum weak Roman assignment of every extremal graph of order
// <= 7 avoids value 2 and yields a verified decomposition.
Outcome decompositions() {
    Outcome o;
    long graphs = 0;
    long assignments = 0;
    for (int n = 1; n <= 7; ++n)
        oracle::for_each_labeled_graph(n, [&](const Graph& g) {
            const ExtremalReport rep = is_extremal(g);
            if (!rep.extremal)
                return;
            ++graphs;
            for_each_minimum_weak_roman(g, [&](const WeakRomanAssignment& gfun) {
                ++assignments;
                if (gfun.twos() != 0) {
                    o.fail(describe(g) + ": minimum assignment uses value 2");
                    return;
                }
                try {
                    const ExtremalDecomposition d = extract_decomposition(g, gfun, rep);
                    const DecompositionVerdict v = verify_decomposition(g, d);
                    if (!v.valid)
                        o.fail(describe(g) + ": clause " + std::string(clause_name(v.failures.front().clause)));
                } catch (const std::exception& e) {
                    o.fail(describe(g) + ": " + e.what());
                }
            });
        });
    o.detail = std::to_string(graphs) + " extremal graphs, " + std::to_string(assignments) +
               " minimum assignments";
    return o;
}

// Confirms the extension generator against a brute-force filter at small
// orders so that the order-8 sweeps below are known to be complete.
bool generator_complete(const std::function<bool(const Graph&, Mask)>& admit,
                        const std::function<bool(const Graph&)>& member, int max_order) {
    std::vector<long> by_extension(static_cast<std::size_t>(max_order + 1), 0);
    enumerate::for_each_graph(max_order, admit, [&](const Graph& g) {
        if (!member(g))
            by_extension[0] = -1'000'000;
        ++by_extension[static_cast<std::size_t>(g.order())];
    });
    for (int n = 1; n <= max_order; ++n) {
        long brute = 0;
        oracle::for_each_labeled_graph(n, [&](const Graph& g) { brute += member(g); });
        if (brute != by_extension[static_cast<std::size_t>(n)])
            return false;
    }
    return by_extension[0] == 1;
}

// 3. Structural recognition agrees with the solvers on connected
// {K4, K4-e}-free graphs of order <= 8.
Outcome connected_catalog() {
    Outcome o;
    auto member = [](const Graph& g) {
        return oracle::contains_induced_naive(g, oracle::matrix_of(complete_graph(4))) == false &&
               !oracle::contains_induced_naive(g, oracle::matrix_of(pattern_graph(Pattern::Diamond)));
    };
    if (!generator_complete(enumerate::keeps_k4_diamond_free, member, 6))
        o.fail("extension generator disagrees with brute-force filtering");
    long graphs = 0;
    long extremal = 0;
    enumerate::for_each_graph(8, enumerate::keeps_k4_diamond_free, [&](const Graph& g) {
        if (g.order() == 0 || !is_connected(g))
            return;
        ++graphs;
        const bool semantic = is_extremal(g).extremal;
        const ExtremalClassification c = recognize_c2(g);
        const bool structural = c.form != ExtremalForm::NotOfCharacterizedForm;
        extremal += semantic;
        if (semantic != structural)
            o.fail(describe(g) + ": solver says " + (semantic ? "extremal" : "not extremal") +
                   ", recognizer says " + std::string(form_name(c.form)));
        else if (structural && relabel(g, canonical_labeling(c)) != rebuild(c))
            o.fail(describe(g) + ": classification does not rebuild the graph");
    });
    o.detail = std::to_string(graphs) + " graphs, " + std::to_string(extremal) + " extremal";
    return o;
}

// 4. Disjoint-K2 recognition agrees with the solvers on triangle-free
// graphs of order <= 8.
Outcome triangle_free() {
    Outcome o;
    auto member = [](const Graph& g) { return !oracle::contains_induced_naive(g, oracle::matrix_of(complete_graph(3))); };
    if (!generator_complete(enumerate::keeps_triangle_free, member, 6))
        o.fail("extension generator disagrees with brute-force filtering");
    long graphs = 0;
    long extremal = 0;
    enumerate::for_each_graph(8, enumerate::keeps_triangle_free, [&](const Graph& g) {
        ++graphs;
        const bool semantic = is_extremal(g).extremal;
        extremal += semantic;
        if (semantic != recognize_c1(g))
            o.fail(describe(g) + ": solver and recognizer disagree");
    });
    o.detail = std::to_string(graphs) + " graphs, " + std::to_string(extremal) + " extremal";
    return o;
}

// Independent satisfiability check.
bool satisfiable(const CnfFormula& f) {
    for (unsigned bits = 0; bits < (1U << f.num_vars); ++bits) {
        bool all = true;
        for (const Clause& c : f.clauses) {
            bool any = false;
            for (const Literal& l : c)
                any = any || ((((bits >> (l.var - 1)) & 1U) != 0) != l.negated);
            all = all && any;
        }
        if (all)
            return true;
    }
    return false;
}

// Multisets of size k drawn from [0, pool).
void for_each_multiset(int pool, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(pick.size()) == k) {
            fn(pick);
            return;
        }
        for (int x = from; x < pool; ++x) {
            pick.push_back(x);
            rec(x);
            pick.pop_back();
        }
    };
    rec(0);
}

// 5. The reduction graph has gamma_r2 = 2n+2, gamma_r >= n+1, and
// gamma_r = n+1 exactly for satisfiable formulas.
Outcome reduction() {
    Outcome o;
    long instances = 0;
    long sat = 0;
    auto check = [&](const CnfFormula& f) {
        ++instances;
        const Theorem2Report rep = verify_theorem2(f);
        const bool truth = satisfiable(f);
        sat += truth;
        const int n = f.num_vars;
        std::ostringstream who;
        who << "n=" << n << " m=" << f.num_clauses();
        if (!rep.k5_free)
            o.fail(who.str() + ": reduction graph contains K5");
        if (rep.order != 4 * n + f.num_clauses() + 2)
            o.fail(who.str() + ": wrong order");
        if (rep.gamma_r2 != 2 * n + 2)
            o.fail(who.str() + ": gamma_r2=" + std::to_string(rep.gamma_r2));
        if (rep.gamma_r < n + 1)
            o.fail(who.str() + ": gamma_r=" + std::to_string(rep.gamma_r));
        if ((rep.gamma_r == n + 1) != truth)
            o.fail(who.str() + ": gamma_r=" + std::to_string(rep.gamma_r) + " but satisfiable=" +
                   (truth ? "true" : "false"));
        if (rep.satisfiable != truth || !rep.all_pass())
            o.fail(who.str() + ": report disagrees with independent checks");
    };

    // Clauses as literal multisets: literal index 2(v-1) + negated.
    for (int n = 1; n <= 2; ++n) {
        std::vector<Clause> clauses;
        for_each_multiset(2 * n, 3, [&](const std::vector<int>& lits) {
            Clause c;
            for (int i = 0; i < 3; ++i)
                c[static_cast<std::size_t>(i)] = {1 + lits[static_cast<std::size_t>(i)] / 2,
                                                  lits[static_cast<std::size_t>(i)] % 2 == 1};
            clauses.push_back(c);
        });
        for (int m = 2; m <= 3; ++m)
            for_each_multiset(static_cast<int>(clauses.size()), m, [&](const std::vector<int>& pick) {
                CnfFormula f{n, {}};
                for (int j : pick)
                    f.clauses.push_back(clauses[static_cast<std::size_t>(j)]);
                check(f);
            });
    }
    const long exhaustive = instances;

    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 120; ++trial) {
        CnfFormula f{3, {}};
        const int m = 2 + trial % 4;
        for (int j = 0; j < m; ++j) {
            Clause c;
            for (auto& l : c)
                l = {1 + static_cast<int>(rng() % 3), (rng() & 1U) != 0};
            f.clauses.push_back(c);
        }
        check(f);
    }
    o.detail = std::to_string(exhaustive) + " exhaustive + " + std::to_string(instances - exhaustive) +
               " random formulas, " + std::to_string(sat) + " satisfiable";
    return o;
}

// 6. Membership in G_3 equals {co-K3, C5}-freeness on every labeled graph
// of order <= 7. The order <= 6 part runs first.
Outcome third_class() {
    Outcome o;
    ParameterMemo memo;
    HereditaryOptions opts;
    opts.memo = &memo;
    long graphs = 0;
    long members = 0;
    for (int n = 0; n <= 7; ++n)
        oracle::for_each_labeled_graph(n, [&](const Graph& g) {
            ++graphs;
            const bool member = in_gk(g, 3, opts).member;
            members += member;
            if (member != is_free(g, kG3Forbidden).free)
                o.fail(describe(g) + ": membership " + (member ? "true" : "false") + " disagrees with freeness");
        });
    o.detail = std::to_string(graphs) + " graphs, " + std::to_string(members) + " members, " +
               std::to_string(memo.size()) + " memo entries";
    return o;
}

// 7. Point values.
Outcome point_values() {
    Outcome o;
    auto expect = [&](const std::string& what, int got, int want) {
        if (got != want)
            o.fail(what + " = " + std::to_string(got) + ", expected " + std::to_string(want));
    };
    const Graph c5 = cycle_graph(5);
    expect("gamma_r2(C5)", rainbow_number(c5).value, 3);
    expect("gamma_r(C5)", weak_roman_number(c5).value, 3);
    const Graph e3 = empty_graph(3);
    expect("gamma_r2(co-K3)", rainbow_number(e3).value, 3);
    expect("gamma_r(co-K3)", weak_roman_number(e3).value, 3);
    const Graph k1(1);
    expect("gamma_r2(K1)", rainbow_number(k1).value, 1);
    expect("gamma_r(K1)", weak_roman_number(k1).value, 1);
    const Graph e2 = empty_graph(2);
    expect("gamma_r2(co-K2)", rainbow_number(e2).value, 2);
    expect("gamma_r(co-K2)", weak_roman_number(e2).value, 2);
    expect("gamma_r2(two triangles + 3-matching)", rainbow_number(generate_two_triangles_matching(3)).value, 3);
    const ExtremalReport two = is_extremal(generate_two_triangles_matching(2));
    if (!two.extremal)
        o.fail("two triangles + 2-matching is not extremal");
    o.detail = "10 values";
    return o;
}

// 8. gamma_r2(G) = gamma(G x K2) on every labeled graph of order <= 6.
Outcome prism_identity() {
    Outcome o;
    long graphs = 0;
    for (int n = 0; n <= 6; ++n)
        oracle::for_each_labeled_graph(n, [&](const Graph& g) {
            ++graphs;
            const int r2 = rainbow_number(g).value;
            const int d = domination_number(prism(g)).value;
            if (r2 != d)
                o.fail(describe(g) + ": gamma_r2=" + std::to_string(r2) + " gamma(prism)=" + std::to_string(d));
        });
    o.detail = std::to_string(graphs) + " graphs";
    return o;
}

struct Criterion {
    int id;
    const char* title;
    Outcome (*run)();
};

} // namespace

int main(int argc, char** argv) {
    const Criterion criteria[] = {
        {1, "gamma_r <= gamma_r2 <= 2 gamma_r on all labeled graphs of order <= 6", sandwich},
        {2, "equality graphs of order <= 7: no value 2, decomposition verifies", decompositions},
        {3, "connected {K4, K4-e}-free order <= 8: recognizer agrees with solver", connected_catalog},
        {4, "triangle-free order <= 8: disjoint-K2 test agrees with solver", triangle_free},
        {5, "3-CNF reduction: gamma_r2 = 2n+2, gamma_r >= n+1, gamma_r = n+1 iff satisfiable", reduction},
        {6, "order <= 7: G_3 membership equals {co-K3, C5}-freeness", third_class},
        {7, "point values", point_values},
        {8, "order <= 6: gamma_r2(G) = gamma(G x K2)", prism_identity},
    };
    std::set<int> wanted;
    for (int i = 1; i < argc; ++i)
        wanted.insert(std::atoi(argv[i]));

    int failures = 0;
    for (const Criterion& c : criteria) {
        if (!wanted.empty() && !wanted.count(c.id))
            continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %d: %s | %s | %s | %.1fs\n", c.id, o.pass ? "PASS" : "FAIL", c.title,
                    o.detail.c_str(), secs);
        if (!o.pass) {
            std::printf("  first failure: %s\n", o.first_failure.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
