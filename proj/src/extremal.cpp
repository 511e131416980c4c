#include "domlab/extremal.hpp"

#include "domlab/error.hpp"
#include "domlab/families.hpp"
#include "domlab/patterns.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace domlab {

namespace {

constexpr int kRoleCount = 3;

int role_offset(TriangleRole r) { return static_cast<int>(r); }

// Vertices whose whole neighbourhood sits inside `triangle`; in a triangle
// system these are exactly the w_i and u_i.
Mask private_members(const Graph& g, Mask triangle) {
    Mask out = 0;
    for_each_bit(triangle, [&](int v) {
        if ((g.neighbors(v) & ~triangle) == 0)
            out |= bit(v);
    });
    return out;
}

// Smallest-index-first cover of V(G) by triangles each holding at least
// two private vertices, with backtracking over the choice of partners.
bool cover_by_triangles(const Graph& g, Mask uncovered, std::vector<Mask>& chosen) {
    if (uncovered == 0)
        return true;
    const int x = lowest(uncovered);
    const Mask rest = uncovered & ~bit(x);
    Mask ys = g.neighbors(x) & rest;
    while (ys != 0) {
        const int y = lowest(ys);
        ys &= ys - 1;
        Mask zs = g.neighbors(x) & g.neighbors(y) & ys;
        while (zs != 0) {
            const int z = lowest(zs);
            zs &= zs - 1;
            const Mask tri = bit(x) | bit(y) | bit(z);
            if (popcount(private_members(g, tri)) < 2)
                continue;
            chosen.push_back(tri);
            if (cover_by_triangles(g, rest & ~tri, chosen))
                return true;
            chosen.pop_back();
        }
    }
    return false;
}

std::optional<ExtremalClassification> as_triangle_system(const Graph& g) {
    const int n = g.order();
    if (n % 3 != 0)
        return std::nullopt;
    std::vector<Mask> triangles;
    if (!cover_by_triangles(g, g.vertices(), triangles))
        return std::nullopt;

    struct Roles {
        int v, w, u;
    };
    std::vector<Roles> found;
    for (Mask tri : triangles) {
        const Mask priv = private_members(g, tri);
        // With three private vertices (an isolated triangle) the smallest
        // one plays v.
        const int v = popcount(priv) == 3 ? lowest(tri) : lowest(tri & ~priv);
        const Mask others = tri & ~bit(v);
        const int w = lowest(others);
        const int u = lowest(others & ~bit(w));
        found.push_back({v, w, u});
    }
    std::sort(found.begin(), found.end(), [](const Roles& a, const Roles& b) { return a.v < b.v; });

    ExtremalClassification c;
    c.form = ExtremalForm::TriangleSystem;
    c.k = static_cast<int>(found.size());
    c.roles.resize(static_cast<std::size_t>(n));
    std::vector<int> triangle_of_v(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < c.k; ++i) {
        const Roles& r = found[static_cast<std::size_t>(i)];
        c.roles[static_cast<std::size_t>(r.v)] = {TriangleRole::V, i};
        c.roles[static_cast<std::size_t>(r.w)] = {TriangleRole::W, i};
        c.roles[static_cast<std::size_t>(r.u)] = {TriangleRole::U, i};
        triangle_of_v[static_cast<std::size_t>(r.v)] = i;
    }
    for (auto [a, b] : g.edges()) {
        const int ta = triangle_of_v[static_cast<std::size_t>(a)];
        const int tb = triangle_of_v[static_cast<std::size_t>(b)];
        if (ta >= 0 && tb >= 0 && ta != tb)
            c.added_edges.emplace_back(std::min(ta, tb), std::max(ta, tb));
    }
    std::sort(c.added_edges.begin(), c.added_edges.end());
    return c;
}

std::optional<ExtremalClassification> as_two_triangles(const Graph& g) {
    if (g.order() != 6 || g.edge_count() != 8)
        return std::nullopt;
    const Mask all = g.vertices();
    // The triangle holding vertex 0 becomes triangle 0.
    for (int a = 1; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) {
            const Mask first = bit(0) | bit(a) | bit(b);
            const Mask second = all & ~first;
            if (!is_complete_set(g, VertexSet(first)) || !is_complete_set(g, VertexSet(second)))
                continue;
            // Remaining two edges cross; they form a matching iff no vertex
            // has two crossing edges.
            Mask matched = 0;
            bool matching = true;
            for_each_bit(first, [&](int x) {
                const Mask cross = g.neighbors(x) & second;
                if (popcount(cross) > 1)
                    matching = false;
                if (cross != 0)
                    matched |= bit(x);
            });
            if (!matching || popcount(matched) != 2)
                continue;
            const int v0 = lowest(matched);
            const int w0 = lowest(matched & ~bit(v0));
            const int u0 = lowest(first & ~matched);
            const int v1 = lowest(g.neighbors(v0) & second);
            const int w1 = lowest(g.neighbors(w0) & second);
            const int u1 = lowest(second & ~(bit(v1) | bit(w1)));

            ExtremalClassification c;
            c.form = ExtremalForm::TwoTrianglesPlusTwoMatching;
            c.k = 2;
            c.roles.resize(6);
            c.roles[static_cast<std::size_t>(v0)] = {TriangleRole::V, 0};
            c.roles[static_cast<std::size_t>(w0)] = {TriangleRole::W, 0};
            c.roles[static_cast<std::size_t>(u0)] = {TriangleRole::U, 0};
            c.roles[static_cast<std::size_t>(v1)] = {TriangleRole::V, 1};
            c.roles[static_cast<std::size_t>(w1)] = {TriangleRole::W, 1};
            c.roles[static_cast<std::size_t>(u1)] = {TriangleRole::U, 1};
            return c;
        }
    return std::nullopt;
}

} // namespace

ExtremalReport is_extremal(const Graph& g, const SolverOptions& opts) {
    ExtremalReport r;
    r.gamma_r = weak_roman_value(g, opts);
    r.gamma_r2 = rainbow_value(g, opts);
    r.extremal = r.gamma_r2 == 2 * r.gamma_r;
    r.vacuous = g.order() == 0;
    return r;
}

ExtremalDecomposition extract_decomposition(const Graph& g, const WeakRomanAssignment& gfun,
                                            const std::optional<ExtremalReport>& known,
                                            const SolverOptions& opts) {
    if (auto verdict = validate_weak_roman(g, gfun); !verdict)
        throw PreconditionError("assignment is not weak Roman dominating (vertex " +
                                std::to_string(*verdict.witness) + " undefended)");
    const ExtremalReport report = known ? *known : is_extremal(g, opts);
    if (!report.extremal)
        throw PreconditionError("graph is not extremal");
    if (gfun.weight() != report.gamma_r)
        throw PreconditionError("assignment weight " + std::to_string(gfun.weight()) +
                                " is not the minimum " + std::to_string(report.gamma_r));
    if (gfun.twos() != 0)
        throw TheoremViolation("minimum assignment of an extremal graph uses value 2 at vertex " +
                               std::to_string(lowest(gfun.twos())));

    const Mask all = g.vertices();
    const Mask v1 = gfun.positive();
    ExtremalDecomposition d;
    d.v_list = VertexSet(v1).members();
    const std::size_t k = d.v_list.size();
    d.p_sets.resize(k);
    d.q_sets.resize(k);

    Mask in_p = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const Mask vi = bit(d.v_list[i]);
        Mask p = 0;
        for_each_bit(all & ~v1, [&](int u) {
            if ((g.neighbors(u) & v1) == vi)
                p |= bit(u);
        });
        if (p == 0)
            throw TheoremViolation("P_" + std::to_string(i + 1) + " is empty");
        if (!is_complete_set(g, VertexSet(p)))
            throw TheoremViolation("P_" + std::to_string(i + 1) + " is not complete");
        d.p_sets[i] = VertexSet(p);
        in_p |= p;
    }

    std::array<Mask, kMaxOrder> q{};
    for_each_bit(all & ~(v1 | in_p), [&](int u) {
        const Mask cu = g.closed_neighbors(u);
        for (std::size_t i = 0; i < k; ++i) {
            const int v = d.v_list[i];
            if (g.adjacent(u, v) && (g.closed_neighborhood(v1 & ~bit(v)) | cu) == all) {
                q[i] |= bit(u);
                return;
            }
        }
        throw TheoremViolation("vertex " + std::to_string(u) + " has no defending neighbour");
    });
    for (std::size_t i = 0; i < k; ++i)
        d.q_sets[i] = VertexSet(q[i]);
    return d;
}

std::string_view clause_name(DecompositionClause c) {
    switch (c) {
    case DecompositionClause::Shape: return "shape";
    case DecompositionClause::Partition: return "partition";
    case DecompositionClause::PNonEmpty: return "P_i non-empty";
    case DecompositionClause::PComplete: return "P_i complete";
    case DecompositionClause::PMembership: return "P_i membership";
    case DecompositionClause::QAdjacency: return "Q_i adjacency";
    }
    return "?";
}

DecompositionVerdict verify_decomposition(const Graph& g, const ExtremalDecomposition& d) {
    DecompositionVerdict out;
    auto fail = [&](DecompositionClause c, int index, Mask vertices) {
        out.valid = false;
        out.failures.push_back({c, index, VertexSet(vertices).members()});
    };

    const std::size_t k = d.v_list.size();
    if (d.p_sets.size() != k || d.q_sets.size() != k) {
        fail(DecompositionClause::Shape, -1, 0);
        return out;
    }

    const Mask all = g.vertices();
    Mask seen = 0;
    Mask repeated = 0;
    Mask stray = 0;
    auto take = [&](Mask m) {
        stray |= m & ~all;
        repeated |= seen & m;
        seen |= m;
    };
    Mask v1 = 0;
    for (int v : d.v_list) {
        if (v < 0 || v >= g.order()) {
            fail(DecompositionClause::Partition, -1, 0);
            return out;
        }
        take(bit(v));
        v1 |= bit(v);
    }
    for (std::size_t i = 0; i < k; ++i) {
        take(d.p_sets[i].bits());
        take(d.q_sets[i].bits());
    }
    if (repeated != 0 || stray != 0 || (seen & all) != all)
        fail(DecompositionClause::Partition, -1, repeated | stray | (all & ~seen));
    if (stray != 0)
        return out;

    for (std::size_t i = 0; i < k; ++i) {
        const int index = static_cast<int>(i);
        const int vi = d.v_list[i];
        const Mask p = d.p_sets[i].bits();
        if (p == 0)
            fail(DecompositionClause::PNonEmpty, index, 0);

        Mask missing_pairs = 0;
        for_each_bit(p, [&](int x) {
            const Mask non = p & ~g.closed_neighbors(x);
            if (non != 0)
                missing_pairs |= bit(x) | non;
        });
        if (missing_pairs != 0)
            fail(DecompositionClause::PComplete, index, missing_pairs);

        Mask expected = 0;
        for_each_bit(all & ~v1, [&](int u) {
            if ((g.neighbors(u) & v1) == bit(vi))
                expected |= bit(u);
        });
        if (expected != p)
            fail(DecompositionClause::PMembership, index, expected ^ p);

        const Mask hub = bit(vi) | p;
        Mask bad_q = 0;
        for_each_bit(d.q_sets[i].bits(), [&](int x) {
            if ((g.neighbors(x) & hub) != hub)
                bad_q |= bit(x);
        });
        if (bad_q != 0)
            fail(DecompositionClause::QAdjacency, index, bad_q);
    }
    return out;
}

std::string_view form_name(ExtremalForm f) {
    switch (f) {
    case ExtremalForm::IsK2: return "IsK2";
    case ExtremalForm::TwoTrianglesPlusTwoMatching: return "TwoTrianglesPlusTwoMatching";
    case ExtremalForm::TriangleSystem: return "TriangleSystem";
    case ExtremalForm::NotOfCharacterizedForm: return "NotOfCharacterizedForm";
    }
    return "?";
}

ExtremalClassification recognize_c2(const Graph& g) {
    if (g.order() == 0)
        throw PreconditionError("recognize_c2: empty graph");
    if (!is_connected(g))
        throw PreconditionError("recognize_c2: graph is disconnected");
    if (contains_induced(g, Pattern::K4))
        throw PreconditionError("recognize_c2: graph contains K4");
    if (contains_induced(g, Pattern::Diamond))
        throw PreconditionError("recognize_c2: graph contains K4-e");

    if (g.order() == 2) {
        ExtremalClassification c;
        c.form = ExtremalForm::IsK2;
        c.k = 1;
        return c;
    }
    if (auto c = as_two_triangles(g))
        return *c;
    if (auto c = as_triangle_system(g))
        return *c;
    return {};
}

Graph rebuild(const ExtremalClassification& c) {
    switch (c.form) {
    case ExtremalForm::IsK2: return complete_graph(2);
    case ExtremalForm::TwoTrianglesPlusTwoMatching: return generate_two_triangles_matching(2);
    case ExtremalForm::TriangleSystem: return generate_triangle_system(c.k, c.added_edges);
    case ExtremalForm::NotOfCharacterizedForm: break;
    }
    throw PreconditionError("rebuild: classification carries no structure");
}

std::vector<int> canonical_labeling(const ExtremalClassification& c) {
    if (c.form == ExtremalForm::IsK2)
        return {0, 1};
    std::vector<int> out;
    out.reserve(c.roles.size());
    for (const RoleLabel& r : c.roles)
        out.push_back(kRoleCount * r.triangle + role_offset(r.role));
    return out;
}

bool recognize_c1(const Graph& g) {
    if (contains_induced(g, Pattern::Triangle))
        throw PreconditionError("recognize_c1: graph contains a triangle");
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 1)
            return false;
    return true;
}

Graph generate_triangle_system(int k, std::span<const std::pair<int, int>> added_edges) {
    if (k < 1)
        throw PreconditionError("triangle system needs k >= 1");
    if (kRoleCount * k > kMaxOrder)
        throw RangeError("triangle system exceeds the order limit");
    GraphBuilder b(kRoleCount * k);
    for (int i = 0; i < k; ++i) {
        const int v = kRoleCount * i;
        b.add_edge(v, v + 1).add_edge(v, v + 2).add_edge(v + 1, v + 2);
    }
    for (auto [x, y] : added_edges) {
        if (x < 0 || x >= k || y < 0 || y >= k || x == y)
            throw PreconditionError("added edge {" + std::to_string(x) + "," + std::to_string(y) +
                                    "} is not a pair of distinct triangle indices");
        b.add_edge(kRoleCount * x, kRoleCount * y);
    }
    return b.build();
}

Graph generate_two_triangles_matching(int matching_edges) {
    if (matching_edges != 2 && matching_edges != 3)
        throw PreconditionError("matching size must be 2 or 3");
    GraphBuilder b(6);
    b.add_edge(0, 1).add_edge(0, 2).add_edge(1, 2);
    b.add_edge(3, 4).add_edge(3, 5).add_edge(4, 5);
    for (int i = 0; i < matching_edges; ++i)
        b.add_edge(i, 3 + i);
    return b.build();
}

} // namespace domlab
