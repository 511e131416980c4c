#include "domlab/sat_reduction.hpp"

#include "domlab/error.hpp"
#include "domlab/patterns.hpp"

#include <charconv>
#include <cstdint>
#include <cstdlib>

namespace domlab {

namespace {

constexpr int kGadget = 4;

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

bool to_int(std::string_view s, long long& out) {
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc() && ptr == end;
}

bool literal_true(Literal l, const std::vector<bool>& truth) {
    return truth[static_cast<std::size_t>(l.var - 1)] != l.negated;
}

} // namespace

void check_formula(const CnfFormula& f) {
    if (f.num_vars < 1)
        throw PreconditionError("formula needs at least one variable");
    if (f.num_clauses() < 2)
        throw PreconditionError("formula needs at least two clauses");
    for (const Clause& c : f.clauses)
        for (const Literal& l : c)
            if (l.var < 1 || l.var > f.num_vars)
                throw PreconditionError("literal variable " + std::to_string(l.var) + " outside [1, " +
                                        std::to_string(f.num_vars) + "]");
}

CnfFormula parse_dimacs(std::string_view text, const DimacsOptions& opts) {
    CnfFormula f;
    long long declared = -1;
    std::size_t header_line = 0;
    std::vector<Literal> pending;
    std::size_t pending_line = 0;
    std::size_t line_no = 0;

    auto finish_clause = [&](std::size_t line) {
        if (pending.empty())
            throw ParseError("dimacs: empty clause", line);
        if (pending.size() > 3)
            throw ParseError("dimacs: clause with " + std::to_string(pending.size()) +
                                 " literals (exactly 3 required)",
                             line);
        if (pending.size() < 3 && !opts.pad_short_clauses)
            throw ParseError("dimacs: clause with " + std::to_string(pending.size()) +
                                 " literals (exactly 3 required; padding disabled)",
                             line);
        while (pending.size() < 3)
            pending.push_back(pending.back());
        f.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
    };

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        const auto words = split_words(line);
        if (words.empty() || words[0].starts_with('c'))
            continue;
        if (words[0] == "%")
            break;
        if (words[0] == "p") {
            long long n = 0;
            long long m = 0;
            if (declared >= 0)
                throw ParseError("dimacs: duplicate problem line", line_no);
            if (words.size() != 4 || words[1] != "cnf" || !to_int(words[2], n) || !to_int(words[3], m) ||
                n < 0 || m < 0 || n > 1'000'000 || m > 1'000'000)
                throw ParseError("dimacs: malformed problem line (expected \"p cnf <vars> <clauses>\")",
                                 line_no);
            f.num_vars = static_cast<int>(n);
            declared = m;
            header_line = line_no;
            continue;
        }
        if (declared < 0)
            throw ParseError("dimacs: clause data before the problem line", line_no);
        for (std::string_view w : words) {
            long long x = 0;
            if (!to_int(w, x))
                throw ParseError("dimacs: not an integer: \"" + std::string(w) + "\"", line_no);
            if (x == 0) {
                finish_clause(line_no);
                continue;
            }
            if (std::llabs(x) > f.num_vars)
                throw ParseError("dimacs: literal " + std::to_string(x) + " outside declared range 1.." +
                                     std::to_string(f.num_vars),
                                 line_no);
            if (pending.empty())
                pending_line = line_no;
            pending.push_back({static_cast<int>(std::llabs(x)), x < 0});
        }
    }

    if (declared < 0)
        throw ParseError("dimacs: missing problem line", line_no);
    if (!pending.empty())
        throw ParseError("dimacs: clause not terminated by 0", pending_line);
    if (static_cast<long long>(f.clauses.size()) != declared)
        throw ParseError("dimacs: problem line declares " + std::to_string(declared) + " clauses, found " +
                             std::to_string(f.clauses.size()),
                         header_line);
    if (f.clauses.size() < 2)
        throw ParseError("dimacs: at least two clauses required", header_line);
    return f;
}

std::string role_label(const VertexRole& r) {
    switch (r.kind) {
    case VertexKind::Literal: return (r.negated ? "~x" : "x") + std::to_string(r.index);
    case VertexKind::Filler: return "g" + std::to_string(r.index) + "." + std::to_string(r.slot);
    case VertexKind::Clause: return "c" + std::to_string(r.index);
    case VertexKind::A: return "a";
    case VertexKind::B: return "b";
    }
    return "?";
}

ReductionGraph build_reduction(const CnfFormula& f) {
    check_formula(f);
    ReductionGraph r;
    r.num_vars = f.num_vars;
    r.num_clauses = f.num_clauses();
    const int order = kGadget * r.num_vars + r.num_clauses + 2;
    if (order > kMaxOrder)
        throw RangeError("reduction graph of order " + std::to_string(order) + " exceeds the order limit");

    GraphBuilder b(order);
    r.roles.resize(static_cast<std::size_t>(order), VertexRole{VertexKind::A});
    for (int i = 1; i <= r.num_vars; ++i) {
        const int base = kGadget * (i - 1);
        for (int x = 0; x < kGadget; ++x)
            for (int y = x + 1; y < kGadget; ++y)
                b.add_edge(base + x, base + y);
        r.roles[static_cast<std::size_t>(base)] = {VertexKind::Literal, i, false, 0};
        r.roles[static_cast<std::size_t>(base + 1)] = {VertexKind::Literal, i, true, 1};
        r.roles[static_cast<std::size_t>(base + 2)] = {VertexKind::Filler, i, false, 2};
        r.roles[static_cast<std::size_t>(base + 3)] = {VertexKind::Filler, i, false, 3};
    }
    for (int j = 1; j <= r.num_clauses; ++j) {
        const int c = r.clause_vertex(j);
        r.roles[static_cast<std::size_t>(c)] = {VertexKind::Clause, j};
        for (const Literal& l : f.clauses[static_cast<std::size_t>(j - 1)])
            b.add_edge(r.literal_vertex(l), c);
        b.add_edge(r.a_vertex(), c);
        b.add_edge(r.b_vertex(), c);
    }
    b.add_edge(r.a_vertex(), r.b_vertex());
    r.roles[static_cast<std::size_t>(r.a_vertex())] = {VertexKind::A};
    r.roles[static_cast<std::size_t>(r.b_vertex())] = {VertexKind::B};
    r.graph = b.build();
    return r;
}

bool satisfies(const CnfFormula& f, const std::vector<bool>& truth) {
    if (static_cast<int>(truth.size()) != f.num_vars)
        throw PreconditionError("truth assignment length does not match variable count");
    for (const Clause& c : f.clauses) {
        bool sat = false;
        for (const Literal& l : c)
            sat = sat || literal_true(l, truth);
        if (!sat)
            return false;
    }
    return true;
}

std::optional<std::vector<bool>> sat_brute_force(const CnfFormula& f, const SatOptions& opts) {
    check_formula(f);
    if (f.num_vars > opts.max_vars)
        throw CapExceeded("brute-force SAT limited to " + std::to_string(opts.max_vars) + " variables");
    const std::uint64_t total = std::uint64_t{1} << f.num_vars;
    std::vector<bool> truth(static_cast<std::size_t>(f.num_vars));
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        for (int i = 0; i < f.num_vars; ++i)
            truth[static_cast<std::size_t>(i)] = ((bits >> i) & 1U) != 0;
        if (satisfies(f, truth))
            return truth;
    }
    return std::nullopt;
}

WeakRomanAssignment truth_assignment_to_wrdf(const ReductionGraph& r, const CnfFormula& f,
                                             const std::vector<bool>& truth) {
    if (f.num_vars != r.num_vars || f.num_clauses() != r.num_clauses)
        throw PreconditionError("formula does not match the reduction graph");
    if (!satisfies(f, truth))
        throw PreconditionError("truth assignment does not satisfy the formula");
    std::vector<int> values(static_cast<std::size_t>(r.graph.order()), 0);
    values[static_cast<std::size_t>(r.a_vertex())] = 1;
    for (int i = 1; i <= r.num_vars; ++i) {
        const bool value = truth[static_cast<std::size_t>(i - 1)];
        values[static_cast<std::size_t>(r.literal_vertex({i, !value}))] = 1;
    }
    return WeakRomanAssignment(std::move(values));
}

Theorem2Report verify_theorem2(const CnfFormula& f, const SolverOptions& opts) {
    const ReductionGraph r = build_reduction(f);
    const int n = f.num_vars;

    Theorem2Report rep;
    rep.num_vars = n;
    rep.num_clauses = f.num_clauses();
    rep.order = r.graph.order();
    rep.k5_free = is_free_of(r.graph, Pattern::K5);

    rep.gamma_r2 = rainbow_value(r.graph, opts);
    SolverOptions bounded = opts;
    bounded.max_weight = n + 2;
    rep.gamma_r = weak_roman_value(r.graph, bounded);

    rep.truth = sat_brute_force(f);
    rep.satisfiable = rep.truth.has_value();

    rep.rainbow_matches = rep.gamma_r2 == 2 * n + 2;
    rep.lower_bound_holds = rep.gamma_r >= n + 1;
    rep.equivalence_holds = (rep.gamma_r == n + 1) == rep.satisfiable;
    if (rep.truth)
        rep.certificate_valid = validate_weak_roman(r.graph, truth_assignment_to_wrdf(r, f, *rep.truth)).valid;
    return rep;
}

} // namespace domlab
