#include "cli.hpp"

#include "domlab/domination.hpp"
#include "domlab/error.hpp"
#include "domlab/extremal.hpp"
#include "domlab/graph6.hpp"
#include "domlab/hereditary.hpp"
#include "domlab/patterns.hpp"
#include "domlab/sat_reduction.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

namespace domlab::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr std::size_t kBatchPerJob = 256;
constexpr int kDefaultReduceVerifyOrder = 20;

enum class Status {
    Ok,
    Skipped, ///< filtered out, nothing emitted
    Warning, ///< per-line parse problem
    Error,   ///< cap exceeded, precondition or internal failure
    Invalid, ///< a certificate or cross-check failed
};

struct Report {
    Status status = Status::Ok;
    std::string text;
};

struct Line {
    std::size_t number = 0;
    std::string text;
};

struct CommonFlags {
    std::string input = "-";
    bool strict = false;
    int jobs = 1;
    bool no_timing = false;
};

int env_max_order() {
    if (const char* v = std::getenv("DOMLAB_MAX_ORDER")) {
        char* end = nullptr;
        const long x = std::strtol(v, &end, 10);
        if (end != v && *end == '\0' && x > 0 && x <= kMaxOrder)
            return static_cast<int>(x);
    }
    return kDefaultSolverMaxOrder;
}

class LineSource {
public:
    explicit LineSource(std::istream& in) : in_(in) {}

    // Next batch of graph records; blank lines and ">>" headers are skipped.
    bool next(std::vector<Line>& batch, std::size_t max) {
        batch.clear();
        std::string text;
        while (batch.size() < max && std::getline(in_, text)) {
            ++line_no_;
            while (!text.empty() && (text.back() == '\r' || text.back() == ' ' || text.back() == '\t'))
                text.pop_back();
            if (text.empty() || text.starts_with(">>"))
                continue;
            batch.push_back({line_no_, std::move(text)});
        }
        return !batch.empty();
    }

private:
    std::istream& in_;
    std::size_t line_no_ = 0;
};

json header(std::string_view command, const Line& line) {
    json r;
    r["command"] = command;
    r["line"] = line.number;
    r["input"] = line.text;
    return r;
}

Report error_report(json r, std::string_view kind, const std::string& message,
                    std::optional<std::size_t> position = std::nullopt) {
    json e;
    e["kind"] = kind;
    e["message"] = message;
    if (position)
        e["offset"] = *position;
    r["error"] = std::move(e);
    return {kind == "parse" ? Status::Warning : Status::Error, r.dump()};
}

// Runs `body`, translating library exceptions into error reports.
Report guarded(const json& head, const std::function<Report()>& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        return error_report(head, "parse", e.what(), e.position());
    } catch (const CapExceeded& e) {
        return error_report(head, "cap", e.what());
    } catch (const PreconditionError& e) {
        return error_report(head, "precondition", e.what());
    } catch (const RangeError& e) {
        return error_report(head, "range", e.what());
    } catch (const std::exception& e) {
        return error_report(head, "internal", e.what());
    }
}

json set_json(VertexSet s) { return s.members(); }

json rainbow_json(const RainbowAssignment& f) {
    json arr = json::array();
    for (RainbowLabel l : f.labels()) {
        json cell = json::array();
        if (static_cast<int>(l) & 1)
            cell.push_back(1);
        if (static_cast<int>(l) & 2)
            cell.push_back(2);
        arr.push_back(std::move(cell));
    }
    return arr;
}

json weak_roman_json(const WeakRomanAssignment& g) {
    json arr = json::array();
    for (auto x : g.values())
        arr.push_back(static_cast<int>(x));
    return arr;
}

std::string_view role_name(TriangleRole r) {
    switch (r) {
    case TriangleRole::V: return "v";
    case TriangleRole::W: return "w";
    case TriangleRole::U: return "u";
    }
    return "?";
}

json classification_json(const ExtremalClassification& c) {
    json j;
    j["tag"] = form_name(c.form);
    j["k"] = c.k;
    json edges = json::array();
    for (auto [a, b] : c.added_edges)
        edges.push_back({a, b});
    j["added_edges"] = std::move(edges);
    json roles = json::array();
    for (std::size_t v = 0; v < c.roles.size(); ++v)
        roles.push_back({{"vertex", v}, {"role", role_name(c.roles[v].role)}, {"triangle", c.roles[v].triangle}});
    j["roles"] = std::move(roles);
    return j;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// Processes records batch by batch, emitting reports in input order.
int stream_reports(std::istream& in, const CommonFlags& flags, std::ostream& out,
                   const std::function<Report(const Line&)>& fn) {
    LineSource source(in);
    const int jobs = std::max(1, flags.jobs);
    std::vector<Line> batch;
    bool failed = false;
    while (source.next(batch, kBatchPerJob * static_cast<std::size_t>(jobs))) {
        std::vector<Report> reports(batch.size());
        if (jobs == 1) {
            for (std::size_t i = 0; i < batch.size(); ++i)
                reports[i] = fn(batch[i]);
        } else {
            std::atomic<std::size_t> next{0};
            std::vector<std::thread> workers;
            for (int w = 0; w < jobs; ++w)
                workers.emplace_back([&] {
                    for (std::size_t i = next++; i < batch.size(); i = next++)
                        reports[i] = fn(batch[i]);
                });
            for (auto& t : workers)
                t.join();
        }
        for (const Report& r : reports) {
            if (r.status != Status::Skipped)
                out << r.text << '\n';
            if (r.status == Status::Error || r.status == Status::Invalid)
                failed = true;
            if (flags.strict && r.status != Status::Ok && r.status != Status::Skipped) {
                out.flush();
                return 1;
            }
        }
        out.flush();
    }
    return failed ? 1 : 0;
}

int with_input(const std::string& path, std::istream& in, std::ostream& err,
               const std::function<int(std::istream&)>& fn) {
    if (path == "-")
        return fn(in);
    std::ifstream file(path);
    if (!file) {
        err << "domlab: cannot open " << path << '\n';
        return 1;
    }
    return fn(file);
}

void add_common(CLI::App* cmd, CommonFlags& flags, int& max_order, const std::string& cap_help) {
    cmd->add_option("input", flags.input, "Input file, one record per line ('-' for stdin)");
    cmd->add_flag("--strict", flags.strict, "Stop at the first error or parse problem");
    cmd->add_option("--jobs,-j", flags.jobs, "Worker threads")->check(CLI::Range(1, 256));
    cmd->add_option("--max-order", max_order, cap_help)->check(CLI::Range(0, kMaxOrder));
    cmd->add_flag("--no-timing", flags.no_timing, "Omit elapsed_ms from reports");
}

// --- solve -----------------------------------------------------------------

struct SolveFlags {
    CommonFlags common;
    std::string param = "all";
    bool certificate = false;
    int max_order = kDefaultSolverMaxOrder;
};

Report solve_line(const SolveFlags& f, const Line& line) {
    const json head = header("solve", line);
    return guarded(head, [&] {
        const auto start = std::chrono::steady_clock::now();
        const Graph g = parse_graph6(line.text);
        SolverOptions opts;
        opts.max_order = f.max_order;
        json r = head;
        r["order"] = g.order();
        json results;
        json certs;
        const bool all = f.param == "all";
        if (all || f.param == "gamma") {
            if (f.certificate) {
                auto s = domination_number(g, opts);
                results["gamma"] = s.value;
                certs["gamma"] = set_json(s.witness);
            } else {
                results["gamma"] = domination_value(g, opts);
            }
        }
        if (all || f.param == "gamma-r") {
            if (f.certificate) {
                auto s = weak_roman_number(g, opts);
                results["gamma_r"] = s.value;
                certs["gamma_r"] = weak_roman_json(s.witness);
            } else {
                results["gamma_r"] = weak_roman_value(g, opts);
            }
        }
        if (all || f.param == "gamma-r2") {
            if (f.certificate) {
                auto s = rainbow_number(g, opts);
                results["gamma_r2"] = s.value;
                certs["gamma_r2"] = rainbow_json(s.witness);
            } else {
                results["gamma_r2"] = rainbow_value(g, opts);
            }
        }
        r["results"] = std::move(results);
        if (f.certificate)
            r["certificates"] = std::move(certs);
        if (!f.common.no_timing)
            r["elapsed_ms"] = elapsed_ms(start);
        return Report{Status::Ok, r.dump()};
    });
}

// --- scan ------------------------------------------------------------------

struct ScanFlags {
    CommonFlags common;
    bool triangle_free = false;
    bool k4_k4e_free = false;
    bool k5_free = false;
    bool connected = false;
    bool find_extremal = false;
    bool classify = false;
    bool certificate = false;
    int max_order = kDefaultSolverMaxOrder;
};

Report scan_line(const ScanFlags& f, const Line& line) {
    const json head = header("scan", line);
    return guarded(head, [&] {
        const auto start = std::chrono::steady_clock::now();
        const Graph g = parse_graph6(line.text);
        if (f.connected && !is_connected(g))
            return Report{Status::Skipped, {}};
        if (f.triangle_free && !is_free_of(g, Pattern::Triangle))
            return Report{Status::Skipped, {}};
        if (f.k4_k4e_free && (!is_free_of(g, Pattern::K4) || !is_free_of(g, Pattern::Diamond)))
            return Report{Status::Skipped, {}};
        if (f.k5_free && !is_free_of(g, Pattern::K5))
            return Report{Status::Skipped, {}};

        SolverOptions opts;
        opts.max_order = f.max_order;
        json r = head;
        r["order"] = g.order();
        json results;
        json certs;
        int gamma_r = 0;
        int gamma_r2 = 0;
        if (f.certificate) {
            auto wr = weak_roman_number(g, opts);
            auto rb = rainbow_number(g, opts);
            gamma_r = wr.value;
            gamma_r2 = rb.value;
            certs["gamma_r"] = weak_roman_json(wr.witness);
            certs["gamma_r2"] = rainbow_json(rb.witness);
        } else {
            gamma_r = weak_roman_value(g, opts);
            gamma_r2 = rainbow_value(g, opts);
        }
        const bool extremal = gamma_r2 == 2 * gamma_r;
        if (f.find_extremal && !extremal)
            return Report{Status::Skipped, {}};
        results["gamma_r"] = gamma_r;
        results["gamma_r2"] = gamma_r2;
        results["extremal"] = extremal;
        if (g.order() == 0)
            results["vacuous"] = true;
        r["results"] = std::move(results);
        if (f.certificate)
            r["certificates"] = std::move(certs);
        if (f.classify) {
            if (g.order() > 0 && is_connected(g) && is_free_of(g, Pattern::K4) && is_free_of(g, Pattern::Diamond))
                r["classification"] = classification_json(recognize_c2(g));
            if (is_free_of(g, Pattern::Triangle))
                r["disjoint_k2"] = recognize_c1(g);
        }
        if (!f.common.no_timing)
            r["elapsed_ms"] = elapsed_ms(start);
        return Report{Status::Ok, r.dump()};
    });
}

// --- hereditary ------------------------------------------------------------

struct HereditaryFlags {
    CommonFlags common;
    int k = 3;
    bool check_theorem3 = false;
    int max_order = kDefaultHereditaryMaxOrder;
};

Report hereditary_line(const HereditaryFlags& f, ParameterMemo& memo, const Line& line) {
    const json head = header("hereditary", line);
    return guarded(head, [&] {
        const auto start = std::chrono::steady_clock::now();
        const Graph g = parse_graph6(line.text);
        HereditaryOptions opts;
        opts.max_order = f.max_order;
        opts.memo = &memo;
        const HereditaryVerdict v = in_gk(g, f.k, opts);
        json r = head;
        r["order"] = g.order();
        r["k"] = f.k;
        json results;
        results["member"] = v.member;
        if (v.witness) {
            results["witness"] = set_json(*v.witness);
            results["witness_gamma_r"] = v.witness_parameters.gamma_r;
            results["witness_gamma_r2"] = v.witness_parameters.gamma_r2;
        }
        Status status = Status::Ok;
        if (f.check_theorem3) {
            const FreenessResult free = is_free(g, kG3Forbidden);
            results["forbidden_free"] = free.free;
            if (!free.free) {
                results["forbidden_pattern"] = pattern_name(*free.pattern);
                results["forbidden_embedding"] = free.embedding;
            }
            const bool agree = free.free == v.member;
            results["theorem3_agreement"] = agree;
            if (!agree)
                status = Status::Invalid;
        }
        r["results"] = std::move(results);
        if (!f.common.no_timing)
            r["elapsed_ms"] = elapsed_ms(start);
        return Report{status, r.dump()};
    });
}

// --- validate --------------------------------------------------------------

struct ValidateFlags {
    CommonFlags common;
};

RainbowAssignment rainbow_from_json(const json& arr) {
    std::vector<RainbowLabel> labels;
    for (const json& cell : arr) {
        int code = 0;
        for (const json& c : cell) {
            const int colour = c.get<int>();
            if (colour != 1 && colour != 2)
                throw PreconditionError("rainbow colour " + std::to_string(colour) + " outside {1,2}");
            code |= colour;
        }
        labels.push_back(static_cast<RainbowLabel>(code));
    }
    return RainbowAssignment(std::move(labels));
}

Report validate_line(const ValidateFlags& f, const Line& line) {
    json head;
    head["command"] = "validate";
    head["line"] = line.number;
    return guarded(head, [&] {
        const auto start = std::chrono::steady_clock::now();
        json in;
        try {
            in = json::parse(line.text);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("json: ") + e.what(), e.byte);
        }
        std::string g6;
        if (in.contains("input") && in["input"].is_string())
            g6 = in["input"].get<std::string>();
        else if (in.contains("graph6") && in["graph6"].is_string())
            g6 = in["graph6"].get<std::string>();
        else
            throw PreconditionError("record carries no graph6 \"input\"");
        json r = head;
        r["input"] = g6;
        const Graph g = parse_graph6(g6);
        if (!in.contains("certificates") || !in["certificates"].is_object())
            throw PreconditionError("record carries no \"certificates\" object");
        const json& certs = in["certificates"];
        const json reported = in.contains("results") ? in["results"] : json::object();

        bool all_valid = true;
        json results;
        auto record = [&](const char* key, bool valid, int weight, std::optional<int> witness) {
            json entry;
            entry["valid"] = valid;
            entry["weight"] = weight;
            if (witness)
                entry["witness"] = *witness;
            if (reported.contains(key)) {
                const bool matches = reported[key].get<int>() == weight;
                entry["matches_value"] = matches;
                all_valid = all_valid && matches;
            }
            all_valid = all_valid && valid;
            results[key] = std::move(entry);
        };
        if (certs.contains("gamma")) {
            const auto members = certs["gamma"].get<std::vector<int>>();
            const VertexSet d = VertexSet::from(members);
            record("gamma", is_dominating_set(g, d), d.size(), std::nullopt);
        }
        if (certs.contains("gamma_r")) {
            const WeakRomanAssignment a(certs["gamma_r"].get<std::vector<int>>());
            const Verdict v = validate_weak_roman(g, a);
            record("gamma_r", v.valid, a.weight(), v.witness);
        }
        if (certs.contains("gamma_r2")) {
            const RainbowAssignment a = rainbow_from_json(certs["gamma_r2"]);
            const Verdict v = validate_rainbow(g, a);
            record("gamma_r2", v.valid, a.weight(), v.witness);
        }
        r["results"] = std::move(results);
        r["valid"] = all_valid;
        if (!f.common.no_timing)
            r["elapsed_ms"] = elapsed_ms(start);
        return Report{all_valid ? Status::Ok : Status::Invalid, r.dump()};
    });
}

// --- reduce ----------------------------------------------------------------

struct ReduceFlags {
    std::string input = "-";
    bool pad = false;
    bool verify = false;
    int max_order = kDefaultReduceVerifyOrder;
    std::string labels_out;
};

json theorem2_json(const Theorem2Report& rep) {
    json j;
    j["order"] = rep.order;
    j["k5_free"] = rep.k5_free;
    j["gamma_r2"] = rep.gamma_r2;
    j["gamma_r2_expected"] = 2 * rep.num_vars + 2;
    j["gamma_r2_check"] = rep.rainbow_matches;
    j["gamma_r"] = rep.gamma_r;
    j["gamma_r_lower_bound_check"] = rep.lower_bound_holds;
    j["satisfiable"] = rep.satisfiable;
    if (rep.truth) {
        json t = json::array();
        for (bool b : *rep.truth)
            t.push_back(b);
        j["truth"] = std::move(t);
    }
    j["equivalence_check"] = rep.equivalence_holds;
    j["certificate_check"] = rep.certificate_valid;
    j["pass"] = rep.all_pass();
    return j;
}

int run_reduce(const ReduceFlags& f, std::istream& in, std::ostream& out, std::ostream& err) {
    return with_input(f.input, in, err, [&](std::istream& src) {
        std::stringstream buf;
        buf << src.rdbuf();
        CnfFormula formula;
        try {
            DimacsOptions dopts;
            dopts.pad_short_clauses = f.pad;
            formula = parse_dimacs(buf.str(), dopts);
        } catch (const ParseError& e) {
            err << "domlab reduce: " << e.what() << " (line " << e.position() << ")\n";
            return 1;
        }
        const ReductionGraph r = build_reduction(formula);
        out << emit_graph6(r.graph) << '\n';

        json sidecar;
        sidecar["command"] = "reduce";
        sidecar["input"] = f.input;
        sidecar["n"] = formula.num_vars;
        sidecar["m"] = formula.num_clauses();
        sidecar["order"] = r.graph.order();
        json labels = json::array();
        for (const VertexRole& role : r.roles)
            labels.push_back(role_label(role));
        sidecar["labels"] = std::move(labels);

        int code = 0;
        if (f.verify) {
            if (r.graph.order() > f.max_order) {
                err << "domlab reduce: order " << r.graph.order() << " exceeds verification cap "
                    << f.max_order << "; skipping verification\n";
            } else {
                SolverOptions opts;
                opts.max_order = f.max_order;
                const Theorem2Report rep = verify_theorem2(formula, opts);
                sidecar["verification"] = theorem2_json(rep);
                if (!rep.all_pass())
                    code = 1;
            }
        }
        if (!f.labels_out.empty()) {
            std::ofstream file(f.labels_out);
            if (!file) {
                err << "domlab reduce: cannot write " << f.labels_out << '\n';
                return 1;
            }
            file << sidecar.dump() << '\n';
        } else {
            out << sidecar.dump() << '\n';
        }
        return code;
    });
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"domlab: exact 2-rainbow and weak Roman domination on small graphs"};
    app.require_subcommand(1);

    SolveFlags solve;
    solve.max_order = env_max_order();
    auto* solve_cmd = app.add_subcommand("solve", "Solve gamma, gamma_r and gamma_r2 per graph6 line");
    add_common(solve_cmd, solve.common, solve.max_order, "Largest order to solve (default 24, env DOMLAB_MAX_ORDER)");
    solve_cmd->add_option("--param", solve.param, "Parameter to compute")
        ->check(CLI::IsMember({"gamma", "gamma-r", "gamma-r2", "all"}));
    solve_cmd->add_flag("--certificate", solve.certificate, "Include optimal witnesses");

    ScanFlags scan;
    scan.max_order = env_max_order();
    auto* scan_cmd = app.add_subcommand("scan", "Filter a graph6 corpus and report extremal graphs");
    add_common(scan_cmd, scan.common, scan.max_order, "Largest order to solve (default 24, env DOMLAB_MAX_ORDER)");
    scan_cmd->add_flag("--triangle-free", scan.triangle_free, "Keep triangle-free graphs only");
    scan_cmd->add_flag("--k4-k4e-free", scan.k4_k4e_free, "Keep {K4, K4-e}-free graphs only");
    scan_cmd->add_flag("--k5-free", scan.k5_free, "Keep K5-free graphs only");
    scan_cmd->add_flag("--connected", scan.connected, "Keep connected graphs only");
    scan_cmd->add_flag("--find-extremal", scan.find_extremal, "Emit only graphs with gamma_r2 = 2 gamma_r");
    scan_cmd->add_flag("--classify", scan.classify, "Attach structural classification where it applies");
    scan_cmd->add_flag("--certificate", scan.certificate, "Include optimal witnesses");

    ReduceFlags reduce;
    auto* reduce_cmd = app.add_subcommand("reduce", "Build the K5-free reduction graph of a 3-CNF formula");
    reduce_cmd->add_option("input", reduce.input, "DIMACS CNF file ('-' for stdin)");
    reduce_cmd->add_flag("--pad", reduce.pad, "Pad short clauses by repeating their last literal");
    reduce_cmd->add_flag("--verify", reduce.verify, "Solve the graph exactly and check the reduction");
    reduce_cmd->add_option("--max-order", reduce.max_order, "Largest order to verify (default 20)")
        ->check(CLI::Range(0, kMaxOrder));
    reduce_cmd->add_option("--labels-out", reduce.labels_out, "Write the JSON label sidecar to this file");

    HereditaryFlags here;
    auto* here_cmd = app.add_subcommand("hereditary", "Test membership in the hereditary class G_k");
    add_common(here_cmd, here.common, here.max_order, "Largest order to test (default 10)");
    here_cmd->add_option("-k", here.k, "Class index k")->check(CLI::PositiveNumber);
    here_cmd->add_flag("--check-theorem3", here.check_theorem3,
                       "Also compare against {co-K3, C5}-freeness (requires k = 3)");

    ValidateFlags validate;
    auto* validate_cmd = app.add_subcommand("validate", "Re-validate certificates from solve/scan reports");
    validate_cmd->add_option("input", validate.common.input, "JSON-lines file ('-' for stdin)");
    validate_cmd->add_flag("--strict", validate.common.strict, "Stop at the first failure");
    validate_cmd->add_flag("--no-timing", validate.common.no_timing, "Omit elapsed_ms from reports");

    std::vector<const char*> argv{"domlab"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    if (here_cmd->parsed() && here.check_theorem3 && here.k != 3) {
        err << "domlab hereditary: --check-theorem3 requires -k 3\n";
        return 2;
    }

    if (solve_cmd->parsed())
        return with_input(solve.common.input, in, err, [&](std::istream& src) {
            return stream_reports(src, solve.common, out, [&](const Line& l) { return solve_line(solve, l); });
        });
    if (scan_cmd->parsed())
        return with_input(scan.common.input, in, err, [&](std::istream& src) {
            return stream_reports(src, scan.common, out, [&](const Line& l) { return scan_line(scan, l); });
        });
    if (here_cmd->parsed()) {
        ParameterMemo memo;
        return with_input(here.common.input, in, err, [&](std::istream& src) {
            return stream_reports(src, here.common, out,
                                  [&](const Line& l) { return hereditary_line(here, memo, l); });
        });
    }
    if (validate_cmd->parsed())
        return with_input(validate.common.input, in, err, [&](std::istream& src) {
            return stream_reports(src, validate.common, out,
                                  [&](const Line& l) { return validate_line(validate, l); });
        });
    if (reduce_cmd->parsed())
        return run_reduce(reduce, in, out, err);
    return 2;
}

} // namespace domlab::cli
