#include "fls/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "fls/document.hpp"
#include "fls/verification.hpp"

namespace fls::cli {

namespace {

struct Loaded {
    SystemDocument doc;
    RGrid grid;
};

Loaded load(const CommandOptions& opts) {
    auto doc = load_system_document(opts.input_path);
    auto points = resolve_grid_points(opts.grid_points, doc.grid_points);
    return {std::move(doc), RGrid::uniform(points)};
}

ClassifyOptions classify_options(const CommandOptions& opts) {
    ClassifyOptions o;
    o.require_fuzzy_components = opts.strict;
    return o;
}

std::string variable(std::size_t i) { return "x" + std::to_string(i + 1); }

void print_header(const ClassificationReport& report, std::ostream& out) {
    const auto& ns = report.nonsingularity;
    out << "verdict: " << to_string(report.verdict) << '\n';
    out << "nonsingular: A=" << (ns.a_ok ? "yes" : "no") << " B+C=" << (ns.sum_ok ? "yes" : "no")
        << " S=" << (ns.embedding_ok ? "yes" : "no") << '\n';
}

void print_singular(const ClassificationReport& report, std::ostream& out) {
    const auto& ns = report.nonsingularity;
    if (!ns.sum_ok) out << "S is singular because B+C is singular\n";
    if (!ns.a_ok) out << "S is singular because A is singular\n";
}

void print_findings(const ClassificationDetails& d, std::ostream& out) {
    for (const auto& v : d.violating_variables) {
        out << "weak component " << variable(v.variable) << ": lower(" << v.witness_r
            << ")=" << v.lower << " > upper=" << v.upper << '\n';
    }
    for (const auto& c : d.definition1_violations) {
        for (const auto& v : c.report.violations) {
            if (v.kind == ViolationKind::LowerAboveUpper) continue;
            out << "non-monotone component " << variable(c.variable) << ": " << describe(v) << '\n';
            break;
        }
    }
}

void print_solution(const SolutionCandidate& cand, std::ostream& out) {
    for (std::size_t i = 0; i < cand.n(); ++i) {
        const auto& rep = cand.components[i].representation();
        out << variable(i) << " = ";
        if (auto* t = std::get_if<Triangular>(&rep)) {
            out << "(" << t->a << ", " << t->c << ", " << t->b << ")\n";
        } else if (auto* c = std::get_if<Crisp>(&rep)) {
            out << c->a << '\n';
        } else {
            auto p0 = cand.components[i].at(0.0);
            auto p1 = cand.components[i].at(1.0);
            out << "sampled; r=0: [" << p0.lower << ", " << p0.upper << "], r=1: [" << p1.lower
                << ", " << p1.upper << "]\n";
        }
    }
}

bool write_file(const std::string& path, const std::string& content, std::ostream& err) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        err << "error: cannot write " << path << '\n';
        return false;
    }
    f << content;
    return static_cast<bool>(f);
}

template <typename Body>
int guarded(Body body, std::ostream& err) {
    try {
        return body();
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
    } catch (const DomainError& e) {
        err << "input error: " << e.what() << '\n';
    }
    return kExitInputError;
}

std::optional<std::size_t> parse_count(const char* text) {
    if (text == nullptr || *text == '\0') return std::nullopt;
    char* end = nullptr;
    long long v = std::strtoll(text, &end, 10);
    if (*end != '\0' || v < 2) {
        throw InputError(std::string("FLS_GRID_POINTS: expected an integer >= 2, got \"") + text + "\"");
    }
    return static_cast<std::size_t>(v);
}

void append_fixed(std::string& line, double x) {
    if (std::abs(x) < 5e-11) x = 0.0;  // no "-0.0000000000"
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10f", x);
    line += buf;
}

}  // namespace

int exit_code(Verdict v) noexcept {
    switch (v) {
        case Verdict::Strong: return kExitStrong;
        case Verdict::Weak: return kExitWeak;
        case Verdict::Singular: return kExitSingular;
    }
    return kExitInputError;
}

std::size_t resolve_grid_points(std::optional<std::size_t> flag,
                                std::optional<std::size_t> document) {
    if (flag) {
        if (*flag < 2) throw InputError("--grid: expected an integer >= 2");
        return *flag;
    }
    if (document) return *document;
    if (auto env = parse_count(std::getenv("FLS_GRID_POINTS"))) return *env;
    return RGrid::kDefaultPoints;
}

std::string format_plot_data(const SolutionCandidate& candidate, const RGrid& grid) {
    std::string text = "r";
    for (std::size_t i = 0; i < candidate.n(); ++i) {
        text += "," + variable(i) + "_lower," + variable(i) + "_upper";
    }
    text += '\n';
    for (double r : grid.points()) {
        std::string line;
        append_fixed(line, r);
        for (const auto& u : candidate.components) {
            const auto p = u.at(r);
            line += ',';
            append_fixed(line, p.lower);
            line += ',';
            append_fixed(line, p.upper);
        }
        text += line + '\n';
    }
    return text;
}

int cmd_solve(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(
        [&] {
            const auto [doc, grid] = load(opts);
            const auto report = classify(doc.system, grid, classify_options(opts));
            print_header(report, out);
            std::optional<ResidualReport> res;
            if (report.details) {
                const auto& d = *report.details;
                res = residual(doc.system, d.candidate, grid);
                print_solution(d.candidate, out);
                print_findings(d, out);
                out << "residual: " << res->max_residual << " (tolerance " << res->tolerance << ") "
                    << (res->pass ? "pass" : "FAIL") << '\n';
            } else {
                print_singular(report, out);
            }
            if (opts.output_path) {
                auto text = result_document(doc.system, report, res).dump(2) + "\n";
                if (!write_file(*opts.output_path, text, err)) return kExitInputError;
            }
            return exit_code(report.verdict);
        },
        err);
}

int cmd_classify(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(
        [&] {
            const auto [doc, grid] = load(opts);
            const auto report = classify(doc.system, grid, classify_options(opts));
            print_header(report, out);
            if (report.details) {
                const auto& d = *report.details;
                out << "monomial_case=" << (d.monomial.flag ? "true" : "false") << '\n';
                auto hi = d.condition.max_components();
                out << "condition vector max:";
                for (double x : hi) out << ' ' << x;
                out << '\n';
                print_findings(d, out);
            } else {
                out << "monomial_case=false\n";
                print_singular(report, out);
            }
            return exit_code(report.verdict);
        },
        err);
}

int cmd_plot_data(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(
        [&] {
            if (!opts.output_path) throw InputError("-o: plot-data needs an output path");
            const auto [doc, grid] = load(opts);
            const auto report = classify(doc.system, grid, classify_options(opts));
            print_header(report, out);
            if (!report.details) {
                print_singular(report, out);
                return exit_code(report.verdict);
            }
            if (!write_file(*opts.output_path, format_plot_data(report.details->candidate, grid), err)) {
                return kExitInputError;
            }
            out << "wrote " << grid.size() << " rows to " << *opts.output_path << '\n';
            return exit_code(report.verdict);
        },
        err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fuzzy linear system solver"};
    app.require_subcommand(1);

    CommandOptions opts;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", opts.input_path, "System document (JSON)")->required();
        sub->add_option("--grid", opts.grid_points, "Number of r-levels (>= 2)");
        sub->add_flag("--strict", opts.strict, "Require monotone solution profiles for a strong verdict");
    };

    auto* solve = app.add_subcommand("solve", "Solve and classify; write the result document");
    add_common(solve);
    solve->add_option("-o,--output", opts.output_path, "Result document path");

    auto* cls = app.add_subcommand("classify", "Classify the system as strong, weak or singular");
    add_common(cls);

    auto* plot = app.add_subcommand("plot-data", "Write per-level solution profiles as CSV");
    add_common(plot);
    plot->add_option("-o,--output", opts.output_path, "CSV output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInputError;
    }
    if (solve->parsed()) return cmd_solve(opts, out, err);
    if (cls->parsed()) return cmd_classify(opts, out, err);
    return cmd_plot_data(opts, out, err);
}

}  // namespace fls::cli
