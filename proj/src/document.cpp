#include "fls/document.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace fls {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw InputError(where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(where, std::string("missing field \"") + key + "\"");
    return *it;
}

double number(const json& v, const std::string& where) {
    if (!v.is_number()) fail(where, "expected a number");
    double x = v.get<double>();
    if (!std::isfinite(x)) fail(where, "expected a finite number");
    return x;
}

std::vector<double> numbers(const json& v, const std::string& where) {
    if (!v.is_array()) fail(where, "expected an array of numbers");
    std::vector<double> out;
    out.reserve(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        out.push_back(number(v[k], where + "[" + std::to_string(k) + "]"));
    }
    return out;
}

FuzzyNumber parse_entry(const json& e, const std::string& where) {
    if (!e.is_object()) fail(where, "expected an object");
    const json& type = field(e, "type", where);
    if (!type.is_string()) fail(where + ".type", "expected a string");
    const auto kind = type.get<std::string>();
    try {
        if (kind == "crisp") {
            return FuzzyNumber::crisp(number(field(e, "a", where), where + ".a"));
        }
        if (kind == "triangular") {
            return FuzzyNumber::triangular(number(field(e, "a", where), where + ".a"),
                                           number(field(e, "c", where), where + ".c"),
                                           number(field(e, "b", where), where + ".b"));
        }
        if (kind == "sampled") {
            auto grid = numbers(field(e, "grid", where), where + ".grid");
            auto lower = numbers(field(e, "lower", where), where + ".lower");
            auto upper = numbers(field(e, "upper", where), where + ".upper");
            RGrid g = [&] {
                try {
                    return RGrid(std::move(grid));
                } catch (const DomainError& err) {
                    fail(where + ".grid", err.what());
                }
            }();
            if (lower.size() != g.size()) fail(where + ".lower", "length differs from grid");
            if (upper.size() != g.size()) fail(where + ".upper", "length differs from grid");
            return FuzzyNumber::sampled(std::move(g), std::move(lower), std::move(upper));
        }
    } catch (const DomainError& err) {
        fail(where, err.what());
    }
    fail(where + ".type", "unknown fuzzy number type \"" + kind + "\"");
}

json grid_json(const RGrid& g) {
    return json(std::vector<double>(g.points().begin(), g.points().end()));
}

}  // namespace

SystemDocument parse_system_document(const json& doc) {
    if (!doc.is_object()) fail("document", "expected a JSON object");

    const json& n_field = field(doc, "n", "document");
    if (!n_field.is_number_integer() || n_field.get<long long>() < 1) {
        fail("n", "expected a positive integer");
    }
    const auto n = n_field.get<std::size_t>();

    const json& rows = field(doc, "matrix", "document");
    if (!rows.is_array() || rows.size() != n) {
        fail("matrix", "expected " + std::to_string(n) + " rows");
    }
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string where = "matrix[" + std::to_string(i) + "]";
        auto row = numbers(rows[i], where);
        if (row.size() != n) fail(where, "expected " + std::to_string(n) + " entries");
        for (std::size_t j = 0; j < n; ++j) a(i, j) = row[j];
    }

    const json& rhs_field = field(doc, "rhs", "document");
    if (!rhs_field.is_array() || rhs_field.size() != n) {
        fail("rhs", "expected " + std::to_string(n) + " entries");
    }
    std::vector<FuzzyNumber> rhs;
    rhs.reserve(n);
    const auto check_grid = RGrid::uniform();
    for (std::size_t i = 0; i < n; ++i) {
        const std::string where = "rhs[" + std::to_string(i) + "]";
        rhs.push_back(parse_entry(rhs_field[i], where));
        auto validity = is_valid_fuzzy(rhs.back(), check_grid);
        if (!validity) fail(where, "not a fuzzy number: " + describe(validity.violations.front()));
    }

    std::optional<std::size_t> grid_points;
    if (auto it = doc.find("grid_points"); it != doc.end()) {
        if (!it->is_number_integer() || it->get<long long>() < 2) {
            fail("grid_points", "expected an integer >= 2");
        }
        grid_points = it->get<std::size_t>();
    }

    try {
        return SystemDocument{FuzzySystem(CrispMatrix(std::move(a)), std::move(rhs)), grid_points};
    } catch (const DomainError& err) {
        fail("document", err.what());
    }
}

SystemDocument parse_system_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        fail("document", std::string("invalid JSON: ") + err.what());
    }
    return parse_system_document(doc);
}

SystemDocument load_system_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(path, "cannot open input file");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_system_document(text.str());
}

json to_json(const FuzzyNumber& u) {
    return std::visit(
        [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Crisp>) {
                return {{"type", "crisp"}, {"a", v.a}};
            } else if constexpr (std::is_same_v<T, Triangular>) {
                return {{"type", "triangular"}, {"a", v.a}, {"c", v.c}, {"b", v.b}};
            } else {
                return {{"type", "sampled"},
                        {"grid", grid_json(v.grid)},
                        {"lower", v.lower},
                        {"upper", v.upper}};
            }
        },
        u.representation());
}

json to_json(const SystemDocument& doc) {
    const auto& sys = doc.system;
    json rows = json::array();
    for (std::size_t i = 0; i < sys.n(); ++i) {
        auto row = sys.coefficients().matrix().row(i);
        rows.push_back(std::vector<double>(row.begin(), row.end()));
    }
    json rhs = json::array();
    for (const auto& u : sys.rhs()) rhs.push_back(to_json(u));
    json out = {{"n", sys.n()}, {"matrix", rows}, {"rhs", rhs}};
    if (doc.grid_points) out["grid_points"] = *doc.grid_points;
    return out;
}

json result_document(const FuzzySystem& sys, const ClassificationReport& report,
                     const std::optional<ResidualReport>& residual) {
    const auto& ns = report.nonsingularity;
    json out = {
        {"verdict", std::string(to_string(report.verdict))},
        {"n", sys.n()},
        {"nonsingular", {{"A", ns.a_ok}, {"B_plus_C", ns.sum_ok}, {"S", ns.embedding_ok}}},
    };
    if (!report.details) return out;

    const auto& d = *report.details;
    out["monomial_case"] = d.monomial.flag;
    out["fuzzy_components"] = d.definition1_violations.empty();

    json solution = json::array();
    for (std::size_t i = 0; i < d.candidate.n(); ++i) {
        json entry = to_json(d.candidate.components[i]);
        entry["variable"] = "x" + std::to_string(i + 1);
        solution.push_back(std::move(entry));
    }
    out["solution"] = std::move(solution);
    out["condition_vector"] = {{"max", d.condition.max_components()},
                               {"min", d.condition.min_components()},
                               {"holds", d.condition.holds}};

    json violating = json::array();
    for (const auto& v : d.violating_variables) {
        violating.push_back({{"variable", "x" + std::to_string(v.variable + 1)},
                             {"r", v.witness_r},
                             {"lower", v.lower},
                             {"upper", v.upper}});
    }
    out["violating_variables"] = std::move(violating);

    json monotonicity = json::array();
    for (const auto& c : d.definition1_violations) {
        json findings = json::array();
        for (const auto& v : c.report.violations) findings.push_back(describe(v));
        monotonicity.push_back(
            {{"variable", "x" + std::to_string(c.variable + 1)}, {"findings", std::move(findings)}});
    }
    out["profile_violations"] = std::move(monotonicity);

    if (residual) {
        json per_eq = json::array();
        for (const auto& e : residual->equations) per_eq.push_back(e.worst());
        out["residual"] = {{"max", residual->max_residual},
                           {"tolerance", residual->tolerance},
                           {"pass", residual->pass},
                           {"per_equation", std::move(per_eq)}};
    }
    return out;
}

}  // namespace fls
