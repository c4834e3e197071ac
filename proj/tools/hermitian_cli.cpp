// hermitian_cli: census, searches, constructions and code computations over
// Hermitian surfaces, each writing one JSON report.
//
// Exit status: 0 when every check holds, 1 on usage or input errors, 2 when a
// bound is violated or a check fails (the report carries the witness).

#include "hermitian/hermitian.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace herm;

enum Exit : int { kOk = 0, kUsage = 1, kFailed = 2 };

struct RunConfig {
    int q = 0;
    int d = 0;
    std::string mode = "exhaustive";
    std::uint64_t samples = 10'000;
    std::uint64_t seed = 1;
    std::size_t workers = 0;
    std::uint64_t budget = 10'000'000;
    std::string out;
    bool verbose = false;
    int alpha = -1;
    std::string form_path;
    std::string csv_path;
    std::size_t census_lines = 0;
    std::size_t census_points = 0;
};

class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

void emit(json report, const RunConfig& cfg, std::chrono::steady_clock::time_point start)
{
    report["metadata"] = {{"wall_seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()},
                          {"workers", worker_count(cfg.workers)}};
    const std::string text = report.dump(2) + "\n";
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(cfg.out);
    if (!os) throw usage_error("cannot write " + cfg.out);
    os << text;
}

json verdict_block(const TheoremCheck& c, bool verbose)
{
    json j;
    j["stats"] = to_json(c.stats, verbose);
    j["bounds"] = to_json(c.bounds);
    j["structural_violations"] = c.structural;
    j["ok"] = c.ok();
    return j;
}

int cmd_verify_counts(const RunConfig& cfg, json& report)
{
    const Surface s = Surface::canonical(Field::build(cfg.q));
    CensusOptions opt;
    opt.max_lines = cfg.census_lines;
    opt.max_points = cfg.census_points;
    const auto census = run_census(s, opt);
    report = to_json(census);
    return census.passed() ? kOk : kFailed;
}

int cmd_search(const RunConfig& cfg, json& report)
{
    const Surface s = Surface::canonical(Field::build(cfg.q));
    SearchResult r;
    if (cfg.mode == "exhaustive") {
        SearchOptions opt;
        opt.workers = cfg.workers;
        opt.budget = cfg.budget;
        opt.progress = cfg.verbose;
        try {
            r = exhaustive_search(s, cfg.d, opt);
        } catch (const budget_error& e) {
            throw usage_error(std::string(e.what()) + " (--mode random)");
        }
    } else {
        r = random_search(s, cfg.d, cfg.samples, cfg.seed, cfg.mode == "random" ? SearchMode::random : SearchMode::structured);
    }
    report = to_json(r);
    return r.falsification ? kFailed : kOk;
}

int cmd_extremal(const RunConfig& cfg, json& report)
{
    const Surface s = Surface::canonical(Field::build(cfg.q));
    const Form f = build_extremal_pencil(s, cfg.d);
    const auto c = check_theorems(f, s);
    const auto expected = bounds::sorensen(cfg.q, cfg.d);
    report["q"] = cfg.q;
    report["d"] = cfg.d;
    report["form"] = to_json(f);
    report["expected_points"] = expected;
    report.update(verdict_block(c, cfg.verbose));
    const bool attained = c.bounds.observed == expected && c.bounds.extremal_pencil == true;
    report["attained"] = attained;
    return c.ok() && attained ? kOk : kFailed;
}

int cmd_grid(const RunConfig& cfg, json& report)
{
    const auto field = Field::build(cfg.q);
    const Surface s = Surface::canonical(field);
    Elem alpha;
    if (cfg.alpha >= 0) {
        if (cfg.alpha >= field->order()) throw usage_error("--alpha is not an element index of GF(q^2)");
        alpha = Elem(static_cast<std::uint16_t>(cfg.alpha));
    } else {
        for (auto x : field->subfield_elements())
            if (!x.is_zero() && x != kOne) {
                alpha = x;
                break;
            }
    }
    const Form f = build_grid_example(s, alpha);
    const auto c = check_theorems(f, s);
    const std::int64_t q = cfg.q;
    const std::int64_t expected = bounds::sorensen(q, q + 1);
    report["q"] = cfg.q;
    report["alpha"] = alpha.index;
    report["form"] = to_json(f);
    report["expected_points"] = expected;
    report["expected_jf"] = (q + 1) * (q + 1);
    report.update(verdict_block(c, cfg.verbose));
    const bool matches = c.bounds.observed == expected && static_cast<std::int64_t>(c.stats.jf.size()) == (q + 1) * (q + 1) &&
                         !c.stats.contains_tangent_plane;
    report["matches"] = matches;
    return c.ok() && matches ? kOk : kFailed;
}

int cmd_code(const RunConfig& cfg, json& report)
{
    const Surface s = Surface::canonical(Field::build(cfg.q));
    const auto code = build_code(s, cfg.d);
    std::optional<WeightEnumeration> w;
    try {
        w = min_distance_enumerate(s.field(), code, cfg.budget, cfg.workers);
    } catch (const budget_error&) {
    }
    std::optional<std::size_t> geometric;
    if (cfg.d <= cfg.q + 1) geometric = min_distance_geometric(cfg.q, cfg.d);
    report = code_json(code, w ? std::optional<std::size_t>(w->min_distance) : std::nullopt, geometric);
    if (w) {
        json dist = json::array();
        for (std::size_t i = 0; i < w->distribution.size(); ++i)
            if (w->distribution[i] != 0) dist.push_back(json::array({i, w->distribution[i]}));
        report["weight_distribution"] = dist;
    } else {
        report["weight_distribution"] = nullptr;
    }
    if (!cfg.csv_path.empty()) {
        if (!w) throw usage_error("weight distribution exceeds the enumeration budget; no CSV written");
        std::ofstream os(cfg.csv_path);
        if (!os) throw usage_error("cannot write " + cfg.csv_path);
        os << "weight,count\n";
        for (std::size_t i = 0; i < w->distribution.size(); ++i)
            if (w->distribution[i] != 0) os << i << ',' << w->distribution[i] << '\n';
    }
    return w && geometric && w->min_distance != *geometric ? kFailed : kOk;
}

int cmd_check(const RunConfig& cfg, json& report)
{
    std::ifstream is(cfg.form_path);
    if (!is) throw usage_error("cannot read " + cfg.form_path);
    json j;
    try {
        j = json::parse(is);
    } catch (const json::exception& e) {
        throw form_error(std::string("form file is not JSON: ") + e.what());
    }
    const auto file = parse_form_file(j);
    if (cfg.q != 0 && cfg.q != file.q) throw usage_error("--q does not match the form file");
    const Surface s = Surface::canonical(Field::build(file.q));
    report["q"] = file.q;
    report["d"] = file.form.degree();
    report["form"] = to_json(file.form);
    const auto stats = intersection_stats(file.form, s);
    if (stats.v2_component) {
        report["stats"] = to_json(stats, cfg.verbose);
        report["bounds"] = nullptr;
        report["structural_violations"] = structural_violations(stats, s);
        report["ok"] = report["structural_violations"].empty();
        report["note"] = "the Hermitian surface is a component of V(F); the bounds do not apply";
        return report["ok"] ? kOk : kFailed;
    }
    const auto c = check_theorems(file.form, s);
    report.update(verdict_block(c, cfg.verbose));
    return c.ok() ? kOk : kFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hermitian surface intersections: counts, searches, constructions and codes"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--q", cfg.q, "q, a prime power; the field is GF(q^2)")->required();
        sub->add_option("--out", cfg.out, "write the JSON report here instead of stdout");
        sub->add_flag("--verbose", cfg.verbose, "include point lists and progress output");
    };

    auto* verify = app.add_subcommand("verify-counts", "census of points, generators, plane sections, lines, books and tangent planes");
    common(verify);
    verify->add_option("--lines", cfg.census_lines, "examine at most this many lines (0 = all)");
    verify->add_option("--points", cfg.census_points, "tangent-plane census on at most this many points (0 = all)");

    auto* search = app.add_subcommand("search", "maximize the intersection size over degree-d forms");
    common(search);
    search->add_option("--d", cfg.d, "form degree, 1..q+1")->required();
    search->add_option("--mode", cfg.mode, "exhaustive, random or structured")
        ->check(CLI::IsMember({"exhaustive", "random", "structured"}));
    search->add_option("--samples", cfg.samples, "number of draws in random and structured mode");
    search->add_option("--seed", cfg.seed, "seed for random and structured mode");
    search->add_option("--workers", cfg.workers, "worker threads for exhaustive mode (0 = all cores)");
    search->add_option("--budget", cfg.budget, "largest number of scalar classes to enumerate");

    auto* extremal = app.add_subcommand("extremal", "product of d tangent planes through a common secant");
    common(extremal);
    extremal->add_option("--d", cfg.d, "number of planes, 1..q+1")->required();

    auto* grid = app.add_subcommand("grid", "alpha (x0^(q+1) + x1^(q+1)) + x2^(q+1) + x3^(q+1)");
    common(grid);
    grid->add_option("--alpha", cfg.alpha, "element index of alpha in GF(q) minus {0, 1}; default the smallest");

    auto* code = app.add_subcommand("code", "evaluation code of degree-d forms on the surface points");
    common(code);
    code->add_option("--d", cfg.d, "form degree")->required();
    code->add_option("--workers", cfg.workers, "worker threads for the weight enumeration (0 = all cores)");
    code->add_option("--budget", cfg.budget, "largest number of messages to enumerate");
    code->add_option("--csv", cfg.csv_path, "write the weight distribution as CSV");

    auto* check = app.add_subcommand("check", "intersection statistics and bound verdicts for a form file");
    check->add_option("--form", cfg.form_path, "form file {\"q\", \"d\", \"terms\"}")->required();
    check->add_option("--q", cfg.q, "expected q of the form file");
    check->add_option("--out", cfg.out, "write the JSON report here instead of stdout");
    check->add_flag("--verbose", cfg.verbose, "include point lists");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        json report;
        std::string name;
        int status = kOk;
        if (verify->parsed()) {
            name = "verify-counts";
            status = cmd_verify_counts(cfg, report);
        } else if (search->parsed()) {
            name = "search";
            status = cmd_search(cfg, report);
        } else if (extremal->parsed()) {
            name = "extremal";
            status = cmd_extremal(cfg, report);
        } else if (grid->parsed()) {
            name = "grid";
            status = cmd_grid(cfg, report);
        } else if (code->parsed()) {
            name = "code";
            status = cmd_code(cfg, report);
        } else {
            name = "check";
            status = cmd_check(cfg, report);
        }
        json out = {{"command", name}};
        out.update(report);
        emit(std::move(out), cfg, start);
        if (status == kFailed) std::cerr << name << ": a check failed or a bound was violated; see the report\n";
        return status;
    } catch (const consistency_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
