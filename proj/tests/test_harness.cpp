#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rsfade/harness.hpp"

using namespace rsfade;

namespace {

namespace fs = std::filesystem;

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / ("rsfade_" + name);
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ProblemSpec zero_problem() {
    return {"zero",
            1.0,
            FractionalOrder::advection(0.5),
            FractionalOrder::dispersion(1.5),
            1.0,
            1.0,
            [](double) { return 0.0; },
            zero_source(),
            [](double, double) { return 0.0; }};
}

}  // namespace

TEST_CASE("error norms") {
    const std::vector<double> a = {1.0, 2.0, 3.0};
    const std::vector<double> b = {1.5, 2.0, 1.0};
    CHECK(grid_error_norm(a, b, 0.25, ErrorNorm::Max) == doctest::Approx(2.0));
    CHECK(grid_error_norm(a, b, 0.25, ErrorNorm::L2) ==
          doctest::Approx(std::sqrt(0.25 * (0.25 + 4.0))));
    CHECK(parse_norm("max") == ErrorNorm::Max);
    CHECK(parse_norm("l2") == ErrorNorm::L2);
    CHECK_THROWS_AS(parse_norm("sup"), std::invalid_argument);
    CHECK(to_string(ErrorNorm::L2) == "l2");
}

TEST_CASE("steps_for follows the tau = h rule") {
    CHECK(steps_for(1.0, 1.0, 16, 1.0) == 16);
    CHECK(steps_for(2.0, 1.0, 8, 1.0) == 16);
    CHECK(steps_for(1.0, 1.0, 16, 10.0) == 2);  // tau = 10 h
    CHECK(steps_for(0.001, 1.0, 4, 1.0) == 1);  // never below one step
}

TEST_CASE("zero problem reports zero errors and n/a orders") {
    RunConfig config;
    config.ladder = {8, 16};
    const ProblemSpec problems[] = {zero_problem()};
    const ConvergenceReport report = run_convergence(config, problems);
    REQUIRE(report.groups.size() == 1);
    for (const auto& row : report.groups.front().rows) {
        CHECK(row.error == 0.0);
        CHECK_FALSE(row.order.has_value());
    }
    const std::string csv = format_csv(report);
    CHECK(csv.find(",n/a,") != std::string::npos);
}

TEST_CASE("report CSV round-trips byte for byte") {
    RunConfig config;
    config.problem = "example1";
    config.betas = {1.5, 1.2};
    config.ladder = {8, 16, 32};
    const ConvergenceReport report = run_convergence(config);

    const std::string csv = format_csv(report);
    std::istringstream in(csv);
    const ConvergenceReport parsed = parse_report_csv(in);
    CHECK(format_csv(parsed) == csv);

    // groups come back sorted by (alpha, beta)
    REQUIRE(parsed.groups.size() == 2);
    CHECK(parsed.groups[0].beta == doctest::Approx(1.2));
    CHECK(parsed.groups[1].beta == doctest::Approx(1.5));
}

TEST_CASE("order column is recomputable from the error column") {
    RunConfig config;
    config.problem = "example1";
    config.betas = {1.8};
    config.ladder = {8, 16, 32};
    const ConvergenceReport report = run_convergence(config);
    for (const auto& group : report.groups) {
        for (std::size_t k = 1; k < group.rows.size(); ++k) {
            REQUIRE(group.rows[k].order.has_value());
            const double want =
                std::log2(group.rows[k - 1].error / group.rows[k].error);
            CHECK(*group.rows[k].order == want);
            CHECK(*group.rows[k].order > 1.9);
            CHECK(*group.rows[k].order < 2.2);
        }
        CHECK_FALSE(group.rows[0].order.has_value());
    }

    // the relation survives the 6-digit CSV round trip
    std::istringstream in(format_csv(report));
    const ConvergenceReport parsed = parse_report_csv(in);
    for (const auto& group : parsed.groups) {
        for (std::size_t k = 1; k < group.rows.size(); ++k) {
            const double recomputed =
                std::log2(group.rows[k - 1].error / group.rows[k].error);
            CHECK(*group.rows[k].order == doctest::Approx(recomputed).epsilon(1e-4));
        }
    }
}

TEST_CASE("ladder runs are deterministic across thread counts") {
    RunConfig config;
    config.problem = "example2";
    config.alphas = {0.3, 0.7};
    config.betas = {1.4, 1.9};
    config.ladder = {8, 16};

    config.threads = 1;
    const std::string serial = format_csv(run_convergence(config));
    config.threads = 4;
    const std::string parallel = format_csv(run_convergence(config));
    CHECK(serial == parallel);
}

TEST_CASE("emit_table writes CSV plus a text twin") {
    RunConfig config;
    config.problem = "example1";
    config.betas = {1.5};
    config.ladder = {8, 16};
    const ConvergenceReport report = run_convergence(config);

    const fs::path csv_path = temp_file("table.csv");
    emit_table(report, csv_path);
    const std::string csv = slurp(csv_path);
    CHECK(csv.rfind("h,tau,error,order,norm,alpha,beta,rem\n", 0) == 0);
    CHECK(csv.find("\r") == std::string::npos);

    const ConvergenceReport parsed = parse_report_csv(csv_path);
    CHECK(format_csv(parsed) == csv);

    fs::path text_path = csv_path;
    text_path.replace_extension(".txt");
    const std::string text = slurp(text_path);
    CHECK(text.find("problem: example1") != std::string::npos);
    CHECK(text.find("1/16") != std::string::npos);

    fs::remove(csv_path);
    fs::remove(text_path);
}

TEST_CASE("run_convergence refuses problems without an exact solution") {
    const fs::path problem_path = temp_file("problem.json");
    {
        std::ofstream out(problem_path);
        out << R"({"L": 1.0, "alpha": 0.5, "beta": 1.5, "K_alpha": 1.0, "K_beta": 1.0,
                   "psi_poly": [0.0, 1.0, -1.0]})";  // x - x^2
    }
    RunConfig config;
    config.problem = "file:" + problem_path.string();
    config.ladder = {8, 16};
    CHECK_THROWS_AS(run_convergence(config), std::invalid_argument);

    // the loaded problem itself is usable for plain solves
    const ProblemSpec p = make_problem(config.problem, 0.0, 0.0);
    CHECK(p.initial(0.5) == doctest::Approx(0.25));
    CHECK_FALSE(p.has_exact());
    fs::remove(problem_path);
}

TEST_CASE("custom problems must respect the boundary conditions") {
    const fs::path problem_path = temp_file("bad_problem.json");
    {
        std::ofstream out(problem_path);
        out << R"({"L": 1.0, "alpha": 0.5, "beta": 1.5, "K_alpha": 1.0, "K_beta": 1.0,
                   "psi_poly": [1.0]})";  // psi(0) = 1
    }
    CHECK_THROWS_AS(load_problem_file(problem_path), std::invalid_argument);
    fs::remove(problem_path);
}

TEST_CASE("config files load and reject unknown keys") {
    const fs::path config_path = temp_file("config.json");
    {
        std::ofstream out(config_path);
        out << R"({"problem": "example2", "alpha": [0.5], "beta": [1.2, 1.8],
                   "ladder": [8, 16, 32], "T": 0.5, "norm": "l2", "rem": true,
                   "solver": "cg", "cg_tol": 1e-11, "threads": 2, "out": "t.csv"})";
    }
    const RunConfig config = load_config(config_path);
    CHECK(config.problem == "example2");
    CHECK(config.alphas == std::vector<double>{0.5});
    CHECK(config.betas == std::vector<double>{1.2, 1.8});
    CHECK(config.ladder == std::vector<std::size_t>{8, 16, 32});
    CHECK(config.final_time == 0.5);
    CHECK(config.norm == ErrorNorm::L2);
    CHECK(config.rem);
    CHECK(config.solver.kind == SolverKind::ConjugateGradient);
    CHECK(config.solver.cg_tol == 1e-11);
    CHECK(config.threads == 2);
    CHECK(config.out == "t.csv");

    {
        std::ofstream out(config_path);
        out << R"({"problme": "example2"})";
    }
    CHECK_THROWS(load_config(config_path));
    fs::remove(config_path);
}

TEST_CASE("config validation") {
    RunConfig config;
    config.ladder = {};
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config.ladder = {16, 8};
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config.ladder = {8, 16};
    config.final_time = -1.0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
}

TEST_CASE("emit_profile writes numeric and exact columns") {
    const ProblemSpec problem = example1(1.5);
    const Grid grid(1.0, 8, 1.0, 8);
    const fs::path path = temp_file("profile.csv");
    const std::vector<double> times = {0.5, 1.0};
    emit_profile(problem, grid, times, SolverChoice{}, path);

    const std::string text = slurp(path);
    std::istringstream in(text);
    std::string header;
    std::getline(in, header);
    CHECK(header == "x,u(t=0.5),exact(t=0.5),u(t=1),exact(t=1)");
    std::size_t rows = 0;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == grid.subintervals + 1);
    fs::remove(path);
}

TEST_CASE("emit_profile rejects off-grid times") {
    const ProblemSpec problem = example1(1.5);
    const Grid grid(1.0, 8, 1.0, 8);
    const fs::path path = temp_file("profile_bad.csv");

    CHECK_THROWS_AS(emit_profile(problem, grid, std::vector<double>{}, SolverChoice{}, path),
                    std::invalid_argument);
    try {
        emit_profile(problem, grid, std::vector<double>{0.3}, SolverChoice{}, path);
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        const std::string what = e.what();
        CHECK(what.find("0.25") != std::string::npos);
        CHECK(what.find("0.375") != std::string::npos);
    }
}

TEST_CASE("homogeneous profiles decay in time") {
    // amplitude of the dissipative evolution shrinks between snapshots
    const ProblemSpec problem = example3(0.4, 1.6);
    const Grid grid(problem.length, 40, 8.0, 800);
    const fs::path path = temp_file("decay.csv");
    emit_profile(problem, grid, std::vector<double>{1.0, 2.0, 4.0, 8.0}, SolverChoice{},
                 path);

    std::ifstream in(path);
    REQUIRE(in);
    std::string line;
    std::getline(in, line);  // header
    std::vector<double> peak(4, 0.0);
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string cell;
        std::getline(row, cell, ',');  // x
        for (int k = 0; k < 4; ++k) {
            std::getline(row, cell, ',');  // numeric
            peak[k] = std::max(peak[k], std::abs(std::stod(cell)));
            std::getline(row, cell, ',');  // exact
        }
    }
    CHECK(peak[0] > peak[1]);
    CHECK(peak[1] > peak[2]);
    CHECK(peak[2] > peak[3]);
    fs::remove(path);
}
