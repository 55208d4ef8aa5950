#include "rsfade/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace rsfade {

namespace {

using nlohmann::json;

double wall_seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<double> number_list(const json& value, const std::string& key) {
    std::vector<double> out;
    if (value.is_number()) {
        out.push_back(value.get<double>());
    } else if (value.is_array()) {
        for (const auto& v : value) out.push_back(v.get<double>());
    } else {
        throw std::runtime_error("config key '" + key + "' must be a number or an array");
    }
    return out;
}

}  // namespace

void RunConfig::validate() const {
    if (ladder.empty()) throw std::invalid_argument("config: refinement ladder is empty");
    for (std::size_t k = 1; k < ladder.size(); ++k) {
        if (ladder[k] <= ladder[k - 1])
            throw std::invalid_argument("config: ladder must be strictly increasing in m");
    }
    if (!(final_time > 0.0)) throw std::invalid_argument("config: T must be positive");
    if (!(tau_over_h > 0.0)) throw std::invalid_argument("config: tau/h must be positive");
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config " + path.string());
    json doc = json::parse(in);

    RunConfig config;
    for (const auto& [key, value] : doc.items()) {
        if (key == "problem") config.problem = value.get<std::string>();
        else if (key == "alpha") config.alphas = number_list(value, key);
        else if (key == "beta") config.betas = number_list(value, key);
        else if (key == "ladder") config.ladder = value.get<std::vector<std::size_t>>();
        else if (key == "T") config.final_time = value.get<double>();
        else if (key == "tau_over_h") config.tau_over_h = value.get<double>();
        else if (key == "norm") config.norm = parse_norm(value.get<std::string>());
        else if (key == "rem") config.rem = value.get<bool>();
        else if (key == "solver") {
            const std::string s = value.get<std::string>();
            if (s == "dense") config.solver.kind = SolverKind::DenseDirect;
            else if (s == "cg") config.solver.kind = SolverKind::ConjugateGradient;
            else throw std::runtime_error("config: unknown solver '" + s + "'");
        } else if (key == "cg_tol") config.solver.cg_tol = value.get<double>();
        else if (key == "cg_max_iter") config.solver.cg_max_iter = value.get<std::size_t>();
        else if (key == "threads") config.threads = value.get<std::size_t>();
        else if (key == "out") config.out = value.get<std::string>();
        else throw std::runtime_error("config: unknown key '" + key + "'");
    }
    return config;
}

ProblemSpec load_problem_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read problem file " + path.string());
    json doc = json::parse(in);

    const double length = doc.at("L").get<double>();
    const double alpha = doc.at("alpha").get<double>();
    const double beta = doc.at("beta").get<double>();
    const double k_alpha = doc.at("K_alpha").get<double>();
    const double k_beta = doc.at("K_beta").get<double>();
    const std::vector<double> poly = doc.at("psi_poly").get<std::vector<double>>();
    const std::string name =
        doc.contains("name") ? doc.at("name").get<std::string>() : path.stem().string();

    auto psi = [poly](double x) {
        double acc = 0.0;
        for (std::size_t k = poly.size(); k > 0; --k) acc = acc * x + poly[k - 1];
        return acc;
    };
    return {name,
            length,
            FractionalOrder::advection(alpha),
            FractionalOrder::dispersion(beta),
            k_alpha,
            k_beta,
            psi,
            zero_source(),
            SpaceTimeFunction{}};
}

ProblemSpec make_problem(const std::string& id, double alpha, double beta) {
    if (id == "example1") return example1(beta);
    if (id == "example2") return example2(alpha, beta);
    if (id == "example3") return example3(alpha, beta);
    if (id.starts_with("file:")) return load_problem_file(id.substr(5));
    throw std::invalid_argument("unknown problem '" + id +
                                "' (expected example1|example2|example3|file:<path>)");
}

std::size_t steps_for(double final_time, double length, std::size_t m, double tau_over_h) {
    const double h = length / static_cast<double>(m);
    const auto n = static_cast<long long>(std::llround(final_time / (tau_over_h * h)));
    return n < 1 ? 1 : static_cast<std::size_t>(n);
}

namespace {

struct LadderTask {
    std::size_t group;
    std::size_t row;
};

void run_tasks(std::size_t count, std::size_t threads,
               const std::function<void(std::size_t)>& body) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    const std::size_t n = std::min(threads, count);
    pool.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

namespace {

// One problem instance per parameter combination, ordered by (alpha, beta).
struct Combo {
    double alpha;
    double beta;
    ProblemSpec problem;
};

ConvergenceReport run_ladder(const RunConfig& config, std::vector<Combo> combos);

}  // namespace

ConvergenceReport run_convergence(const RunConfig& config) {
    config.validate();

    std::vector<Combo> combos;
    if (config.problem.starts_with("file:")) {
        ProblemSpec p = make_problem(config.problem, 0.5, 1.5);
        const double a = p.alpha.value();
        const double b = p.beta.value();
        combos.push_back({a, b, std::move(p)});
    } else if (config.problem == "example1") {
        if (config.betas.empty()) throw std::invalid_argument("config: beta values required");
        std::vector<double> betas = config.betas;
        std::sort(betas.begin(), betas.end());
        for (double b : betas) combos.push_back({0.0, b, example1(b)});
    } else {
        if (config.alphas.empty() || config.betas.empty())
            throw std::invalid_argument("config: alpha and beta values required");
        std::vector<double> alphas = config.alphas;
        std::vector<double> betas = config.betas;
        std::sort(alphas.begin(), alphas.end());
        std::sort(betas.begin(), betas.end());
        for (double a : alphas)
            for (double b : betas)
                combos.push_back({a, b, make_problem(config.problem, a, b)});
    }
    return run_ladder(config, std::move(combos));
}

ConvergenceReport run_convergence(const RunConfig& config,
                                  std::span<const ProblemSpec> problems) {
    config.validate();
    if (problems.empty()) throw std::invalid_argument("run_convergence: no problems given");
    std::vector<Combo> combos;
    for (const ProblemSpec& p : problems)
        combos.push_back({p.alpha.value(), p.beta.value(), p});
    std::sort(combos.begin(), combos.end(), [](const Combo& a, const Combo& b) {
        return a.alpha != b.alpha ? a.alpha < b.alpha : a.beta < b.beta;
    });
    return run_ladder(config, std::move(combos));
}

namespace {

ConvergenceReport run_ladder(const RunConfig& config, std::vector<Combo> combos) {
    for (const auto& combo : combos) {
        if (!combo.problem.has_exact()) {
            throw std::invalid_argument("problem '" + combo.problem.name +
                                        "' has no exact solution; errors cannot be measured");
        }
    }

    ConvergenceReport report;
    report.problem = combos.front().problem.name;
    report.norm = config.norm;
    report.rem = config.rem;
    report.groups.resize(combos.size());
    for (std::size_t g = 0; g < combos.size(); ++g) {
        report.groups[g].alpha = combos[g].alpha;
        report.groups[g].beta = combos[g].beta;
        report.groups[g].rows.resize(config.ladder.size());
    }

    std::vector<LadderTask> tasks;
    for (std::size_t g = 0; g < combos.size(); ++g)
        for (std::size_t r = 0; r < config.ladder.size(); ++r) tasks.push_back({g, r});

    run_tasks(tasks.size(), config.threads, [&](std::size_t idx) {
        const auto [g, r] = tasks[idx];
        const ProblemSpec& problem = combos[g].problem;
        const std::size_t m = config.ladder[r];
        const std::size_t steps =
            steps_for(config.final_time, problem.length, m, config.tau_over_h);
        const Grid grid(problem.length, m, config.final_time, steps);

        const auto start = std::chrono::steady_clock::now();
        std::vector<double> numeric;
        if (config.rem) {
            numeric = rem_solve(problem, grid, config.solver);
        } else {
            const GridSolution solution = integrate(problem, grid, config.solver, Keep::FinalOnly);
            const auto final_values = solution.final_row();
            numeric.assign(final_values.begin(), final_values.end());
        }
        const double wall = wall_seconds_since(start);

        std::vector<double> expected(grid.interior_count());
        for (std::size_t i = 0; i < expected.size(); ++i)
            expected[i] = problem.exact(grid.x(i + 1), config.final_time);

        ReportRow& row = report.groups[g].rows[r];
        row.h = grid.h();
        row.tau = grid.tau();
        row.error = grid_error_norm(numeric, expected, grid.h(), config.norm);
        row.wall_seconds = wall;
    });

    report.compute_orders();
    return report;
}

}  // namespace

void emit_profile(const ProblemSpec& problem, const Grid& grid,
                  std::span<const double> times, const SolverChoice& choice,
                  const std::filesystem::path& path) {
    if (times.empty()) throw std::invalid_argument("emit_profile: no output times given");

    const double tau = grid.tau();
    std::vector<std::size_t> steps;
    for (double t : times) {
        const double ratio = t / tau;
        const double rounded = std::round(ratio);
        if (std::abs(ratio - rounded) > 1e-9 * std::max(1.0, std::abs(ratio)) ||
            rounded < 0.0 || rounded > static_cast<double>(grid.steps)) {
            const double below = std::floor(ratio) * tau;
            const double above = std::ceil(ratio) * tau;
            std::ostringstream msg;
            msg << "time " << t << " is not on the grid; nearest grid times are "
                << std::max(0.0, below) << " and " << std::min(grid.final_time, above);
            throw std::invalid_argument(msg.str());
        }
        steps.push_back(static_cast<std::size_t>(rounded));
    }

    const GridSolution solution = integrate(problem, grid, choice, Keep::AllSteps);

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());

    auto time_label = [](double t) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%g", t);
        return std::string(buf);
    };
    out << "x";
    for (std::size_t k = 0; k < steps.size(); ++k) {
        const std::string label = time_label(grid.t(steps[k]));
        out << ",u(t=" << label << ")";
        if (problem.has_exact()) out << ",exact(t=" << label << ")";
    }
    out << "\n";

    char buf[32];
    auto cell = [&buf](double v) {
        std::snprintf(buf, sizeof(buf), "%.8E", v);
        return std::string(buf);
    };
    for (std::size_t i = 0; i <= grid.subintervals; ++i) {
        const double x = grid.x(i);
        out << cell(x);
        for (const std::size_t n : steps) {
            const bool boundary = (i == 0 || i == grid.subintervals);
            const double numeric = boundary ? 0.0 : solution.row(n)[i - 1];
            out << ',' << cell(numeric);
            if (problem.has_exact()) out << ',' << cell(problem.exact(x, grid.t(n)));
        }
        out << "\n";
    }
}

}  // namespace rsfade
