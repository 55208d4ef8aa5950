#include "rsfade/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace rsfade {

std::string to_string(ErrorNorm norm) {
    return norm == ErrorNorm::Max ? "max" : "l2";
}

ErrorNorm parse_norm(const std::string& text) {
    if (text == "max") return ErrorNorm::Max;
    if (text == "l2") return ErrorNorm::L2;
    throw std::invalid_argument("unknown norm '" + text + "' (expected max or l2)");
}

double grid_error_norm(std::span<const double> numeric, std::span<const double> exact,
                       double h, ErrorNorm norm) {
    if (numeric.size() != exact.size())
        throw std::invalid_argument("grid_error_norm: length mismatch");
    if (norm == ErrorNorm::Max) {
        double worst = 0.0;
        for (std::size_t i = 0; i < numeric.size(); ++i)
            worst = std::max(worst, std::abs(numeric[i] - exact[i]));
        return worst;
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < numeric.size(); ++i) {
        const double d = numeric[i] - exact[i];
        acc += d * d;
    }
    return std::sqrt(h * acc);
}

void ConvergenceReport::compute_orders() {
    for (auto& group : groups) {
        for (std::size_t k = 0; k < group.rows.size(); ++k) {
            auto& row = group.rows[k];
            row.order.reset();
            if (k == 0) continue;
            const double ratio = group.rows[k - 1].error / row.error;
            const double order = std::log2(ratio);
            if (std::isfinite(order)) row.order = order;
        }
    }
}

namespace {

std::string sci6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.5E", v);
    return buf;
}

std::string order_cell(const std::optional<double>& order) {
    return order ? sci6(*order) : std::string("n/a");
}

constexpr const char* kCsvHeader = "h,tau,error,order,norm,alpha,beta,rem";

// Row label mirroring the usual 1/m table style where h is a unit
// fraction; otherwise the plain value.
std::string h_label(double h) {
    const double inv = 1.0 / h;
    const double rounded = std::round(inv);
    if (std::abs(inv - rounded) < 1e-9 * inv) {
        return "1/" + std::to_string(static_cast<long long>(rounded));
    }
    return sci6(h);
}

}  // namespace

std::string format_csv(const ConvergenceReport& report) {
    std::ostringstream out;
    out << kCsvHeader << "\n";
    const std::string norm = to_string(report.norm);
    const char* rem = report.rem ? "true" : "false";
    for (const auto& group : report.groups) {
        for (const auto& row : group.rows) {
            out << sci6(row.h) << ',' << sci6(row.tau) << ',' << sci6(row.error) << ','
                << order_cell(row.order) << ',' << norm << ',' << sci6(group.alpha) << ','
                << sci6(group.beta) << ',' << rem << "\n";
        }
    }
    return out.str();
}

std::string format_text_table(const ConvergenceReport& report) {
    std::ostringstream out;
    out << "problem: " << report.problem << "   norm: " << to_string(report.norm)
        << "   rem: " << (report.rem ? "yes" : "no") << "\n";
    if (report.groups.empty()) return out.str();

    const bool shared_ladder = std::all_of(
        report.groups.begin(), report.groups.end(), [&](const ReportGroup& g) {
            if (g.rows.size() != report.groups.front().rows.size()) return false;
            for (std::size_t k = 0; k < g.rows.size(); ++k)
                if (g.rows[k].h != report.groups.front().rows[k].h) return false;
            return true;
        });

    constexpr int kLabelWidth = 13;
    constexpr int kErrWidth = 14;
    constexpr int kOrderWidth = 8;

    auto group_title = [](const ReportGroup& g) {
        std::ostringstream t;
        t << "alpha=" << g.alpha << " beta=" << g.beta;
        return t.str();
    };

    if (shared_ladder) {
        out << std::left << std::setw(kLabelWidth) << "h";
        for (const auto& g : report.groups)
            out << std::setw(kErrWidth + kOrderWidth) << group_title(g);
        out << "\n" << std::setw(kLabelWidth) << "";
        for (std::size_t i = 0; i < report.groups.size(); ++i)
            out << std::setw(kErrWidth) << "||E||" << std::setw(kOrderWidth) << "order";
        out << "\n";
        for (std::size_t k = 0; k < report.groups.front().rows.size(); ++k) {
            out << std::setw(kLabelWidth) << h_label(report.groups.front().rows[k].h);
            for (const auto& g : report.groups) {
                const auto& row = g.rows[k];
                std::ostringstream ord;
                if (row.order) ord << std::fixed << std::setprecision(2) << *row.order;
                else ord << "n/a";
                out << std::setw(kErrWidth) << sci6(row.error)
                    << std::setw(kOrderWidth) << ord.str();
            }
            out << "\n";
        }
    } else {
        for (const auto& g : report.groups) {
            out << group_title(g) << "\n";
            out << std::left << std::setw(kLabelWidth) << "h" << std::setw(kErrWidth)
                << "||E||" << std::setw(kOrderWidth) << "order" << "\n";
            for (const auto& row : g.rows) {
                std::ostringstream ord;
                if (row.order) ord << std::fixed << std::setprecision(2) << *row.order;
                else ord << "n/a";
                out << std::setw(kLabelWidth) << h_label(row.h) << std::setw(kErrWidth)
                    << sci6(row.error) << std::setw(kOrderWidth) << ord.str() << "\n";
            }
        }
    }
    return out.str();
}

void emit_table(const ConvergenceReport& report, const std::filesystem::path& csv_path) {
    {
        std::ofstream csv(csv_path, std::ios::binary);
        if (!csv) throw std::runtime_error("cannot write " + csv_path.string());
        csv << format_csv(report);
        if (!csv) throw std::runtime_error("write failed for " + csv_path.string());
    }
    std::filesystem::path text_path = csv_path;
    text_path.replace_extension(".txt");
    std::ofstream text(text_path, std::ios::binary);
    if (!text) throw std::runtime_error("cannot write " + text_path.string());
    text << format_text_table(report);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    return fields;
}

}  // namespace

ConvergenceReport parse_report_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty CSV");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kCsvHeader)
        throw std::runtime_error("unexpected CSV header: " + line);

    ConvergenceReport report;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 8) throw std::runtime_error("malformed CSV row: " + line);

        ReportRow row;
        row.h = std::stod(fields[0]);
        row.tau = std::stod(fields[1]);
        row.error = std::stod(fields[2]);
        if (fields[3] != "n/a") row.order = std::stod(fields[3]);
        const ErrorNorm norm = parse_norm(fields[4]);
        const double alpha = std::stod(fields[5]);
        const double beta = std::stod(fields[6]);
        const bool rem = fields[7] == "true";

        if (first) {
            report.norm = norm;
            report.rem = rem;
            first = false;
        } else if (norm != report.norm || rem != report.rem) {
            throw std::runtime_error("CSV mixes norms or rem flags");
        }

        if (report.groups.empty() || report.groups.back().alpha != alpha ||
            report.groups.back().beta != beta) {
            report.groups.push_back({alpha, beta, {}});
        }
        report.groups.back().rows.push_back(row);
    }
    return report;
}

ConvergenceReport parse_report_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    return parse_report_csv(in);
}

}  // namespace rsfade
