#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rsfade {

enum class ErrorNorm { Max, L2 };

std::string to_string(ErrorNorm norm);
ErrorNorm parse_norm(const std::string& text);

/// Error between a numeric and an exact field on the interior nodes.
/// Max is the pointwise maximum; L2 is the grid-weighted norm
/// sqrt(h * sum of squares).
double grid_error_norm(std::span<const double> numeric, std::span<const double> exact,
                       double h, ErrorNorm norm);

struct ReportRow {
    double h = 0.0;
    double tau = 0.0;
    double error = 0.0;
    std::optional<double> order;  // empty on the first row or when not finite
    double wall_seconds = 0.0;    // not serialized to CSV
};

struct ReportGroup {
    double alpha = 0.0;
    double beta = 0.0;
    std::vector<ReportRow> rows;
};

struct ConvergenceReport {
    std::string problem;
    ErrorNorm norm = ErrorNorm::Max;
    bool rem = false;
    std::vector<ReportGroup> groups;

    /// Fills each row's observed order from the stored errors:
    /// log2(E_{k-1} / E_k), left empty where that is not finite.
    void compute_orders();
};

/// CSV serialization with the fixed schema
///   h,tau,error,order,norm,alpha,beta,rem
/// (floats as 6-significant-digit scientific, `n/a` for missing orders,
/// LF line endings).
std::string format_csv(const ConvergenceReport& report);

/// Aligned plain-text table, one error/order column pair per group.
std::string format_text_table(const ConvergenceReport& report);

/// Writes the CSV to `csv_path` and the text table next to it with a
/// `.txt` extension.
void emit_table(const ConvergenceReport& report, const std::filesystem::path& csv_path);

ConvergenceReport parse_report_csv(std::istream& in);
ConvergenceReport parse_report_csv(const std::filesystem::path& path);

}  // namespace rsfade
