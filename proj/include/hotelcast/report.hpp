#ifndef HOTELCAST_REPORT_HPP
#define HOTELCAST_REPORT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "hotelcast/metrics.hpp"
#include "hotelcast/series.hpp"

namespace hotelcast {

/// One (city, KPI) pair of aligned test actuals and forecasts.
struct SeriesEval {
    std::string city;
    KpiKind kind = KpiKind::OCC;
    std::vector<double> actual;
    std::vector<double> forecast;
};

struct EvalRow {
    std::string city;
    KpiKind kind = KpiKind::OCC;
    EvalMetrics metrics;
    AccuracyCategory category = AccuracyCategory::HIGHLY_ACCURATE;
};

/**
 * Cross-city accuracy grid: one row per (city, KPI), cities in first-seen
 * order, KPIs ordered OCC, ADR, REVPAR within a city.
 */
struct EvalReport {
    std::vector<EvalRow> rows;

    const EvalRow* find(const std::string& city, KpiKind kind) const;
};

/// Computes MSE/MAE/MAPE per pair and attaches the accuracy category.
/// Metric errors are rethrown annotated with the offending (city, kpi).
EvalReport build_report(const std::vector<SeriesEval>& results);

/// CSV rendering: city,kpi,mse,mae,mape,category — reparses to an
/// identical report.
void write_report_csv(std::ostream& out, const EvalReport& report);
EvalReport read_report_csv(std::istream& in);
void save_report_csv(const std::string& path, const EvalReport& report);
EvalReport load_report_csv(const std::string& path);

/// Fixed-width text table, one city per row group, KPI columns across.
std::string render_report_table(const EvalReport& report);

} // namespace hotelcast

#endif // HOTELCAST_REPORT_HPP
