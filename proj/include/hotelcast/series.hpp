#ifndef HOTELCAST_SERIES_HPP
#define HOTELCAST_SERIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "hotelcast/month.hpp"

namespace hotelcast {

enum class KpiKind { OCC, ADR, REVPAR };

const char* to_string(KpiKind kind);
KpiKind parse_kpi(const std::string& text);

/**
 * One city's monthly values for one KPI. The value vector covers a
 * contiguous month range starting at `start`; gaps are explicit
 * nullopt markers, never absent entries.
 */
struct KpiSeries {
    std::string city;
    KpiKind kind = KpiKind::OCC;
    MonthIndex start;
    std::vector<std::optional<double>> values;

    std::size_t size() const { return values.size(); }
    MonthIndex month_at(std::size_t i) const { return start + static_cast<int>(i); }
    MonthIndex last_month() const { return start + (static_cast<int>(values.size()) - 1); }

    std::size_t present_count() const;
    bool fully_present() const;

    /// All values as plain doubles; throws Error(INSUFFICIENT_DATA) if any are missing.
    std::vector<double> dense() const;

    /// Checks the ingestion invariants (length, finiteness, KPI value ranges).
    /// Throws Error(PARSE_ERROR) with a description on the first violation.
    void validate() const;
};

/// Convenience constructor from dense values (no missing entries).
KpiSeries make_series(std::string city, KpiKind kind, MonthIndex start,
                      std::vector<double> values);

/**
 * Per-month RevPAR accounting check for one city:
 * flags months where |revpar - (occ/100)*adr| / revpar > rel_tol.
 */
struct ConsistencyReport {
    std::vector<MonthIndex> months;
    std::vector<double> expected;  // (occ/100)*adr
    std::vector<double> reported;  // revpar as given
    std::vector<bool> flagged;

    std::size_t flag_count() const;
};

/// Requires the three series to cover identical month ranges for one city;
/// throws Error(ALIGNMENT_ERROR) otherwise.
ConsistencyReport revpar_consistency(const KpiSeries& occ, const KpiSeries& adr,
                                     const KpiSeries& revpar, double rel_tol);

} // namespace hotelcast

#endif // HOTELCAST_SERIES_HPP
