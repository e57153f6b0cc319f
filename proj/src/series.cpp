#include "hotelcast/series.hpp"

#include <cmath>

#include "hotelcast/errors.hpp"

namespace hotelcast {

const char* to_string(KpiKind kind) {
    switch (kind) {
        case KpiKind::OCC: return "OCC";
        case KpiKind::ADR: return "ADR";
        case KpiKind::REVPAR: return "REVPAR";
    }
    return "OCC";
}

KpiKind parse_kpi(const std::string& text) {
    if (text == "OCC") return KpiKind::OCC;
    if (text == "ADR") return KpiKind::ADR;
    if (text == "REVPAR") return KpiKind::REVPAR;
    throw Error(Errc::PARSE_ERROR, "unknown KPI '" + text + "'");
}

std::size_t KpiSeries::present_count() const {
    std::size_t n = 0;
    for (const auto& v : values)
        if (v.has_value()) ++n;
    return n;
}

bool KpiSeries::fully_present() const { return present_count() == values.size(); }

std::vector<double> KpiSeries::dense() const {
    std::vector<double> out;
    out.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!values[i].has_value())
            throw Error(Errc::INSUFFICIENT_DATA,
                        city + "/" + to_string(kind) + " missing value at " +
                            to_string(month_at(i)));
        out.push_back(*values[i]);
    }
    return out;
}

void KpiSeries::validate() const {
    if (values.empty())
        throw Error(Errc::PARSE_ERROR, city + "/" + to_string(kind) + ": empty series");
    if (!start.valid())
        throw Error(Errc::PARSE_ERROR, city + ": invalid start month");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!values[i].has_value()) continue;
        double v = *values[i];
        const std::string where =
            city + "/" + to_string(kind) + " at " + to_string(month_at(i));
        if (!std::isfinite(v))
            throw Error(Errc::PARSE_ERROR, "non-finite value in " + where);
        if (kind == KpiKind::OCC) {
            if (v <= 0.0 || v > 100.0)
                throw Error(Errc::PARSE_ERROR,
                            "OCC outside (0, 100] in " + where);
        } else if (v <= 0.0) {
            throw Error(Errc::PARSE_ERROR, "non-positive value in " + where);
        }
    }
}

KpiSeries make_series(std::string city, KpiKind kind, MonthIndex start,
                      std::vector<double> values) {
    KpiSeries s;
    s.city = std::move(city);
    s.kind = kind;
    s.start = start;
    s.values.reserve(values.size());
    for (double v : values) s.values.emplace_back(v);
    return s;
}

std::size_t ConsistencyReport::flag_count() const {
    std::size_t n = 0;
    for (bool f : flagged)
        if (f) ++n;
    return n;
}

ConsistencyReport revpar_consistency(const KpiSeries& occ, const KpiSeries& adr,
                                     const KpiSeries& revpar, double rel_tol) {
    if (occ.start != adr.start || occ.start != revpar.start ||
        occ.size() != adr.size() || occ.size() != revpar.size())
        throw Error(Errc::ALIGNMENT_ERROR,
                    occ.city + ": OCC/ADR/RevPAR month ranges differ");

    ConsistencyReport report;
    for (std::size_t i = 0; i < occ.size(); ++i) {
        if (!occ.values[i] || !adr.values[i] || !revpar.values[i]) continue;
        double expected = (*occ.values[i] / 100.0) * (*adr.values[i]);
        double reported = *revpar.values[i];
        report.months.push_back(occ.month_at(i));
        report.expected.push_back(expected);
        report.reported.push_back(reported);
        report.flagged.push_back(std::abs(reported - expected) / reported > rel_tol);
    }
    return report;
}

} // namespace hotelcast
