#include "hotelcast/report.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "hotelcast/csv.hpp"
#include "hotelcast/errors.hpp"

namespace hotelcast {

const EvalRow* EvalReport::find(const std::string& city, KpiKind kind) const {
    for (const auto& row : rows)
        if (row.city == city && row.kind == kind) return &row;
    return nullptr;
}

EvalReport build_report(const std::vector<SeriesEval>& results) {
    if (results.empty())
        throw Error(Errc::EMPTY_INPUT, "report needs at least one series");

    std::vector<std::string> city_order;
    for (const auto& r : results)
        if (std::find(city_order.begin(), city_order.end(), r.city) == city_order.end())
            city_order.push_back(r.city);

    EvalReport report;
    for (const auto& city : city_order) {
        for (KpiKind kind : {KpiKind::OCC, KpiKind::ADR, KpiKind::REVPAR}) {
            for (const auto& r : results) {
                if (r.city != city || r.kind != kind) continue;
                if (report.find(city, kind))
                    throw Error(Errc::CONFIG_ERROR,
                                "duplicate evaluation pair " + city + "/" +
                                    to_string(kind));
                EvalRow row;
                row.city = city;
                row.kind = kind;
                try {
                    row.metrics.mse = mse(r.actual, r.forecast);
                    row.metrics.mae = mae(r.actual, r.forecast);
                    row.metrics.mape = mape(r.actual, r.forecast);
                } catch (const Error& e) {
                    throw Error(e.code(), city + "/" + std::string(to_string(kind)) +
                                              ": " + e.what());
                }
                row.category = categorize_mape(row.metrics.mape);
                report.rows.push_back(std::move(row));
            }
        }
    }
    return report;
}

void write_report_csv(std::ostream& out, const EvalReport& report) {
    out << "city,kpi,mse,mae,mape,category\n";
    for (const auto& row : report.rows) {
        out << csv::quote_field(row.city) << ',' << to_string(row.kind) << ','
            << csv::format_double(row.metrics.mse) << ','
            << csv::format_double(row.metrics.mae) << ','
            << csv::format_double(row.metrics.mape) << ','
            << to_string(row.category) << '\n';
    }
}

EvalReport read_report_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw Error(Errc::PARSE_ERROR, "report: empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (csv::split_record(line) !=
        std::vector<std::string>{"city", "kpi", "mse", "mae", "mape", "category"})
        throw Error(Errc::PARSE_ERROR, "report: unexpected header");

    EvalReport report;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = csv::split_record(line);
        if (fields.size() != 6)
            throw Error(Errc::PARSE_ERROR, "report: bad row '" + line + "'");
        EvalRow row;
        row.city = fields[0];
        row.kind = parse_kpi(fields[1]);
        row.metrics.mse = std::stod(fields[2]);
        row.metrics.mae = std::stod(fields[3]);
        row.metrics.mape = std::stod(fields[4]);
        row.category = parse_accuracy_category(fields[5]);
        report.rows.push_back(std::move(row));
    }
    return report;
}

void save_report_csv(const std::string& path, const EvalReport& report) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::IO_ERROR, "cannot write " + path);
    write_report_csv(out, report);
    out.flush();
    if (!out) throw Error(Errc::IO_ERROR, "write failed for " + path);
}

EvalReport load_report_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::IO_ERROR, "cannot open " + path);
    return read_report_csv(in);
}

std::string render_report_table(const EvalReport& report) {
    std::vector<std::string> city_order;
    for (const auto& row : report.rows)
        if (std::find(city_order.begin(), city_order.end(), row.city) == city_order.end())
            city_order.push_back(row.city);

    std::ostringstream out;
    out << "Forecasting accuracy by city and KPI (rolling test window)\n\n";
    out << std::left << std::setw(14) << "City";
    for (const char* kpi : {"OCC", "ADR", "RevPAR"})
        out << std::right << std::setw(10) << (std::string(kpi) + " MSE")
            << std::setw(10) << "MAPE%";
    out << "  Category (worst)\n";

    for (const auto& city : city_order) {
        out << std::left << std::setw(14) << city;
        AccuracyCategory worst = AccuracyCategory::HIGHLY_ACCURATE;
        for (KpiKind kind : {KpiKind::OCC, KpiKind::ADR, KpiKind::REVPAR}) {
            const EvalRow* row = report.find(city, kind);
            if (!row) {
                out << std::right << std::setw(10) << "-" << std::setw(10) << "-";
                continue;
            }
            out << std::right << std::fixed << std::setprecision(2) << std::setw(10)
                << row->metrics.mse << std::setw(10) << row->metrics.mape;
            if (static_cast<int>(row->category) > static_cast<int>(worst))
                worst = row->category;
        }
        out << "  " << to_string(worst) << '\n';
    }
    return out.str();
}

} // namespace hotelcast
