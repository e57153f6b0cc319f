#include "hotelcast/csv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "hotelcast/errors.hpp"

namespace hotelcast {
namespace csv {

std::string quote_field(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        out += c;
        if (c == '"') out += '"';
    }
    out += '"';
    return out;
}

std::vector<std::string> split_record(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    bool in_quotes = false;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                current += c;
            }
        } else if (c == '"') {
            in_quotes = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
        ++i;
    }
    if (in_quotes)
        throw Error(Errc::PARSE_ERROR, "unbalanced quote in record: " + line);
    fields.push_back(std::move(current));
    return fields;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace csv

namespace {

struct RawRow {
    MonthIndex month;
    std::optional<double> value;
    std::size_t line_no;
};

std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

double parse_value_field(const std::string& text, const std::string& context) {
    try {
        std::size_t pos = 0;
        double v = std::stod(text, &pos);
        if (pos != text.size())
            throw Error(Errc::PARSE_ERROR, "trailing characters in value " + context);
        return v;
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error(Errc::PARSE_ERROR, "bad numeric value '" + text + "' " + context);
    }
}

} // namespace

std::vector<KpiSeries> read_dataset_csv(std::istream& in, const std::string& source_name) {
    std::string line;
    if (!std::getline(in, line))
        throw Error(Errc::PARSE_ERROR, source_name + ": empty file");
    if (csv::split_record(strip_cr(line)) !=
        std::vector<std::string>{"city", "kpi", "month", "value"})
        throw Error(Errc::PARSE_ERROR,
                    source_name + ": expected header 'city,kpi,month,value'");

    // (city, kpi) -> rows; city order of first appearance is preserved below
    std::map<std::pair<std::string, KpiKind>, std::vector<RawRow>> groups;
    std::vector<std::pair<std::string, KpiKind>> order;

    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        const std::string where =
            "(" + source_name + " line " + std::to_string(line_no) + ")";
        auto fields = csv::split_record(line);
        if (fields.size() != 4)
            throw Error(Errc::PARSE_ERROR,
                        "expected 4 fields, got " + std::to_string(fields.size()) +
                            " " + where);
        std::string city = fields[0];
        KpiKind kind;
        MonthIndex month;
        try {
            kind = parse_kpi(fields[1]);
            month = parse_month(fields[2]);
        } catch (const Error& e) {
            throw Error(e.code(), std::string(e.what()) + " " + where);
        }
        RawRow row;
        row.month = month;
        row.line_no = line_no;
        if (!fields[3].empty())
            row.value = parse_value_field(
                fields[3], "for " + city + "/" + fields[1] + " " + where);

        auto key = std::make_pair(city, kind);
        if (groups.find(key) == groups.end()) order.push_back(key);
        groups[key].push_back(row);
    }
    if (groups.empty())
        throw Error(Errc::PARSE_ERROR, source_name + ": no data rows");

    std::vector<KpiSeries> result;
    for (const auto& key : order) {
        auto rows = groups[key];
        std::sort(rows.begin(), rows.end(),
                  [](const RawRow& a, const RawRow& b) { return a.month < b.month; });
        const std::string label = key.first + "/" + to_string(key.second);
        for (std::size_t i = 1; i < rows.size(); ++i) {
            int gap = rows[i].month - rows[i - 1].month;
            if (gap == 0)
                throw Error(Errc::PARSE_ERROR,
                            label + ": duplicate month " + to_string(rows[i].month) +
                                " (" + source_name + " line " +
                                std::to_string(rows[i].line_no) + ")");
            if (gap != 1)
                throw Error(Errc::PARSE_ERROR,
                            label + ": months not contiguous between " +
                                to_string(rows[i - 1].month) + " and " +
                                to_string(rows[i].month) + " (" + source_name + ")");
        }
        KpiSeries s;
        s.city = key.first;
        s.kind = key.second;
        s.start = rows.front().month;
        for (const auto& row : rows) s.values.push_back(row.value);
        s.validate();
        result.push_back(std::move(s));
    }
    return result;
}

std::vector<KpiSeries> load_dataset_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::IO_ERROR, "cannot open " + path);
    return read_dataset_csv(in, path);
}

void write_dataset_csv(std::ostream& out, const std::vector<KpiSeries>& series) {
    out << "city,kpi,month,value\n";
    for (const auto& s : series) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            out << csv::quote_field(s.city) << ',' << to_string(s.kind) << ','
                << to_string(s.month_at(i)) << ',';
            if (s.values[i].has_value()) out << csv::format_double(*s.values[i]);
            out << '\n';
        }
    }
}

void save_dataset_csv(const std::string& path, const std::vector<KpiSeries>& series) {
    std::ofstream out(path);
    if (!out)
        throw Error(Errc::IO_ERROR, "cannot write " + path);
    write_dataset_csv(out, series);
    out.flush();
    if (!out)
        throw Error(Errc::IO_ERROR, "write failed for " + path);
}

} // namespace hotelcast
