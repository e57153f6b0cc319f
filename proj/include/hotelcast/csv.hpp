#ifndef HOTELCAST_CSV_HPP
#define HOTELCAST_CSV_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "hotelcast/series.hpp"

namespace hotelcast {
namespace csv {

/// RFC-4180-style field quoting: quotes when the field contains
/// comma, quote, or newline; embedded quotes are doubled.
std::string quote_field(const std::string& field);

/// Splits one CSV record honouring quoted fields.
/// Throws Error(PARSE_ERROR) on unbalanced quotes.
std::vector<std::string> split_record(const std::string& line);

/// Doubles formatted with enough digits to round-trip exactly.
std::string format_double(double x);

} // namespace csv

/**
 * Dataset ingestion format (UTF-8, header required):
 *   city,kpi,month,value
 * kpi in {OCC, ADR, REVPAR}; month formatted YYYY-MM; value a decimal
 * or empty (missing). Rows for one (city, kpi) must form a contiguous
 * month range after sorting.
 */
std::vector<KpiSeries> read_dataset_csv(std::istream& in, const std::string& source_name);
std::vector<KpiSeries> load_dataset_csv(const std::string& path);

void write_dataset_csv(std::ostream& out, const std::vector<KpiSeries>& series);
void save_dataset_csv(const std::string& path, const std::vector<KpiSeries>& series);

} // namespace hotelcast

#endif // HOTELCAST_CSV_HPP
