#ifndef HOTELCAST_MONTH_HPP
#define HOTELCAST_MONTH_HPP

#include <compare>
#include <string>

namespace hotelcast {

/**
 * Calendar month with year, totally ordered by (year, month).
 * Arithmetic wraps December into January of the next year.
 */
struct MonthIndex {
    int year = 2018;
    int month = 1; // 1..12

    auto operator<=>(const MonthIndex&) const = default;

    MonthIndex next() const { return *this + 1; }

    /// Month that is `k` months after this one (k may be negative).
    MonthIndex operator+(int k) const {
        int flat = year * 12 + (month - 1) + k;
        int y = flat / 12;
        int m = flat % 12;
        if (m < 0) { m += 12; --y; }
        return MonthIndex{y, m + 1};
    }

    /// Signed distance in months: (*this) - other.
    int operator-(const MonthIndex& other) const {
        return (year - other.year) * 12 + (month - other.month);
    }

    bool valid() const { return month >= 1 && month <= 12; }
};

/// Formats as "YYYY-MM", zero-padded.
std::string to_string(const MonthIndex& m);

/// Parses "YYYY-MM"; throws Error(PARSE_ERROR) on malformed input.
MonthIndex parse_month(const std::string& text);

} // namespace hotelcast

#endif // HOTELCAST_MONTH_HPP
