#include "hotelcast/month.hpp"

#include <cctype>
#include <cstdio>

#include "hotelcast/errors.hpp"

namespace hotelcast {

std::string to_string(const MonthIndex& m) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d", m.year, m.month);
    return buf;
}

MonthIndex parse_month(const std::string& text) {
    if (text.size() != 7 || text[4] != '-')
        throw Error(Errc::PARSE_ERROR, "expected YYYY-MM, got '" + text + "'");
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u})
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw Error(Errc::PARSE_ERROR, "expected YYYY-MM, got '" + text + "'");
    MonthIndex m;
    m.year = std::stoi(text.substr(0, 4));
    m.month = std::stoi(text.substr(5, 2));
    if (!m.valid())
        throw Error(Errc::PARSE_ERROR, "month out of range in '" + text + "'");
    return m;
}

} // namespace hotelcast
