#ifndef HOTELCAST_ERRORS_HPP
#define HOTELCAST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hotelcast {

/// Stable error codes carried by every domain exception.
enum class Errc {
    UNIMPUTABLE,
    SERIES_TOO_SHORT,
    DEGENERATE_SCALE,
    SPLIT_EMPTY,
    INSUFFICIENT_HISTORY,
    INSUFFICIENT_DATA,
    ALIGNMENT_ERROR,
    NUMERIC_OVERFLOW,
    INVALID_HORIZON,
    SHAPE_ERROR,
    EMPTY_INPUT,
    MAPE_UNDEFINED,
    INVALID_MAPE,
    NO_VALID_TRIAL,
    SURROGATE_SINGULAR,
    PARSE_ERROR,
    IO_ERROR,
    CONFIG_ERROR,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message),
          code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

inline const char* errc_name(Errc code) {
    switch (code) {
        case Errc::UNIMPUTABLE: return "UNIMPUTABLE";
        case Errc::SERIES_TOO_SHORT: return "SERIES_TOO_SHORT";
        case Errc::DEGENERATE_SCALE: return "DEGENERATE_SCALE";
        case Errc::SPLIT_EMPTY: return "SPLIT_EMPTY";
        case Errc::INSUFFICIENT_HISTORY: return "INSUFFICIENT_HISTORY";
        case Errc::INSUFFICIENT_DATA: return "INSUFFICIENT_DATA";
        case Errc::ALIGNMENT_ERROR: return "ALIGNMENT_ERROR";
        case Errc::NUMERIC_OVERFLOW: return "NUMERIC_OVERFLOW";
        case Errc::INVALID_HORIZON: return "INVALID_HORIZON";
        case Errc::SHAPE_ERROR: return "SHAPE_ERROR";
        case Errc::EMPTY_INPUT: return "EMPTY_INPUT";
        case Errc::MAPE_UNDEFINED: return "MAPE_UNDEFINED";
        case Errc::INVALID_MAPE: return "INVALID_MAPE";
        case Errc::NO_VALID_TRIAL: return "NO_VALID_TRIAL";
        case Errc::SURROGATE_SINGULAR: return "SURROGATE_SINGULAR";
        case Errc::PARSE_ERROR: return "PARSE_ERROR";
        case Errc::IO_ERROR: return "IO_ERROR";
        case Errc::CONFIG_ERROR: return "CONFIG_ERROR";
    }
    return "UNKNOWN";
}

} // namespace hotelcast

#endif // HOTELCAST_ERRORS_HPP
