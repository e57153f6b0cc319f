#ifndef HOTELCAST_SYNTHETIC_HPP
#define HOTELCAST_SYNTHETIC_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hotelcast/series.hpp"

namespace hotelcast {

/**
 * Generator profile for one city. OCC and ADR are trended seasonal
 * sinusoids with multiplicative noise and a pandemic-style structural
 * break (linear collapse over 3 months to the shock floor, logistic
 * recovery over recovery_months); RevPAR is derived exactly as
 * (OCC/100) * ADR so the accounting identity holds by construction.
 */
struct CityProfile {
    std::string name;
    double base_occ = 75.0;        // percent
    double base_adr = 100.0;       // currency
    double occ_seasonal_amp = 5.0; // percent
    double adr_seasonal_amp = 8.0; // currency
    double annual_trend = 0.01;    // fraction per year
    MonthIndex shock_start{2020, 3};
    double occ_shock_floor = 0.5;  // fraction of baseline at the trough
    double adr_shock_floor = 0.7;
    std::size_t recovery_months = 24;
    double noise_sigma = 0.01;     // multiplicative, per month
    std::uint64_t seed = 1;

    void validate() const; // throws Error(CONFIG_ERROR)
};

struct CityDataset {
    KpiSeries occ;
    KpiSeries adr;
    KpiSeries revpar;

    std::vector<KpiSeries> as_vector() const { return {occ, adr, revpar}; }
};

/// Requires n_months >= 24; throws Error(SERIES_TOO_SHORT) otherwise.
/// Deterministic: the same profile and seed give bit-identical series.
CityDataset generate_city(const CityProfile& profile, MonthIndex start,
                          std::size_t n_months);

/// The shock multiplier for the month at `m`, exposed for direct checks.
double shock_factor(const CityProfile& profile, const MonthIndex& m);

/// Five city archetypes spanning stable, volatile, and recovery-heavy
/// markets; shock_start is March 2020 for all of them.
std::array<CityProfile, 5> default_archetypes(std::uint64_t seed);

} // namespace hotelcast

#endif // HOTELCAST_SYNTHETIC_HPP
