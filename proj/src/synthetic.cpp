#include "hotelcast/synthetic.hpp"

#include <algorithm>
#include <cmath>

#include "hotelcast/errors.hpp"
#include "hotelcast/rng.hpp"

namespace hotelcast {

namespace {

constexpr double kTwoPi = 6.283185307179586477;
constexpr int kCollapseMonths = 3;

double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

} // namespace

void CityProfile::validate() const {
    if (name.empty()) throw Error(Errc::CONFIG_ERROR, "profile needs a name");
    if (!(base_occ > 0.0 && base_occ <= 100.0))
        throw Error(Errc::CONFIG_ERROR, name + ": base_occ must lie in (0, 100]");
    if (!(base_adr > 0.0))
        throw Error(Errc::CONFIG_ERROR, name + ": base_adr must be positive");
    if (!(occ_shock_floor > 0.0 && occ_shock_floor < 1.0) ||
        !(adr_shock_floor > 0.0 && adr_shock_floor < 1.0))
        throw Error(Errc::CONFIG_ERROR, name + ": shock floors must lie in (0, 1)");
    if (recovery_months < 1)
        throw Error(Errc::CONFIG_ERROR, name + ": recovery_months must be >= 1");
    if (noise_sigma < 0.0)
        throw Error(Errc::CONFIG_ERROR, name + ": noise_sigma must be >= 0");
}

double shock_factor_impl(double floor, std::size_t recovery_months,
                         const MonthIndex& shock_start, const MonthIndex& m) {
    const int since = m - shock_start;
    if (since < 0) return 1.0;
    if (since < kCollapseMonths)
        return 1.0 + (floor - 1.0) * static_cast<double>(since + 1) /
                         static_cast<double>(kCollapseMonths);
    // logistic climb back toward 1 over recovery_months, starting at the floor
    const double r = static_cast<double>(recovery_months);
    const double progress = static_cast<double>(since - kCollapseMonths);
    const double z = 8.0 * (progress - r / 2.0) / r;
    return floor + (1.0 - floor) * logistic(z);
}

double shock_factor(const CityProfile& profile, const MonthIndex& m) {
    return shock_factor_impl(profile.occ_shock_floor, profile.recovery_months,
                             profile.shock_start, m);
}

CityDataset generate_city(const CityProfile& profile, MonthIndex start,
                          std::size_t n_months) {
    profile.validate();
    if (n_months < 24)
        throw Error(Errc::SERIES_TOO_SHORT,
                    profile.name + ": need >= 24 months, got " + std::to_string(n_months));

    Rng rng(profile.seed);

    std::vector<double> occ(n_months), adr(n_months), revpar(n_months);
    for (std::size_t t = 0; t < n_months; ++t) {
        const MonthIndex month = start + static_cast<int>(t);
        const double growth =
            std::pow(1.0 + profile.annual_trend, static_cast<double>(t) / 12.0);
        const double phase = std::sin(kTwoPi * static_cast<double>(t) / 12.0);

        const double occ_shock = shock_factor_impl(
            profile.occ_shock_floor, profile.recovery_months, profile.shock_start, month);
        const double adr_shock = shock_factor_impl(
            profile.adr_shock_floor, profile.recovery_months, profile.shock_start, month);

        // two gaussian draws per month, OCC first, regardless of sigma
        const double occ_noise = 1.0 + profile.noise_sigma * rng.gaussian();
        const double adr_noise = 1.0 + profile.noise_sigma * rng.gaussian();

        double o = (profile.base_occ * growth + profile.occ_seasonal_amp * phase) *
                   occ_shock * occ_noise;
        double a = (profile.base_adr * growth + profile.adr_seasonal_amp * phase) *
                   adr_shock * adr_noise;

        occ[t] = std::clamp(o, 1.0, 100.0);
        adr[t] = std::max(a, 1.0);
        revpar[t] = (occ[t] / 100.0) * adr[t];
    }

    CityDataset out;
    out.occ = make_series(profile.name, KpiKind::OCC, start, std::move(occ));
    out.adr = make_series(profile.name, KpiKind::ADR, start, std::move(adr));
    out.revpar = make_series(profile.name, KpiKind::REVPAR, start, std::move(revpar));
    out.occ.validate();
    out.adr.validate();
    out.revpar.validate();
    return out;
}

std::array<CityProfile, 5> default_archetypes(std::uint64_t seed) {
    const MonthIndex shock{2020, 3};
    std::array<CityProfile, 5> cities;

    // mature European market: low seasonality, shallow shock, steady trend
    cities[0] = CityProfile{"Manchester", 77.0, 96.0, 2.5, 4.0, 0.012, shock,
                            0.42, 0.74, 20, 0.006, seed};
    // premium tourist hub: deep shock, slow incomplete-feeling recovery
    cities[1] = CityProfile{"Amsterdam", 82.0, 168.0, 3.5, 9.0, 0.006, shock,
                            0.30, 0.55, 34, 0.010, seed + 1};
    // luxury, event-driven: deep shock but fast rebound, strong growth
    cities[2] = CityProfile{"Dubai", 79.0, 150.0, 6.0, 14.0, 0.028, shock,
                            0.21, 0.67, 16, 0.016, seed + 2};
    // tourism-dependent, high seasonality, deepest collapse, slow recovery
    cities[3] = CityProfile{"Bangkok", 78.0, 98.0, 5.5, 7.0, 0.010, shock,
                            0.22, 0.66, 38, 0.020, seed + 3};
    // emerging market: moderate base, strongest structural growth
    cities[4] = CityProfile{"Mumbai", 76.0, 122.0, 4.0, 7.0, 0.035, shock,
                            0.30, 0.47, 22, 0.012, seed + 4};

    for (const auto& c : cities) c.validate();
    return cities;
}

} // namespace hotelcast
