#ifndef HOTELCAST_RUNCONFIG_HPP
#define HOTELCAST_RUNCONFIG_HPP

#include <string>

#include "hotelcast/forecast.hpp"
#include "hotelcast/hpo.hpp"

namespace hotelcast {

/**
 * Versioned run configuration mirrored by the JSON config file.
 * Unknown keys are rejected; absent keys keep their defaults.
 * The schema is documented in the README.
 */
struct RunConfig {
    int version = 1;
    PipelineConfig pipeline;
    std::string hpo_method = "grid"; // grid | bayes
    std::size_t hpo_budget = 12;
    SearchSpace hpo_space;

    void validate() const; // throws Error(CONFIG_ERROR)
};

/// Parses the JSON text of a config file. Throws Error(CONFIG_ERROR) on
/// unknown keys, wrong types, unsupported version, or invalid values.
RunConfig parse_run_config(const std::string& json_text);

RunConfig load_run_config(const std::string& path);

/// Serializes with every key present, so an emitted file is a complete
/// schema example and reparses to an identical configuration.
std::string run_config_to_json(const RunConfig& config);

void save_run_config(const std::string& path, const RunConfig& config);

} // namespace hotelcast

#endif // HOTELCAST_RUNCONFIG_HPP
