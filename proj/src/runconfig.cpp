#include "hotelcast/runconfig.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "hotelcast/errors.hpp"

namespace hotelcast {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& known,
                         const std::string& where) {
    for (const auto& [key, value] : obj.items())
        if (!known.count(key))
            throw Error(Errc::CONFIG_ERROR, "unknown key '" + key + "' in " + where);
}

template <typename T>
void read_field(const json& obj, const char* key, T& out) {
    if (!obj.contains(key)) return;
    try {
        out = obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw Error(Errc::CONFIG_ERROR, std::string("bad value for '") + key + "'");
    }
}

} // namespace

void RunConfig::validate() const {
    if (version != 1)
        throw Error(Errc::CONFIG_ERROR,
                    "unsupported config version " + std::to_string(version));
    pipeline.training.validate();
    if (!(pipeline.z_threshold > 0.0))
        throw Error(Errc::CONFIG_ERROR, "z_threshold must be positive");
    if (!(pipeline.train_fraction > 0.0 && pipeline.train_fraction < 1.0))
        throw Error(Errc::CONFIG_ERROR, "train_fraction must lie in (0, 1)");
    if (pipeline.horizons.empty())
        throw Error(Errc::CONFIG_ERROR, "horizons must be nonempty");
    for (std::size_t h : pipeline.horizons)
        if (h < 1) throw Error(Errc::CONFIG_ERROR, "horizons must be >= 1");
    if (hpo_method != "grid" && hpo_method != "bayes")
        throw Error(Errc::CONFIG_ERROR, "hpo method must be 'grid' or 'bayes'");
    hpo_space.validate();
}

RunConfig parse_run_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::exception& e) {
        throw Error(Errc::CONFIG_ERROR, std::string("config is not valid JSON: ") + e.what());
    }
    if (!root.is_object())
        throw Error(Errc::CONFIG_ERROR, "config root must be a JSON object");

    reject_unknown_keys(root,
                        {"version", "scaling", "z_threshold", "train_fraction",
                         "training", "horizons", "retrain_every", "hpo"},
                        "config root");

    RunConfig config;
    read_field(root, "version", config.version);

    std::string scaling = to_string(config.pipeline.scaling);
    read_field(root, "scaling", scaling);
    config.pipeline.scaling = parse_scaling_method(scaling);
    read_field(root, "z_threshold", config.pipeline.z_threshold);
    read_field(root, "train_fraction", config.pipeline.train_fraction);
    read_field(root, "horizons", config.pipeline.horizons);
    read_field(root, "retrain_every", config.pipeline.retrain_every);

    if (root.contains("training")) {
        const json& t = root.at("training");
        if (!t.is_object())
            throw Error(Errc::CONFIG_ERROR, "'training' must be an object");
        reject_unknown_keys(t,
                            {"lookback", "hidden_size", "epochs", "learning_rate",
                             "seed", "patience", "val_fraction", "gradient_clip"},
                            "training");
        TrainingConfig& tc = config.pipeline.training;
        read_field(t, "lookback", tc.lookback);
        read_field(t, "hidden_size", tc.hidden_size);
        read_field(t, "epochs", tc.epochs);
        read_field(t, "learning_rate", tc.learning_rate);
        read_field(t, "seed", tc.seed);
        read_field(t, "patience", tc.patience);
        read_field(t, "val_fraction", tc.val_fraction);
        read_field(t, "gradient_clip", tc.gradient_clip);
    }

    if (root.contains("hpo")) {
        const json& h = root.at("hpo");
        if (!h.is_object())
            throw Error(Errc::CONFIG_ERROR, "'hpo' must be an object");
        reject_unknown_keys(h,
                            {"method", "budget", "lookback", "hidden_size", "lr_min",
                             "lr_max", "lr_grid_points", "epochs"},
                            "hpo");
        read_field(h, "method", config.hpo_method);
        read_field(h, "budget", config.hpo_budget);
        read_field(h, "lookback", config.hpo_space.lookback);
        read_field(h, "hidden_size", config.hpo_space.hidden_size);
        read_field(h, "lr_min", config.hpo_space.lr_min);
        read_field(h, "lr_max", config.hpo_space.lr_max);
        read_field(h, "lr_grid_points", config.hpo_space.lr_grid_points);
        read_field(h, "epochs", config.hpo_space.epochs);
    }

    config.validate();
    return config;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::IO_ERROR, "cannot open config " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_run_config(buffer.str());
}

std::string run_config_to_json(const RunConfig& config) {
    json root;
    root["version"] = config.version;
    root["scaling"] = to_string(config.pipeline.scaling);
    root["z_threshold"] = config.pipeline.z_threshold;
    root["train_fraction"] = config.pipeline.train_fraction;
    root["horizons"] = config.pipeline.horizons;
    root["retrain_every"] = config.pipeline.retrain_every;

    const TrainingConfig& tc = config.pipeline.training;
    root["training"] = {
        {"lookback", tc.lookback},
        {"hidden_size", tc.hidden_size},
        {"epochs", tc.epochs},
        {"learning_rate", tc.learning_rate},
        {"seed", tc.seed},
        {"patience", tc.patience},
        {"val_fraction", tc.val_fraction},
        {"gradient_clip", tc.gradient_clip},
    };
    root["hpo"] = {
        {"method", config.hpo_method},
        {"budget", config.hpo_budget},
        {"lookback", config.hpo_space.lookback},
        {"hidden_size", config.hpo_space.hidden_size},
        {"lr_min", config.hpo_space.lr_min},
        {"lr_max", config.hpo_space.lr_max},
        {"lr_grid_points", config.hpo_space.lr_grid_points},
        {"epochs", config.hpo_space.epochs},
    };
    return root.dump(2) + "\n";
}

void save_run_config(const std::string& path, const RunConfig& config) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::IO_ERROR, "cannot write " + path);
    out << run_config_to_json(config);
    out.flush();
    if (!out) throw Error(Errc::IO_ERROR, "write failed for " + path);
}

} // namespace hotelcast
