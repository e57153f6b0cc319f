#include "hotelcast/model_io.hpp"

#include <fstream>
#include <sstream>

#include "hotelcast/csv.hpp"
#include "hotelcast/errors.hpp"

namespace hotelcast {

namespace {

constexpr const char* kMagic = "hotelcast-model";
constexpr int kVersion = 1;

void expect_token(std::istream& in, const std::string& expected) {
    std::string token;
    if (!(in >> token) || token != expected)
        throw Error(Errc::PARSE_ERROR,
                    "model file: expected '" + expected + "', got '" + token + "'");
}

double read_double(std::istream& in) {
    std::string token;
    if (!(in >> token))
        throw Error(Errc::PARSE_ERROR, "model file: truncated weight data");
    try {
        std::size_t pos = 0;
        double v = std::stod(token, &pos);
        if (pos != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw Error(Errc::PARSE_ERROR, "model file: bad number '" + token + "'");
    }
}

std::size_t read_size(std::istream& in, const char* field) {
    long long v;
    if (!(in >> v) || v < 0)
        throw Error(Errc::PARSE_ERROR, std::string("model file: bad ") + field);
    return static_cast<std::size_t>(v);
}

} // namespace

void write_model(std::ostream& out, const LstmModel& model) {
    const TrainingConfig& c = model.config;
    out << kMagic << " v" << kVersion << "\n";
    out << "lookback " << c.lookback << "\n";
    out << "hidden " << c.hidden_size << "\n";
    out << "epochs " << c.epochs << "\n";
    out << "learning_rate " << csv::format_double(c.learning_rate) << "\n";
    out << "seed " << c.seed << "\n";
    out << "patience " << c.patience << "\n";
    out << "val_fraction " << csv::format_double(c.val_fraction) << "\n";
    out << "gradient_clip " << csv::format_double(c.gradient_clip) << "\n";
    out << "params " << model.weights.param_count() << "\n";
    const std::vector<double> flat = model.weights.flatten();
    for (std::size_t i = 0; i < flat.size(); ++i)
        out << csv::format_double(flat[i]) << (((i + 1) % 8 == 0) ? '\n' : ' ');
    if (flat.size() % 8 != 0) out << '\n';
}

LstmModel read_model(std::istream& in) {
    expect_token(in, kMagic);
    expect_token(in, "v1");

    LstmModel model;
    TrainingConfig& c = model.config;
    expect_token(in, "lookback");
    c.lookback = read_size(in, "lookback");
    expect_token(in, "hidden");
    c.hidden_size = read_size(in, "hidden");
    expect_token(in, "epochs");
    c.epochs = read_size(in, "epochs");
    expect_token(in, "learning_rate");
    c.learning_rate = read_double(in);
    expect_token(in, "seed");
    c.seed = read_size(in, "seed");
    expect_token(in, "patience");
    c.patience = read_size(in, "patience");
    expect_token(in, "val_fraction");
    c.val_fraction = read_double(in);
    expect_token(in, "gradient_clip");
    c.gradient_clip = read_double(in);
    c.validate();

    expect_token(in, "params");
    std::size_t count = read_size(in, "params");
    std::vector<double> flat(count);
    for (std::size_t i = 0; i < count; ++i) flat[i] = read_double(in);
    model.weights = LstmWeights::unflatten(c.hidden_size, flat);
    return model;
}

void save_model(const std::string& path, const LstmModel& model) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::IO_ERROR, "cannot write " + path);
    write_model(out, model);
    out.flush();
    if (!out) throw Error(Errc::IO_ERROR, "write failed for " + path);
}

LstmModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::IO_ERROR, "cannot open " + path);
    return read_model(in);
}

} // namespace hotelcast
