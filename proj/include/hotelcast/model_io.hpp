#ifndef HOTELCAST_MODEL_IO_HPP
#define HOTELCAST_MODEL_IO_HPP

#include <iosfwd>
#include <string>

#include "hotelcast/lstm.hpp"

namespace hotelcast {

/**
 * Model persistence: versioned text header, dimensions, then the weight
 * arrays in the flatten() order, one decimal value per token with full
 * round-trip precision. A saved model reloads bit-exactly.
 */
void write_model(std::ostream& out, const LstmModel& model);
LstmModel read_model(std::istream& in);

void save_model(const std::string& path, const LstmModel& model);
LstmModel load_model(const std::string& path);

} // namespace hotelcast

#endif // HOTELCAST_MODEL_IO_HPP
