#pragma once
#include <string>

#include "dimod/dimer.hpp"

namespace dimod {

// Strict parse of the model file format; unknown or missing fields are
// rejected with InvalidModel.
DimerModel parse_model_json(const std::string& text);
DimerModel load_model_file(const std::string& path);

std::string model_to_json(const DimerModel& m);

}  // namespace dimod
