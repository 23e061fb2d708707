#pragma once
#include <string>
#include <vector>

#include "dimod/dimer.hpp"

namespace dimod {

const std::vector<std::string>& catalog_names();

// Throws UnknownModel for names outside the catalog.
DimerModel catalog_model(const std::string& name);

// "catalog:NAME" or a model file path.
DimerModel resolve_model(const std::string& arg);

}  // namespace dimod
