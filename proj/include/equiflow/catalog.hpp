#pragma once

#include <string>
#include <vector>

#include "equiflow/complex.hpp"

namespace equiflow {

/// Names accepted by catalog(), in listing order.
const std::vector<std::string>& catalog_names();

/// Built-in hand-checked G-complexes. Throws Error{UnknownCatalogName}.
GComplex catalog(const std::string& name);

}  // namespace equiflow
