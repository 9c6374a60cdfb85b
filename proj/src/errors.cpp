#include "contextqa/errors.hpp"

#include <iostream>

namespace contextqa {

void log_warning(const std::string& message) { std::cerr << "[warn] " << message << "\n"; }

}  // namespace contextqa
