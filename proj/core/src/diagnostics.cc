#include "letternet/diagnostics.h"

#include <utility>

namespace letternet {

void Diagnostics::warn(std::string message) { warnings_.push_back(std::move(message)); }

void Diagnostics::merge(const Diagnostics& other) {
  warnings_.insert(warnings_.end(), other.warnings_.begin(), other.warnings_.end());
}

void warn(Diagnostics* diag, std::string message) {
  if (diag != nullptr) diag->warn(std::move(message));
}

}  // namespace letternet
