#include "momentlab/budget.hpp"

#include <cstdlib>
#include <string>

namespace momentlab {

Budget Budget::from_environment() {
  Budget b;
  if (const char* env = std::getenv("MOMENTLAB_BUDGET")) {
    try {
      const auto value = std::stoull(env);
      if (value > 0) b.elements = value;
    } catch (const std::exception&) {
      // ignore malformed overrides
    }
  }
  return b;
}

}  // namespace momentlab
