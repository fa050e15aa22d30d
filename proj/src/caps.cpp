#include "tropjac/caps.hpp"

#include <cstdlib>
#include <string>

#include "tropjac/errors.hpp"

namespace tropjac {

Caps Caps::effective() {
  Caps c;
  if (const char* env = std::getenv("TROPIJAC_CAP")) {
    int v = 0;
    try {
      v = std::stoi(env);
    } catch (const std::exception&) {
      throw ValidationError(std::string("TROPIJAC_CAP is not an integer: ") + env);
    }
    if (v < 1 || v > 30) throw ValidationError("TROPIJAC_CAP out of range [1,30]");
    c.vertex_scan = v;
    c.edge_scan = v;
  }
  return c;
}

}  // namespace tropjac
