#include "gfa/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace gfa {

unsigned threads_from_environment() {
  const char* raw = std::getenv("GFA_THREADS");
  if (!raw) return 1;
  unsigned value = 0;
  const auto [ptr, ec] = std::from_chars(raw, raw + std::strlen(raw), value);
  if (ec != std::errc() || *ptr != '\0' || value == 0) return 1;
  return std::min(value, 256u);
}

}  // namespace gfa
