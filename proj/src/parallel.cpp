#include "multibraid/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace multibraid
{

std::size_t worker_count()
{
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("MULTIBRAID_THREADS"))
  {
    try
    {
      const long v = std::stol(cap);
      if (v >= 1)
        n = std::min(n, static_cast<std::size_t>(v));
    }
    catch (const std::exception&)
    {
      // An unparsable cap is ignored.
    }
  }
  return n;
}

} // namespace multibraid
