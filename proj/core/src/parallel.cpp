#include "gossip_age/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace gossip_age {

std::size_t worker_count(std::size_t requested) {
  std::size_t count = requested;
  if (count == 0) count = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("GOSSIP_AGE_THREADS")) {
    std::size_t cap = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), cap);
    if (ec == std::errc() && cap > 0) count = std::min(count, cap);
  }
  return count;
}

}  // namespace gossip_age
