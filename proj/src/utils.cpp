#include "hyperis/utils.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>

namespace hyperis {

namespace {
std::atomic<unsigned> g_max_threads{0};
}

void set_max_threads(unsigned n) { g_max_threads.store(n); }

unsigned max_threads() {
  unsigned n = g_max_threads.load();
  if (n == 0) {
    n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
  }
  return n;
}

void parallel_for(std::uint64_t begin, std::uint64_t end,
                  const std::function<void(std::uint64_t, std::uint64_t)>& body,
                  std::uint64_t min_chunk) {
  if (end <= begin) return;
  const std::uint64_t total = end - begin;
  unsigned workers = max_threads();
  if (workers > 1 && total / workers < min_chunk)
    workers = static_cast<unsigned>(std::max<std::uint64_t>(1, total / min_chunk));
  if (workers <= 1) {
    body(begin, end);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (unsigned t = 0; t < workers; ++t) {
    const std::uint64_t lo = begin + chunk * t;
    if (lo >= end) break;
    const std::uint64_t hi = std::min(end, lo + chunk);
    pool.emplace_back([&body, lo, hi] { body(lo, hi); });
  }
  for (auto& th : pool) th.join();
}

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string fnv1a_hex(std::string_view data) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(data)));
  return std::string(buf);
}

}  // namespace hyperis
