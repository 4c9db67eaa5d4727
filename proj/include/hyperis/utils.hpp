#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <thread>
#include <vector>

namespace hyperis {

// Global worker cap, set once by the CLI (--threads). 0 = hardware default.
void set_max_threads(unsigned n);
unsigned max_threads();

// Chunked parallel loop over [begin, end). The body receives a half-open
// index range and runs on at most max_threads() workers. Falls back to a
// plain loop when the range is small or only one worker is available.
void parallel_for(std::uint64_t begin, std::uint64_t end,
                  const std::function<void(std::uint64_t, std::uint64_t)>& body,
                  std::uint64_t min_chunk = 1024);

// FNV-1a, used for input digests in run records.
std::uint64_t fnv1a(std::string_view data);
std::string fnv1a_hex(std::string_view data);

// SplitMix64, used to derive independent per-task seeds from one root seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL + salt * 0xff51afd7ed558ccdULL);
  return splitmix64(s);
}

}  // namespace hyperis
