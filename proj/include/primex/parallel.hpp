#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>

namespace primex {

// Worker count for data-parallel loops: the PRIMEX_THREADS environment
// variable when set to a positive number, hardware concurrency otherwise.
inline int thread_budget() {
  if (char const *env = std::getenv("PRIMEX_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v >= 1)
        return v;
    } catch (...) {
      // fall through to the hardware default
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

} // namespace primex
