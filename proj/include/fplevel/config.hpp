#pragma once

#include <atomic>

namespace fplevel::config {

/// Worker threads used by parallelizable kernels (polynomial products).
/// Results are deterministic regardless of this setting.
inline std::atomic<int> threads{1};

inline void set_threads(int n) { threads.store(n < 1 ? 1 : n); }
inline int get_threads() { return threads.load(); }

}  // namespace fplevel::config
