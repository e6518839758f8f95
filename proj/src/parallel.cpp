#include "eqvb/parallel.hpp"

#include <atomic>

namespace eqvb::par {

namespace {
std::atomic<bool> g_enabled{true};
}

void set_enabled(bool on) { g_enabled.store(on, std::memory_order_relaxed); }
bool enabled() { return g_enabled.load(std::memory_order_relaxed); }

}  // namespace eqvb::par
