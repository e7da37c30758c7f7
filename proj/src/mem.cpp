#include "hdir/mem.hpp"

#include <atomic>

namespace hdir::memtrack {

namespace {
std::atomic<std::size_t> g_live{0};
std::atomic<std::size_t> g_peak{0};
}  // namespace

void add(std::size_t bytes) {
    std::size_t now = g_live.fetch_add(bytes) + bytes;
    std::size_t peak = g_peak.load();
    while (now > peak && !g_peak.compare_exchange_weak(peak, now)) {
    }
}

void sub(std::size_t bytes) { g_live.fetch_sub(bytes); }

std::size_t live_bytes() { return g_live.load(); }

std::size_t peak_bytes() { return g_peak.load(); }

void reset_peak() { g_peak.store(g_live.load()); }

}  // namespace hdir::memtrack
