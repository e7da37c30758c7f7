#pragma once

#include <cstddef>

namespace hdir::memtrack {

// Every tensor buffer allocation/release passes through these counters.
// "Live" is the sum of currently allocated buffer bytes; tape saved values
// keep buffers alive, so they are covered by the same number.
void add(std::size_t bytes);
void sub(std::size_t bytes);

std::size_t live_bytes();
std::size_t peak_bytes();

// Resets the peak to the current live count.
void reset_peak();

}  // namespace hdir::memtrack
