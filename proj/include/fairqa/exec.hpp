#pragma once

#include <cstddef>

namespace fairqa {

/// Selects the kernel variant. `serial` is the single-threaded reference path
/// the parallel kernels are tested against; `parallel` uses OpenMP when the
/// library was built with it and falls back to serial otherwise.
enum class Exec { serial, parallel };

/// Inputs smaller than this run serially even under Exec::parallel.
inline constexpr std::size_t kParallelGrain = 1 << 14;

}  // namespace fairqa
