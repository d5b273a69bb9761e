#pragma once

namespace kanenobu {

// Serial runs are the reference for the OpenMP kernels.
enum class Parallelism { Serial, OpenMP };

}  // namespace kanenobu
