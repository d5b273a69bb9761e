#pragma once

#include <ostream>

namespace kanenobu {

// Exit codes: 0 ok, 1 parse or validation failure, 2 crossing cap exceeded.
int run_app(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace kanenobu
