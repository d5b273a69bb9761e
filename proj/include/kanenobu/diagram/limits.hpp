#pragma once

#include <stdexcept>
#include <string>

namespace kanenobu {

// Raised when a diagram is larger than an engine's configured cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& engine, int crossings, int cap)
      : std::runtime_error(engine + ": " + std::to_string(crossings) + " crossings exceeds cap " + std::to_string(cap)),
        crossings_(crossings),
        cap_(cap) {}
  int crossings() const { return crossings_; }
  int cap() const { return cap_; }

 private:
  int crossings_;
  int cap_;
};

inline void check_cap(const std::string& engine, int crossings, int cap) {
  if (crossings > cap) throw CapExceeded(engine, crossings, cap);
}

}  // namespace kanenobu
