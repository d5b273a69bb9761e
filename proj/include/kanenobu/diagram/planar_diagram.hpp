#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace kanenobu {

// Arc labels counterclockwise from the incoming under-strand: the under
// strand runs arcs[0] -> arcs[2]; the crossing is positive when the over
// strand runs arcs[3] -> arcs[1].
struct Crossing {
  std::array<int, 4> arcs{};
  int sign = 1;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

class PlanarDiagram {
 public:
  PlanarDiagram() = default;
  explicit PlanarDiagram(std::vector<Crossing> crossings, int free_circles = 0)
      : crossings_(std::move(crossings)), free_circles_(free_circles) {}

  static PlanarDiagram unknot() { return PlanarDiagram({}, 1); }
  static PlanarDiagram unlink(int k) { return PlanarDiagram({}, k); }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing(std::size_t i) const { return crossings_.at(i); }
  std::size_t size() const { return crossings_.size(); }
  // Crossingless circles drawn apart from the rest of the diagram.
  int free_circles() const { return free_circles_; }

  int positive_crossings() const;
  int negative_crossings() const;
  int writhe() const { return positive_crossings() - negative_crossings(); }
  // Traced components plus free circles; assumes a valid diagram.
  int components() const;

  friend bool operator==(const PlanarDiagram&, const PlanarDiagram&) = default;

 private:
  std::vector<Crossing> crossings_;
  int free_circles_ = 0;
};

enum class Defect {
  Empty,             // no crossings and no circles
  SignValue,         // sign outside {+1, -1}
  ArcRange,          // label outside 1..2n
  ArcMultiplicity,   // label not used exactly twice
  LabelOrder,        // labels along a component are not consecutive
  Orientation,       // under strand does not run arcs[0] -> arcs[2]
  SignMismatch,      // listed sign disagrees with the over-strand direction
  Planarity,         // face count violates Euler's formula on the sphere
};

const char* defect_name(Defect d);

struct ValidationError {
  Defect defect;
  std::string message;
};

// nullopt when every invariant holds; otherwise the first violation found.
std::optional<ValidationError> validate(const PlanarDiagram& d);

}  // namespace kanenobu
