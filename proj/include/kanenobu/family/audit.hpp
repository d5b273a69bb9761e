#pragma once

namespace kanenobu {

struct KidwellReport {
  int deg_q = 0;
  int bridge = 0;
  int crossings = 0;
  bool inequality_holds = false;  // deg_q <= crossings - bridge
};

// Measured on kanenobu_diagram(p,q).
KidwellReport kidwell_audit(int p, int q, int kauffman_cap = 14);

}  // namespace kanenobu
