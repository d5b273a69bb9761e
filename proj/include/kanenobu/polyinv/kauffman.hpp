#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>

#include "kanenobu/algebra/laurent.hpp"
#include "kanenobu/diagram/planar_diagram.hpp"
#include "kanenobu/diagram/port_graph.hpp"

namespace kanenobu {

struct KauffmanOptions {
  int cap = 14;
  bool memoize = true;
  bool reduce_bigons = true;
};

// Regular-isotopy Kauffman polynomial Lambda(a, x), computed by switching
// toward descending diagrams. For fixed basepoints and component order let
// b_1..b_m be the crossings first met from below. The skein relation
// Lambda(D) = x(Lambda(D_0) + Lambda(D_inf)) - Lambda(D switched at b_1),
// iterated through b_1..b_m, expresses Lambda(D) through smoothings with
// one crossing fewer and one descending diagram, which is an unlink and
// evaluates directly. Curls and bigons are removed first, split
// diagrams factor, and results are cached on canonical_key.
class KauffmanEngine {
 public:
  explicit KauffmanEngine(KauffmanOptions opt = {}) : opt_(opt) {}

  LaurentPoly2 lambda(const PlanarDiagram& d);
  LaurentPoly2 lambda(const PortGraph& g);

  std::size_t cache_size() const { return memo_.size(); }
  std::size_t cache_hits() const { return hits_; }
  std::size_t calls() const { return calls_; }

 private:
  LaurentPoly2 eval(const PortGraph& g);
  LaurentPoly2 eval_connected(const PortGraph& g);

  KauffmanOptions opt_;
  std::unordered_map<std::string, LaurentPoly2> memo_;
  std::size_t hits_ = 0;
  std::size_t calls_ = 0;
};

// (a + a^-1) x^-1 - 1, the value of a two-component unlink.
LaurentPoly2 kauffman_delta();

LaurentPoly2 kauffman_lambda(const PlanarDiagram& d, const KauffmanOptions& opt = {});
// F = a^-w * Lambda
LaurentPoly2 kauffman_F(const PlanarDiagram& d, const KauffmanOptions& opt = {});
// Q(x) = F(1, x)
LaurentPoly1 q_polynomial(const PlanarDiagram& d, const KauffmanOptions& opt = {});

}  // namespace kanenobu
