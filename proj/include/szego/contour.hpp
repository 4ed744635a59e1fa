#pragma once

#include <vector>

#include "szego/common.hpp"

namespace szego {

/// Closed quadrature contour in the complex plane: nodes lambda_j and the
/// matching dlambda weights, counterclockwise. Node count is a power of
/// two so refinement halves the step exactly.
class Contour {
 public:
  enum class Shape { Circle, Ellipse, Polyline };

  static Contour circle(cplx center, double radius, int nodes);
  static Contour ellipse(cplx center, double rx, double ry, int nodes);
  /// Closed polygon; the node budget is spread over edges by length.
  static Contour polyline(std::vector<cplx> vertices, int nodes);

  Shape shape() const { return shape_; }
  int node_count() const { return int(nodes_.size()); }
  const std::vector<cplx>& nodes() const { return nodes_; }
  const std::vector<cplx>& weights() const { return weights_; }

  /// Same contour with twice the nodes.
  Contour refined() const;

  /// Winding-number test of the node polygon about z.
  bool contains(cplx z) const;

 private:
  Shape shape_ = Shape::Circle;
  cplx center_;
  double rx_ = 0.0, ry_ = 0.0;
  std::vector<cplx> vertices_;
  std::vector<cplx> nodes_;
  std::vector<cplx> weights_;
};

}  // namespace szego
