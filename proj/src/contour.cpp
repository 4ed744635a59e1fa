#include "szego/contour.hpp"

#include <algorithm>
#include <cmath>

namespace szego {

namespace {

void require_pow2(int nodes) {
  if (nodes < 4 || (nodes & (nodes - 1)) != 0)
    throw NumericalError("Contour: node count must be a power of two >= 4");
}

}  // namespace

Contour Contour::circle(cplx center, double radius, int nodes) {
  require_pow2(nodes);
  if (radius <= 0.0) throw NumericalError("Contour: radius must be positive");
  Contour c;
  c.shape_ = Shape::Circle;
  c.center_ = center;
  c.rx_ = c.ry_ = radius;
  c.nodes_.resize(std::size_t(nodes));
  c.weights_.resize(std::size_t(nodes));
  const double dtheta = 2.0 * kPi / nodes;
  for (int j = 0; j < nodes; ++j) {
    const double theta = dtheta * j;
    const cplx e(std::cos(theta), std::sin(theta));
    c.nodes_[std::size_t(j)] = center + radius * e;
    c.weights_[std::size_t(j)] = cplx(0.0, 1.0) * radius * e * dtheta;
  }
  return c;
}

Contour Contour::ellipse(cplx center, double rx, double ry, int nodes) {
  require_pow2(nodes);
  if (rx <= 0.0 || ry <= 0.0)
    throw NumericalError("Contour: semi-axes must be positive");
  Contour c;
  c.shape_ = Shape::Ellipse;
  c.center_ = center;
  c.rx_ = rx;
  c.ry_ = ry;
  c.nodes_.resize(std::size_t(nodes));
  c.weights_.resize(std::size_t(nodes));
  const double dtheta = 2.0 * kPi / nodes;
  for (int j = 0; j < nodes; ++j) {
    const double theta = dtheta * j;
    c.nodes_[std::size_t(j)] =
        center + cplx(rx * std::cos(theta), ry * std::sin(theta));
    c.weights_[std::size_t(j)] =
        cplx(-rx * std::sin(theta), ry * std::cos(theta)) * dtheta;
  }
  return c;
}

Contour Contour::polyline(std::vector<cplx> vertices, int nodes) {
  require_pow2(nodes);
  if (vertices.size() < 3)
    throw NumericalError("Contour: polyline needs at least 3 vertices");
  Contour c;
  c.shape_ = Shape::Polyline;
  c.vertices_ = std::move(vertices);
  const std::size_t V = c.vertices_.size();
  std::vector<double> lengths(V);
  double total = 0.0;
  for (std::size_t v = 0; v < V; ++v) {
    lengths[v] = std::abs(c.vertices_[(v + 1) % V] - c.vertices_[v]);
    total += lengths[v];
  }
  if (total <= 0.0) throw NumericalError("Contour: degenerate polyline");
  // Spread nodes by arc length, at least one per edge.
  std::vector<int> counts(V, 1);
  int assigned = int(V);
  if (assigned > nodes)
    throw NumericalError("Contour: more vertices than requested nodes");
  for (std::size_t v = 0; v < V; ++v) {
    int extra = int(std::floor(double(nodes - int(V)) * lengths[v] / total));
    counts[v] += extra;
    assigned += extra;
  }
  for (std::size_t v = 0; assigned < nodes; v = (v + 1) % V) {
    ++counts[v];
    ++assigned;
  }
  for (std::size_t v = 0; v < V; ++v) {
    const cplx a = c.vertices_[v];
    const cplx b = c.vertices_[(v + 1) % V];
    for (int t = 0; t < counts[v]; ++t)
      c.nodes_.push_back(a + (b - a) * (double(t) / counts[v]));
  }
  // Closed trapezoid weights.
  const std::size_t M = c.nodes_.size();
  c.weights_.resize(M);
  for (std::size_t j = 0; j < M; ++j)
    c.weights_[j] =
        (c.nodes_[(j + 1) % M] - c.nodes_[(j + M - 1) % M]) * 0.5;
  return c;
}

Contour Contour::refined() const {
  switch (shape_) {
    case Shape::Circle:
      return circle(center_, rx_, node_count() * 2);
    case Shape::Ellipse:
      return ellipse(center_, rx_, ry_, node_count() * 2);
    case Shape::Polyline:
      return polyline(vertices_, node_count() * 2);
  }
  throw NumericalError("Contour: unknown shape");
}

bool Contour::contains(cplx z) const {
  double total = 0.0;
  const std::size_t M = nodes_.size();
  for (std::size_t j = 0; j < M; ++j) {
    const cplx a = nodes_[j] - z;
    const cplx b = nodes_[(j + 1) % M] - z;
    if (a == cplx(0.0, 0.0) || b == cplx(0.0, 0.0)) return true;
    total += std::arg(b / a);
  }
  return std::lround(total / (2.0 * kPi)) != 0;
}

}  // namespace szego
