#include "bundle_accel/bundle_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace bundle_accel {

Cut tangent_cut(const ObjectiveOracle& oracle, const Vec& z) {
  if (z.size() != static_cast<std::size_t>(oracle.dim))
    throw std::invalid_argument("tangent_cut: dimension mismatch");
  const double f_z = oracle.eval(z);
  return tangent_cut(f_z, oracle.grad(z), z);
}

Cut tangent_cut(double f_z, const Vec& grad_z, const Vec& z) {
  return Cut{grad_z, f_z - dot(grad_z, z)};
}

Cut aggregate_cut(const Vec& y_k, const Vec& z_next, double rho, double model_value_at_z) {
  Vec s(y_k.size());
  for (std::size_t i = 0; i < y_k.size(); ++i) s[i] = rho * (y_k[i] - z_next[i]);
  const double offset = model_value_at_z - dot(s, z_next);
  return Cut{std::move(s), offset};
}

ProxSolution solve_prox(const TwoCutModel& model, const Vec& y_k, double rho) {
  if (!(rho > 0.0)) throw std::invalid_argument("solve_prox: rho must be positive");
  const std::size_t n = y_k.size();
  if (model.newest.slope.size() != n ||
      (model.aggregate && model.aggregate->slope.size() != n))
    throw std::invalid_argument("solve_prox: dimension mismatch");

  Vec z(n);
  if (!model.aggregate) {
    const Vec& g = model.newest.slope;
    for (std::size_t i = 0; i < n; ++i) z[i] = y_k[i] - g[i] / rho;
    const double value = model.newest.value(z);
    return {std::move(z), value};
  }

  const Vec& g1 = model.newest.slope;
  const Vec& g2 = model.aggregate->slope;
  const double v1 = model.newest.value(y_k);
  const double v2 = model.aggregate->value(y_k);

  // Maximize the concave dual
  //   q(theta) = theta*v1 + (1-theta)*v2 - ||theta*g1 + (1-theta)*g2||^2 / (2 rho)
  // over theta in [0,1]; the stationary point is clamped to the box.
  double dd = 0.0, g2d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double di = g1[i] - g2[i];
    dd += di * di;
    g2d += g2[i] * di;
  }
  double theta = 1.0;  // identical slopes: any theta gives the same z
  if (dd > 0.0) theta = std::clamp((rho * (v1 - v2) - g2d) / dd, 0.0, 1.0);

  for (std::size_t i = 0; i < n; ++i) {
    const double gi = theta * g1[i] + (1.0 - theta) * g2[i];
    z[i] = y_k[i] - gi / rho;
  }
  const double value = model.value(z);
  return {std::move(z), value};
}

}  // namespace bundle_accel
