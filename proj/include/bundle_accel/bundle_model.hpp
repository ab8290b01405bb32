#pragma once

#include <optional>

#include "bundle_accel/objectives.hpp"
#include "bundle_accel/vec.hpp"

namespace bundle_accel {

// Affine global minorant of f in anchor-free form: l(y) = offset + <slope, y>.
struct Cut {
  Vec slope;
  double offset = 0.0;

  double value(const Vec& y) const { return offset + dot(slope, y); }
};

// Finite-memory under-estimator: the tangent cut at the latest trial point,
// plus the aggregate cut once a null step has occurred. The model value is
// the max over the cuts present.
struct TwoCutModel {
  Cut newest;
  std::optional<Cut> aggregate;

  double value(const Vec& y) const {
    const double v = newest.value(y);
    return aggregate ? std::max(v, aggregate->value(y)) : v;
  }
};

// l(y) = f(z) + <grad f(z), y - z>, stored anchor-free.
Cut tangent_cut(const ObjectiveOracle& oracle, const Vec& z);
Cut tangent_cut(double f_z, const Vec& grad_z, const Vec& z);

// l(y) = prev_model(z_next) + <s, y - z_next> with s = rho * (y_k - z_next);
// s is a subgradient of the previous model at z_next because z_next minimized
// that model's prox subproblem centered at y_k.
Cut aggregate_cut(const Vec& y_k, const Vec& z_next, double rho, double model_value_at_z);

struct ProxSolution {
  Vec z;
  double model_value = 0.0;  // model(z)
};

// argmin_y { model(y) + rho/2 ||y - y_k||^2 } in closed form. With one cut
// the minimizer is y_k - slope/rho; with two cuts the 1-D concave dual over
// the convex combination of the slopes is maximized and clamped to [0,1]
// (ties between identical slopes resolve to the newest cut).
ProxSolution solve_prox(const TwoCutModel& model, const Vec& y_k, double rho);

// A model together with the prox center it was used at; recorded by solvers
// when diagnostics are enabled so the minorant property can be sampled later.
struct ModelSnapshot {
  Vec center;
  TwoCutModel model;
};

}  // namespace bundle_accel
