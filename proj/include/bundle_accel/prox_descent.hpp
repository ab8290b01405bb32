#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "bundle_accel/bundle_model.hpp"
#include "bundle_accel/objectives.hpp"

namespace bundle_accel {

// Sufficient-decrease test: accept the trial point when the realized decrease
// f(center) - f(trial) covers at least a beta fraction of the decrease the
// model predicts.
bool descent_test(double f_at_center, double f_at_trial, double model_at_trial,
                  double beta);

// Termination bound for the inner loop on M-smooth objectives with rho >= M:
// 16 (M + rho)^3 / ((1 - beta)^2 rho^3).
double inner_iteration_bound(double smoothness, double rho, double beta);

// Default inner budget: 4x the termination bound when M is known, 1e5
// otherwise (rho < M runs have no guarantee and only the budget guards them).
int default_max_inner(double smoothness, double rho, double beta);

struct InnerRecord {
  Vec z;                         // trial point z_{j+1}
  double f_z = 0.0;              // f(z_{j+1})
  double model_z = 0.0;          // model value at z_{j+1}
  double subproblem_value = 0.0; // model_z + rho/2 ||z_{j+1} - y_k||^2
  bool descent = false;          // test verdict
};

struct ProxDescentReport {
  Vec accepted;              // first trial point passing the descent test
  Vec v;                     // rho * (y_k - accepted), an epsilon-subgradient
  double epsilon = 0.0;      // f(accepted) - model(accepted), clamped at 0
  double f_center = 0.0;     // f(y_k)
  double f_accepted = 0.0;   // f(accepted)
  int inner_iterations = 0;  // prox solves performed
  long long oracle_calls = 0;
  std::vector<InnerRecord> trace;
};

// Raised when the descent test never passes within the inner budget. Carries
// the partial trace; outer solvers may attach their partial run before
// rethrowing.
class InnerBudgetError : public std::runtime_error {
 public:
  InnerBudgetError(const std::string& what, ProxDescentReport partial)
      : std::runtime_error(what),
        partial_(std::make_shared<ProxDescentReport>(std::move(partial))) {}

  const ProxDescentReport& partial_report() const { return *partial_; }

 private:
  std::shared_ptr<const ProxDescentReport> partial_;
};

// One model -> prox solve -> test cycle. Factored out so the double-loop
// method and the classical single-loop method run the identical
// floating-point path. Consumes exactly one objective-value evaluation.
struct BundleStep {
  Vec z;
  double f_z = 0.0;
  double model_z = 0.0;
  double subproblem_value = 0.0;
  bool descent = false;
};
BundleStep bundle_step(const ObjectiveOracle& oracle, const Vec& center,
                       double f_center, const TwoCutModel& model, double beta,
                       double rho);

// Follow-up model after a null step at z: tangent cut at z plus the aggregate
// cut of the model just minimized.
TwoCutModel null_step_model(const Vec& center, const BundleStep& step,
                            const Vec& grad_z, double rho);

// Inner loop: starting from the tangent model at y_k, repeat prox solves and
// model updates until the descent test passes, and return the accepted point
// with its inexactness certificate (v, epsilon).
ProxDescentReport prox_descent(const ObjectiveOracle& oracle, const Vec& y_k,
                               double beta, double rho, int max_inner,
                               std::vector<ModelSnapshot>* snapshots = nullptr);

}  // namespace bundle_accel
