#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>

#include "bundle_accel/vec.hpp"

namespace bundle_accel {

// Problem interface consumed by the solvers: f, its gradient, the gradient
// Lipschitz constant M, and the ambient dimension. Oracles are immutable
// after construction and evaluation is pure, so sharing across threads is
// safe.
struct ObjectiveOracle {
  int dim = 0;
  double smoothness = 0.0;  // M
  std::function<double(const Vec&)> eval;
  std::function<Vec(const Vec&)> grad;
};

// f(x) = 1/2 x'Qx - <b, x> with Q symmetric positive semidefinite. Q is held
// either dense (row-major) or as an implicit constant tridiagonal stencil;
// the stencil keeps oracle calls O(n) for the worst-case family.
class QuadraticObjective {
 public:
  static QuadraticObjective dense(int n, std::vector<double> q_row_major, Vec b,
                                  double smoothness);
  static QuadraticObjective tridiagonal(int n, double diag, double off, Vec b,
                                        double smoothness);

  int dim() const { return dim_; }
  double smoothness() const { return smoothness_; }
  bool is_tridiagonal() const { return tridiagonal_; }
  const Vec& linear_term() const { return b_; }

  Vec apply_q(const Vec& x) const;  // Qx
  double eval(const Vec& x) const;  // 1/2 x'Qx - <b,x>
  Vec grad(const Vec& x) const;     // Qx - b

  ObjectiveOracle oracle() const;

 private:
  QuadraticObjective() = default;

  int dim_ = 0;
  double smoothness_ = 0.0;
  bool tridiagonal_ = false;
  double diag_ = 0.0, off_ = 0.0;  // stencil values when tridiagonal_
  std::vector<double> q_;          // row-major dense otherwise
  Vec b_;
};

// f(x) = 1/8 x'Lx - 1/4 <x, e1>, L tridiagonal with 2 on the diagonal and -1
// off it. 1-smooth, convex, not strongly convex; the classical hard instance
// for first-order methods.
QuadraticObjective make_worst_case(int n);

// Q = A'A / ||A'A||_op with A an n-by-n matrix of seeded standard-normal
// entries, b = 0, smoothness 1. Deterministic given (n, seed); the operator
// norm comes from a power iteration run to 1e-10 relative change.
QuadraticObjective make_random_psd_quadratic(int n, std::uint64_t seed);

struct QuadraticOptimum {
  Vec x_star;
  double f_star = 0.0;
};

class OptimumUnavailableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Minimizer and minimum value: exact tridiagonal solve for stencil matrices,
// conjugate gradients (residual <= 1e-12 * (1+||b||), at most 10n iterations)
// otherwise. Throws OptimumUnavailableError when the solve does not converge.
QuadraticOptimum quadratic_optimum(const QuadraticObjective& obj);

// CLI-facing names: "worst-case:<n>" and "psd-quad:<n>:<seed>".
QuadraticObjective objective_by_name(const std::string& name);

}  // namespace bundle_accel
