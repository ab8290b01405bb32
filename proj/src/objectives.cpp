#include "bundle_accel/objectives.hpp"

#include <cmath>
#include <utility>

#include "bundle_accel/rng.hpp"

namespace bundle_accel {

QuadraticObjective QuadraticObjective::dense(int n, std::vector<double> q_row_major,
                                             Vec b, double smoothness) {
  if (n < 1) throw std::invalid_argument("QuadraticObjective: dimension must be >= 1");
  if (q_row_major.size() != static_cast<std::size_t>(n) * n || b.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("QuadraticObjective: size mismatch");
  QuadraticObjective obj;
  obj.dim_ = n;
  obj.smoothness_ = smoothness;
  obj.tridiagonal_ = false;
  obj.q_ = std::move(q_row_major);
  obj.b_ = std::move(b);
  return obj;
}

QuadraticObjective QuadraticObjective::tridiagonal(int n, double diag, double off,
                                                   Vec b, double smoothness) {
  if (n < 1) throw std::invalid_argument("QuadraticObjective: dimension must be >= 1");
  if (b.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("QuadraticObjective: size mismatch");
  QuadraticObjective obj;
  obj.dim_ = n;
  obj.smoothness_ = smoothness;
  obj.tridiagonal_ = true;
  obj.diag_ = diag;
  obj.off_ = off;
  obj.b_ = std::move(b);
  return obj;
}

Vec QuadraticObjective::apply_q(const Vec& x) const {
  const int n = dim_;
  Vec w(n, 0.0);
  if (tridiagonal_) {
    for (int i = 0; i < n; ++i) {
      double s = diag_ * x[i];
      if (i > 0) s += off_ * x[i - 1];
      if (i + 1 < n) s += off_ * x[i + 1];
      w[i] = s;
    }
  } else {
    for (int i = 0; i < n; ++i) {
      const double* row = q_.data() + static_cast<std::size_t>(i) * n;
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += row[j] * x[j];
      w[i] = s;
    }
  }
  return w;
}

double QuadraticObjective::eval(const Vec& x) const {
  const Vec w = apply_q(x);
  return 0.5 * dot(x, w) - dot(b_, x);
}

Vec QuadraticObjective::grad(const Vec& x) const {
  Vec g = apply_q(x);
  for (int i = 0; i < dim_; ++i) g[i] -= b_[i];
  return g;
}

ObjectiveOracle QuadraticObjective::oracle() const {
  auto self = std::make_shared<const QuadraticObjective>(*this);
  ObjectiveOracle o;
  o.dim = dim_;
  o.smoothness = smoothness_;
  o.eval = [self](const Vec& x) { return self->eval(x); };
  o.grad = [self](const Vec& x) { return self->grad(x); };
  return o;
}

QuadraticObjective make_worst_case(int n) {
  if (n < 1) throw std::invalid_argument("make_worst_case: n must be >= 1");
  Vec b(n, 0.0);
  b[0] = 0.25;
  // Q = L/4 with L = tridiag(-1, 2, -1); ||Q||_op < 1, the function is 1-smooth.
  return QuadraticObjective::tridiagonal(n, 0.5, -0.25, std::move(b), 1.0);
}

namespace {

// Largest eigenvalue of a dense symmetric PSD matrix by power iteration with
// Rayleigh-quotient estimates, run until the estimate changes by less than
// 1e-10 relative.
double power_iteration_top_eigenvalue(const std::vector<double>& m, int n, SplitMix64& rng) {
  Vec v(n);
  for (auto& vi : v) vi = rng.normal();
  const double nv = norm2(v);
  for (auto& vi : v) vi /= nv;

  double lambda = 0.0;
  for (int it = 0; it < 100000; ++it) {
    Vec w(n, 0.0);
    for (int i = 0; i < n; ++i) {
      const double* row = m.data() + static_cast<std::size_t>(i) * n;
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += row[j] * v[j];
      w[i] = s;
    }
    const double next = dot(v, w);  // Rayleigh quotient, v is unit
    const double nw = norm2(w);
    if (nw == 0.0) return 0.0;
    for (int i = 0; i < n; ++i) v[i] = w[i] / nw;
    if (it > 0 && std::abs(next - lambda) <= 1e-10 * std::abs(next)) return next;
    lambda = next;
  }
  return lambda;
}

}  // namespace

QuadraticObjective make_random_psd_quadratic(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("make_random_psd_quadratic: n must be >= 1");
  SplitMix64 rng(seed);
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (auto& aij : a) aij = rng.normal();

  // M = A'A, filled symmetrically so M is exactly symmetric in floating point.
  std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k)
        s += a[static_cast<std::size_t>(k) * n + i] * a[static_cast<std::size_t>(k) * n + j];
      m[static_cast<std::size_t>(i) * n + j] = s;
      m[static_cast<std::size_t>(j) * n + i] = s;
    }
  }

  const double lambda = power_iteration_top_eigenvalue(m, n, rng);
  if (!(lambda > 0.0))
    throw std::runtime_error("make_random_psd_quadratic: degenerate operator norm");
  for (auto& mij : m) mij /= lambda;
  return QuadraticObjective::dense(n, std::move(m), Vec(n, 0.0), 1.0);
}

namespace {

// Thomas elimination for the constant-stencil tridiagonal system Qx = b.
Vec solve_tridiagonal(int n, double diag, double off, const Vec& b) {
  Vec c(n, 0.0), d(n, 0.0), x(n, 0.0);
  double denom = diag;
  if (denom == 0.0) throw OptimumUnavailableError("tridiagonal solve: zero pivot");
  c[0] = off / denom;
  d[0] = b[0] / denom;
  for (int i = 1; i < n; ++i) {
    denom = diag - off * c[i - 1];
    if (denom == 0.0) throw OptimumUnavailableError("tridiagonal solve: zero pivot");
    c[i] = off / denom;
    d[i] = (b[i] - off * d[i - 1]) / denom;
  }
  x[n - 1] = d[n - 1];
  for (int i = n - 2; i >= 0; --i) x[i] = d[i] - c[i] * x[i + 1];
  return x;
}

// Conjugate gradients on Qx = b from x = 0.
Vec solve_cg(const QuadraticObjective& obj, const Vec& b, double tol) {
  const int n = obj.dim();
  Vec x(n, 0.0);
  Vec r = b;  // b - Qx with x = 0
  Vec p = r;
  double rr = dot(r, r);
  if (std::sqrt(rr) <= tol) return x;
  const int max_iters = 10 * n;
  for (int it = 0; it < max_iters; ++it) {
    const Vec qp = obj.apply_q(p);
    const double pqp = dot(p, qp);
    if (pqp <= 0.0) throw OptimumUnavailableError("conjugate gradients: curvature breakdown");
    const double alpha = rr / pqp;
    axpy(alpha, p, x);
    axpy(-alpha, qp, r);
    const double rr_next = dot(r, r);
    if (std::sqrt(rr_next) <= tol) return x;
    const double beta = rr_next / rr;
    rr = rr_next;
    for (int i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
  }
  throw OptimumUnavailableError("conjugate gradients: no convergence within 10n iterations");
}

}  // namespace

QuadraticOptimum quadratic_optimum(const QuadraticObjective& obj) {
  const double tol = 1e-12 * (1.0 + norm2(obj.linear_term()));
  Vec x_star;
  if (obj.is_tridiagonal()) {
    const Vec g0 = obj.grad(Vec(obj.dim(), 0.0));  // -b
    Vec b(obj.dim());
    for (int i = 0; i < obj.dim(); ++i) b[i] = -g0[i];
    // stencil values are recovered by applying Q to basis vectors
    const Vec col0 = obj.apply_q(basis(obj.dim(), 0));
    const double diag = col0[0];
    const double off = obj.dim() > 1 ? col0[1] : 0.0;
    x_star = solve_tridiagonal(obj.dim(), diag, off, b);
  } else {
    x_star = solve_cg(obj, obj.linear_term(), tol);
  }
  const Vec residual = obj.grad(x_star);
  if (norm2(residual) > tol)
    throw OptimumUnavailableError("quadratic_optimum: residual above tolerance");
  return {x_star, obj.eval(x_star)};
}

QuadraticObjective objective_by_name(const std::string& name) {
  const auto parse_int = [](const std::string& s, const char* what) {
    try {
      std::size_t pos = 0;
      const long long v = std::stoll(s, &pos);
      if (pos != s.size() || v < 1) throw std::invalid_argument(what);
      return v;
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("objective_by_name: bad ") + what + ": " + s);
    }
  };

  const auto split = [](const std::string& s) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
      const std::size_t colon = s.find(':', start);
      if (colon == std::string::npos) {
        parts.push_back(s.substr(start));
        break;
      }
      parts.push_back(s.substr(start, colon - start));
      start = colon + 1;
    }
    return parts;
  };

  const auto parts = split(name);
  if (parts.size() == 2 && parts[0] == "worst-case")
    return make_worst_case(static_cast<int>(parse_int(parts[1], "dimension")));
  if (parts.size() == 3 && parts[0] == "psd-quad")
    return make_random_psd_quadratic(static_cast<int>(parse_int(parts[1], "dimension")),
                                     static_cast<std::uint64_t>(parse_int(parts[2], "seed")));
  throw std::invalid_argument("objective_by_name: unknown objective '" + name +
                              "' (expected worst-case:<n> or psd-quad:<n>:<seed>)");
}

}  // namespace bundle_accel
