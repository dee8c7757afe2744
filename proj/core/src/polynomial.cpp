#include "rdcalib/polynomial.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rdcalib::poly {

std::complex<double> evaluate(const Coeffs& c, std::complex<double> x) {
  std::complex<double> acc(0.0, 0.0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Coeffs multiply(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

Coeffs add(const Coeffs& a, const Coeffs& b) {
  Coeffs out(std::max(a.size(), b.size()), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Coeffs scale(const Coeffs& a, double factor) {
  Coeffs out = a;
  for (double& v : out) v *= factor;
  return out;
}

Coeffs derivative(const Coeffs& a) {
  if (a.size() <= 1) return {0.0};
  Coeffs out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) {
    out[i - 1] = a[i] * static_cast<double>(i);
  }
  return out;
}

Coeffs trim(const Coeffs& a) {
  Coeffs out = a;
  while (out.size() > 1 && out.back() == 0.0) {
    out.pop_back();
  }
  return out;
}

int degree(const Coeffs& a) {
  return static_cast<int>(trim(a).size()) - 1;
}

void divide(const Coeffs& a, const Coeffs& b, Coeffs& quotient, Coeffs& remainder) {
  const Coeffs den = trim(b);
  if (den.size() == 1 && den[0] == 0.0) {
    throw std::invalid_argument("poly::divide: zero divisor");
  }
  Coeffs rem = a;
  const int db = static_cast<int>(den.size()) - 1;
  int dr = static_cast<int>(rem.size()) - 1;
  if (dr < db) {
    quotient = {0.0};
    remainder = rem.empty() ? Coeffs{0.0} : rem;
    return;
  }
  quotient.assign(dr - db + 1, 0.0);
  for (int k = dr - db; k >= 0; --k) {
    const double q = rem[k + db] / den[db];
    quotient[k] = q;
    for (int j = 0; j <= db; ++j) {
      rem[k + j] -= q * den[j];
    }
  }
  rem.resize(std::max(db, 1));
  remainder = rem;
}

std::vector<std::complex<double>> roots(const Coeffs& a) {
  const Coeffs c = trim(a);
  const int n = static_cast<int>(c.size()) - 1;
  if (n < 1) return {};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[i] / c[n];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  std::vector<std::complex<double>> out(n);
  for (int i = 0; i < n; ++i) out[i] = solver.eigenvalues()(i);
  return out;
}

}  // namespace rdcalib::poly
