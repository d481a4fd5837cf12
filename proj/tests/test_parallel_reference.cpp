#include <doctest.h>
#include <omp.h>

#include <cmath>
#include <random>

#include "fredholm/errors.hpp"
#include "fredholm/fredholm.hpp"
#include "fredholm/parallel.hpp"
#include "fredholm/reference.hpp"
#include "oracles.hpp"

using namespace fredholm;

namespace {

ComplexMatrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Complex{u(rng), u(rng)};
  return m;
}

std::vector<std::vector<Complex>> to_rows(const ComplexMatrix& m) {
  std::vector<std::vector<Complex>> out(m.rows(), std::vector<Complex>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

KernelSpec smooth() {
  return KernelSpec::general({0.0, 2.0}, [](double x, double t) {
    return Complex{std::cos(x - t), 0.3 * x + t * t};
  });
}

double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("principal minor sums against Newton identities") {
  for (std::size_t n : {1u, 3u, 9u, 14u}) {
    const auto a = random_matrix(n, 7 + n);
    const auto sums = parallel::minor_sums(a, 6);
    const auto want = oracle::principal_minor_sums(to_rows(a), 6);
    for (int k = 1; k <= 6; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      if (static_cast<std::size_t>(k) > n) {
        CHECK(std::abs(sums.principal[k]) == 0.0);
      } else {
        CHECK(std::abs(sums.principal[k] - want[k]) <= 1e-11 * std::max(1.0, std::abs(want[k])));
      }
    }
  }
}

TEST_CASE("column-replaced sums against the rank-one update identity") {
  // S_n(A + c e_j^T) - S_n(A) is the sum over sets containing j of the
  // minors with column j replaced by c.
  const std::size_t n = 10;
  const int order = 5;
  const auto a = random_matrix(n, 99);
  std::vector<Complex> column(n);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (auto& c : column) c = Complex{u(rng), u(rng)};

  const auto sums = parallel::minor_sums(a, column, order);
  const auto base = oracle::principal_minor_sums(to_rows(a), order);
  for (std::size_t j = 0; j < n; ++j) {
    auto rows = to_rows(a);
    for (std::size_t i = 0; i < n; ++i) rows[i][j] += column[i];
    const auto shifted = oracle::principal_minor_sums(rows, order);
    for (int k = 1; k <= order; ++k) {
      CAPTURE(j);
      CAPTURE(k);
      const Complex want = shifted[k] - base[k];
      CHECK(std::abs(sums.replaced[k][j] - want) <= 1e-10 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("determinant coefficients match the tensor-product reference") {
  SolverConfig cfg;
  cfg.nodes = 6;
  cfg.series_order_max = 3;
  const auto kernel = smooth();
  const auto rule = solver_rule(kernel, cfg);
  const auto det = fredholm_determinant(kernel, 0.7, cfg);
  for (int k = 1; k <= 3; ++k) {
    const Complex want = reference::determinant_coefficient(kernel, rule, k);
    CAPTURE(k);
    CHECK(std::abs(det.coefficients[k - 1] - want) <= 1e-12 * std::max(1.0, std::abs(want)));
  }
}

TEST_CASE("first-minor coefficients match the bordered reference") {
  SolverConfig cfg;
  cfg.nodes = 6;
  cfg.series_order_max = 3;
  const auto kernel = smooth();
  const auto rule = solver_rule(kernel, cfg);
  for (auto [x, t] : {std::pair{0.3, 1.1}, std::pair{2.0, 0.0}}) {
    const auto minor = fredholm_first_minor(kernel, x, t, -0.4, cfg);
    for (int k = 1; k <= 3; ++k) {
      const Complex want = reference::minor_coefficient(kernel, rule, x, t, k);
      CAPTURE(k);
      CHECK(std::abs(minor.coefficients[k - 1] - want) <= 1e-12 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("reference d_n equals n! times the principal sum") {
  SolverConfig cfg;
  cfg.nodes = 5;
  const auto kernel = smooth();
  const auto rule = solver_rule(kernel, cfg);
  const auto sums = parallel::minor_sums(parallel::weighted_kernel_matrix(kernel, rule), 4);
  for (int k = 1; k <= 4; ++k) {
    const Complex want = factorial(k) * sums.principal[k];
    CHECK(std::abs(reference::determinant_coefficient(kernel, rule, k) - want) <= 1e-12 * std::abs(want));
  }
}

TEST_CASE("weighted kernel matrix and dense solve match the serial versions") {
  SolverConfig cfg;
  cfg.nodes = 90;
  const auto kernel = smooth();
  const auto rule = solver_rule(kernel, cfg);
  const auto par = parallel::weighted_kernel_matrix(kernel, rule);
  const auto ser = reference::weighted_kernel_matrix(kernel, rule);
  for (std::size_t i = 0; i < par.rows(); ++i)
    for (std::size_t j = 0; j < par.cols(); ++j) CHECK(par(i, j) == ser(i, j));

  auto system = random_matrix(150, 3);
  for (std::size_t i = 0; i < 150; ++i) system(i, i) += 4.0;
  std::vector<Complex> rhs(150);
  for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = Complex{1.0, static_cast<double>(i)};
  auto x_par = rhs;
  auto x_ser = rhs;
  parallel::solve_dense(system, x_par);
  reference::solve_dense(system, x_ser);
  for (std::size_t i = 0; i < rhs.size(); ++i) CHECK(std::abs(x_par[i] - x_ser[i]) <= 1e-12 * std::abs(x_ser[i]));
  // residual
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < rhs.size(); ++j) acc += system(i, j) * x_par[j];
    CHECK(std::abs(acc - rhs[i]) <= 1e-10 * std::abs(rhs[i]));
  }
}

TEST_CASE("results do not depend on the thread count") {
  const auto a = random_matrix(40, 11);
  std::vector<Complex> column(40, Complex{0.5, -0.25});
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const auto one = parallel::minor_sums(a, column, 4);
  omp_set_num_threads(4);
  const auto four = parallel::minor_sums(a, column, 4);
  omp_set_num_threads(saved);
  for (int k = 0; k <= 4; ++k) CHECK(one.principal[k] == four.principal[k]);
  for (int k = 1; k <= 4; ++k)
    for (std::size_t j = 0; j < column.size(); ++j) CHECK(one.replaced[k][j] == four.replaced[k][j]);
}

TEST_CASE("singular dense system") {
  ComplexMatrix m(3, 3);
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  std::vector<Complex> rhs(3, 1.0);
  CHECK_THROWS_AS(parallel::solve_dense(m, rhs), SingularMatrix);
  auto rhs2 = std::vector<Complex>(3, 1.0);
  CHECK_THROWS_AS(reference::solve_dense(m, rhs2), SingularMatrix);
}
