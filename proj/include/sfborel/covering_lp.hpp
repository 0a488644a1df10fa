#ifndef SFBOREL_COVERING_LP_HPP
#define SFBOREL_COVERING_LP_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sfborel/assoc_primes.hpp"
#include "sfborel/rational.hpp"

namespace sfborel {

/// min 1'y  s.t.  A y >= 1, y >= 0  over a 0/1 matrix A.
struct CoveringLP {
  std::size_t n_vars = 0;
  std::vector<std::vector<std::uint8_t>> rows;

  CoveringLP() = default;
  CoveringLP(std::size_t n, std::vector<std::vector<std::uint8_t>> r) : n_vars(n), rows(std::move(r)) { validate(); }
  explicit CoveringLP(const PrimeMatrix& a) : CoveringLP(a.n_cols, a.rows) {}

  void validate() const {
    if (n_vars < 1) throw std::invalid_argument("covering LP needs at least one variable");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != n_vars) throw std::invalid_argument("covering LP row " + std::to_string(i) + " has wrong length");
      bool nonzero = false;
      for (auto v : rows[i]) {
        if (v > 1) throw std::invalid_argument("covering LP entries must be 0 or 1");
        nonzero |= v == 1;
      }
      if (!nonzero) throw std::invalid_argument("covering LP row " + std::to_string(i) + " is zero");
    }
  }
};

/// Optimal covering vector `primal`, optimal packing vector `dual`
/// (A'z <= 1, z >= 0), and their common objective value.
struct LPSolution {
  Rational value;
  std::vector<Rational> primal;
  std::vector<Rational> dual;
  std::size_t pivots = 0;
};

struct SolverLimits {
  std::size_t max_rows = 50000;
  std::size_t max_cols = 2000;
  // Bland's rule terminates; hitting this means a bug.
  std::size_t max_pivots = 10000000;
};

/// Checks primal feasibility, dual feasibility and equal objectives, all in
/// exact arithmetic. Independent of how the solution was produced.
inline bool verify_certificates(const CoveringLP& lp, const LPSolution& sol) {
  if (sol.primal.size() != lp.n_vars || sol.dual.size() != lp.rows.size())
    throw std::invalid_argument("certificate dimensions do not match the LP");
  Rational primal_sum = 0, dual_sum = 0;
  for (const auto& y : sol.primal) {
    if (y < 0) return false;
    primal_sum += y;
  }
  for (const auto& z : sol.dual) {
    if (z < 0) return false;
    dual_sum += z;
  }
  for (const auto& row : lp.rows) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < lp.n_vars; ++j)
      if (row[j]) lhs += sol.primal[j];
    if (lhs < 1) return false;
  }
  for (std::size_t j = 0; j < lp.n_vars; ++j) {
    Rational load = 0;
    for (std::size_t i = 0; i < lp.rows.size(); ++i)
      if (lp.rows[i][j]) load += sol.dual[i];
    if (load > 1) return false;
  }
  return primal_sum == sol.value && dual_sum == sol.value;
}

/// Exact optimum of a covering LP with both certificates.
///
/// Runs the primal simplex on the packing dual  max 1'z, A'z <= 1, z >= 0,
/// starting from z = 0 with all slacks basic. The basis inverse is kept
/// explicitly (n_vars x n_vars). Entering and leaving variables follow
/// Bland's rule, structurals before slacks. At optimality the simplex
/// multipliers are the covering solution.
inline LPSolution solve_covering_lp(const CoveringLP& lp, const SolverLimits& limits = {}) {
  lp.validate();
  const std::size_t n = lp.n_vars;
  const std::size_t m = lp.rows.size();
  if (m > limits.max_rows || n > limits.max_cols)
    throw CapExceeded("covering LP of size " + std::to_string(m) + " x " + std::to_string(n) +
                      " exceeds solver cap " + std::to_string(limits.max_rows) + " x " + std::to_string(limits.max_cols));

  // Column q of the packing constraint matrix: supports of covering rows for
  // q < m, unit vectors for slacks.
  std::vector<std::vector<std::size_t>> support(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (lp.rows[i][j]) support[i].push_back(j);

  const std::size_t total = m + n;
  std::vector<std::size_t> basis(n);
  std::vector<bool> is_basic(total, false);
  for (std::size_t r = 0; r < n; ++r) {
    basis[r] = m + r;
    is_basic[m + r] = true;
  }
  std::vector<std::vector<Rational>> binv(n, std::vector<Rational>(n, 0));
  for (std::size_t r = 0; r < n; ++r) binv[r][r] = 1;
  std::vector<Rational> xb(n, 1);
  auto cost = [m](std::size_t q) { return q < m ? 1 : 0; };

  std::vector<Rational> y(n), d(n);
  std::size_t pivots = 0;
  while (true) {
    for (std::size_t j = 0; j < n; ++j) {
      y[j] = 0;
      for (std::size_t r = 0; r < n; ++r)
        if (cost(basis[r])) y[j] += binv[r][j];
    }

    std::size_t entering = total;
    for (std::size_t q = 0; q < total && entering == total; ++q) {
      if (is_basic[q]) continue;
      Rational reduced = cost(q);
      if (q < m) {
        for (std::size_t j : support[q]) reduced -= y[j];
      } else {
        reduced -= y[q - m];
      }
      if (reduced > 0) entering = q;
    }
    if (entering == total) break;

    for (std::size_t r = 0; r < n; ++r) {
      d[r] = 0;
      if (entering < m) {
        for (std::size_t j : support[entering]) d[r] += binv[r][j];
      } else {
        d[r] = binv[r][entering - m];
      }
    }

    std::size_t leave = n;
    Rational best_ratio;
    for (std::size_t r = 0; r < n; ++r) {
      if (d[r] <= 0) continue;
      Rational ratio = xb[r] / d[r];
      if (leave == n || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == n) throw std::logic_error("packing LP reported unbounded; constraint rows must be nonzero");

    const Rational pivot = d[leave];
    for (std::size_t j = 0; j < n; ++j) binv[leave][j] /= pivot;
    xb[leave] = best_ratio;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == leave || d[r] == 0) continue;
      const Rational factor = d[r];
      for (std::size_t j = 0; j < n; ++j) binv[r][j] -= factor * binv[leave][j];
      xb[r] -= factor * best_ratio;
    }
    is_basic[basis[leave]] = false;
    is_basic[entering] = true;
    basis[leave] = entering;

    if (++pivots > limits.max_pivots)
      throw std::logic_error("simplex pivot guard exceeded (cycling should be impossible under Bland's rule)");
  }

  LPSolution sol;
  sol.pivots = pivots;
  sol.primal = y;
  sol.dual.assign(m, 0);
  for (std::size_t r = 0; r < n; ++r)
    if (basis[r] < m) sol.dual[basis[r]] = xb[r];
  sol.value = 0;
  for (const auto& z : sol.dual) sol.value += z;
  return sol;
}

}  // namespace sfborel

#endif  // SFBOREL_COVERING_LP_HPP
