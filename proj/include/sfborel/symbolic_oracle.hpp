#ifndef SFBOREL_SYMBOLIC_ORACLE_HPP
#define SFBOREL_SYMBOLIC_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sfborel/assoc_primes.hpp"
#include "sfborel/covering_lp.hpp"
#include "sfborel/monomial.hpp"
#include "sfborel/rational.hpp"
#include "sfborel/waldschmidt.hpp"

namespace sfborel {

using ExponentVector = std::vector<unsigned>;

inline std::size_t alpha_ideal(const GeneratorSet& gens) {
  if (gens.truncated) throw std::invalid_argument("alpha_ideal: generator set is truncated");
  if (gens.monomials.empty()) throw std::invalid_argument("alpha_ideal: no generators");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& g : gens.monomials) best = std::min(best, g.degree());
  return best;
}

struct SymbolicAlphaQuery {
  AssociatedPrimeSystem primes;
  unsigned s = 1;
};

/// Raised when an exhaustive search would visit more nodes than allowed.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleBudget {
  std::uint64_t max_nodes = 50000000;
};

namespace detail {

// Is there an integral a >= 0 with sum(a) == total and sum_{j in P} a_j >= s
// for every prime P? Depth-first over coordinates; a branch is cut when some
// prime whose variables are all assigned is still short.
class CoveringSearch {
 public:
  CoveringSearch(const AssociatedPrimeSystem& sys, unsigned s, OracleBudget budget)
      : n_(static_cast<std::size_t>(sys.n_eff)), s_(s), budget_(budget), closes_at_(n_), a_(n_, 0) {
    for (const auto& p : sys.primes) {
      std::vector<std::size_t> vars;
      for (Index i : p.variables) vars.push_back(static_cast<std::size_t>(i - 1));
      closes_at_[vars.back()].push_back(primes_.size());
      primes_.push_back(std::move(vars));
    }
  }

  bool feasible(unsigned total) {
    std::fill(a_.begin(), a_.end(), 0u);
    return assign(0, total);
  }

 private:
  bool assign(std::size_t pos, unsigned remaining) {
    if (++nodes_ > budget_.max_nodes) throw BudgetExceeded("symbolic power search exceeded node budget");
    if (pos + 1 == n_) {
      a_[pos] = remaining;
      return closed_ok(pos);
    }
    for (unsigned v = 0; v <= remaining; ++v) {
      a_[pos] = v;
      if (!closed_ok(pos)) continue;
      if (assign(pos + 1, remaining - v)) return true;
    }
    return false;
  }

  bool closed_ok(std::size_t pos) const {
    for (std::size_t pi : closes_at_[pos]) {
      unsigned sum = 0;
      for (std::size_t j : primes_[pi]) sum += a_[j];
      if (sum < s_) return false;
    }
    return true;
  }

  std::size_t n_;
  unsigned s_;
  OracleBudget budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<std::size_t>> primes_;
  std::vector<std::vector<std::size_t>> closes_at_;
  std::vector<unsigned> a_;
};

}  // namespace detail

/// alpha(I^(s)): the least total degree of x^a with sum_{j in P} a_j >= s
/// for every associated prime P.
///
/// The search starts at ceil(s * LP optimum). If that total is feasible it
/// walks down until infeasible, otherwise up until feasible, so a wrong LP
/// value can only cost time, never correctness.
inline unsigned alpha_symbolic(const SymbolicAlphaQuery& q, OracleBudget budget = {}) {
  if (q.primes.truncated) throw std::invalid_argument("alpha_symbolic: prime system is truncated");
  if (q.s < 1) throw std::invalid_argument("alpha_symbolic: s must be positive");
  if (q.primes.primes.empty()) throw std::invalid_argument("alpha_symbolic: no primes");

  CoveringLP lp(prime_matrix(q.primes));
  Rational start_q = Rational(q.s) * solve_covering_lp(lp).value;
  unsigned start = static_cast<unsigned>(ceil(start_q).get_ui());
  // s on every variable always works.
  const unsigned ceiling = q.s * static_cast<unsigned>(q.primes.n_eff);
  start = std::min(std::max(start, 1u), ceiling);

  detail::CoveringSearch search(q.primes, q.s, budget);
  unsigned total = start;
  if (search.feasible(total)) {
    while (total > 0 && search.feasible(total - 1)) --total;
    return total;
  }
  while (!search.feasible(++total)) {
    if (total > ceiling) throw std::logic_error("alpha_symbolic: no feasible degree up to s * n");
  }
  return total;
}

inline unsigned alpha_symbolic(const AssociatedPrimeSystem& primes, unsigned s, OracleBudget budget = {}) {
  return alpha_symbolic(SymbolicAlphaQuery{primes, s}, budget);
}

struct BruteforceLimits {
  Index max_variables = 6;
  unsigned max_s = 3;
  unsigned max_degree = 18;
};

/// Every exponent vector of total degree <= degree_cap whose monomial lies
/// in P^s for each prime P, where P^s is expanded to its generators (all
/// products of s variables of P) and membership is tested by divisibility.
/// Sorted lexicographically.
inline std::vector<ExponentVector> symbolic_power_members_bruteforce(const AssociatedPrimeSystem& primes, unsigned s,
                                                                     unsigned degree_cap,
                                                                     const BruteforceLimits& limits = {}) {
  if (primes.truncated) throw std::invalid_argument("bruteforce: prime system is truncated");
  if (primes.n_eff > limits.max_variables || s > limits.max_s || degree_cap > limits.max_degree || s < 1)
    throw std::invalid_argument("bruteforce: instance beyond limits (n <= " + std::to_string(limits.max_variables) +
                                ", 1 <= s <= " + std::to_string(limits.max_s) +
                                ", degree cap <= " + std::to_string(limits.max_degree) + ")");
  const std::size_t n = static_cast<std::size_t>(primes.n_eff);

  // Generators of each P^s as exponent vectors.
  std::vector<std::vector<ExponentVector>> power_gens;
  for (const auto& p : primes.primes) {
    std::vector<ExponentVector> gens;
    ExponentVector e(n, 0);
    auto expand = [&](auto&& self, std::size_t from, unsigned left) -> void {
      if (left == 0) {
        gens.push_back(e);
        return;
      }
      for (std::size_t r = from; r < p.variables.size(); ++r) {
        auto j = static_cast<std::size_t>(p.variables[r] - 1);
        ++e[j];
        self(self, r, left - 1);
        --e[j];
      }
    };
    expand(expand, 0, s);
    power_gens.push_back(std::move(gens));
  }

  auto divides = [](const ExponentVector& g, const ExponentVector& a) {
    for (std::size_t j = 0; j < g.size(); ++j)
      if (g[j] > a[j]) return false;
    return true;
  };

  std::vector<ExponentVector> members;
  ExponentVector a(n, 0);
  auto walk = [&](auto&& self, std::size_t pos, unsigned left) -> void {
    if (pos == n) {
      for (const auto& gens : power_gens)
        if (std::none_of(gens.begin(), gens.end(), [&](const ExponentVector& g) { return divides(g, a); })) return;
      members.push_back(a);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      a[pos] = v;
      self(self, pos + 1, left - v);
    }
    a[pos] = 0;
  };
  walk(walk, 0, degree_cap);
  std::sort(members.begin(), members.end());
  return members;
}

struct ConvergenceRow {
  unsigned s = 0;
  std::optional<unsigned> alpha;
  Rational ratio;
  bool below_reference = false;
  std::string error;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  Rational reference;
  bool has_violation = false;
};

/// alpha(I^(s))/s for s = 1..s_max against the LP value of sfBorel(m).
/// A row whose search runs out of budget carries the error and no value.
inline ConvergenceReport convergence_report(const SquareFreeMonomial& m, unsigned s_max,
                                            std::size_t cap = kDefaultEnumerationCap, OracleBudget budget = {}) {
  if (s_max < 1) throw std::invalid_argument("convergence_report: s_max must be positive");
  AssociatedPrimeSystem sys = associated_primes(m, cap);
  ConvergenceReport report;
  report.reference = waldschmidt_lp(m, cap).value;
  for (unsigned s = 1; s <= s_max; ++s) {
    ConvergenceRow row;
    row.s = s;
    try {
      row.alpha = alpha_symbolic(sys, s, budget);
      row.ratio = make_rational(static_cast<long>(*row.alpha), static_cast<long>(s));
      row.below_reference = row.ratio < report.reference;
      report.has_violation |= row.below_reference;
    } catch (const BudgetExceeded& e) {
      row.error = e.what();
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace sfborel

#endif  // SFBOREL_SYMBOLIC_ORACLE_HPP
