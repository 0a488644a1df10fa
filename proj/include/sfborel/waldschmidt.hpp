#ifndef SFBOREL_WALDSCHMIDT_HPP
#define SFBOREL_WALDSCHMIDT_HPP

#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sfborel/assoc_primes.hpp"
#include "sfborel/covering_lp.hpp"
#include "sfborel/monomial.hpp"
#include "sfborel/rational.hpp"

namespace sfborel {

enum class Method {
  lp_exact,         // optimum of the covering LP over the associated primes
  closed_form,      // 1 + (s-1)/(i_{t_k} - t_k + 1), valid when t_0 <= i_{t_k}
  segment_upper,    // sum over the jump blocks, certified by an explicit y
  coarse_upper,     // (t_0 - t_ell + i_{t_ell}) / (i_{t_k} - t_k + 1)
  recursive_lower,  // prefix recursion on the first t_{ell+1} variables
};

inline std::string_view method_tag(Method m) {
  switch (m) {
    case Method::lp_exact: return "lp-exact";
    case Method::closed_form: return "closed-form";
    case Method::segment_upper: return "segment-upper";
    case Method::coarse_upper: return "coarse-upper";
    case Method::recursive_lower: return "recursive-lower";
  }
  return "unknown";
}

struct BoundInterval {
  Rational lower;
  Rational upper;
  Method lower_method = Method::recursive_lower;
  Method upper_method = Method::segment_upper;
};

struct ExactResult {
  Rational value;
  Method method = Method::lp_exact;
  std::optional<LPSolution> certificate;
};

/// y is constant (= value) on positions first..last, 1-based.
struct Segment {
  Index first;
  Index last;
  Rational value;
};

struct UpperBoundCertificate {
  std::vector<Rational> y;  // y[0] is the weight of x_1
  Rational a;               // i_{t_ell} - t_ell + 1
  std::vector<Segment> segments;
  Rational bound;
};

/// Exact Waldschmidt constant from the covering LP on the matrix of
/// associated primes, in i_s variables. Throws CapExceeded when the prime
/// system is truncated or the LP is over the solver limits.
inline ExactResult waldschmidt_lp(const SquareFreeMonomial& m, std::size_t cap = kDefaultEnumerationCap,
                                  const SolverLimits& limits = {}) {
  AssociatedPrimeSystem sys = associated_primes(m, cap);
  if (sys.truncated)
    throw CapExceeded("associated prime enumeration truncated: predicted " + sys.predicted.to_string() +
                      " primes exceeds cap " + std::to_string(cap));
  CoveringLP lp(prime_matrix(sys));
  LPSolution sol = solve_covering_lp(lp, limits);
  if (!verify_certificates(lp, sol)) throw std::logic_error("LP certificates failed verification for " + m.to_string());
  return {sol.value, Method::lp_exact, std::move(sol)};
}

/// Sum of block contributions:
///   (t_0 - t_ell)/D_ell + sum_{j=ell}^{k-1} (i_{t_j} - i_{t_{j+1}})/D_j + i_{t_k}/D_k
/// with D_j = i_{t_j} - t_j + 1.
inline Rational upper_bound(const SquareFreeMonomial& m) {
  const JumpProfile p = jump_profile(m);
  const std::size_t k = p.k(), ell = p.ell;
  Rational sum = make_rational(static_cast<long>(p.t[0] - p.t[ell]), static_cast<long>(p.width(ell)));
  for (std::size_t j = ell; j < k; ++j)
    sum += make_rational(static_cast<long>(p.it[j] - p.it[j + 1]), static_cast<long>(p.width(j)));
  sum += make_rational(static_cast<long>(p.it[k]), static_cast<long>(p.width(k)));
  return sum;
}

inline Rational coarse_upper_bound(const SquareFreeMonomial& m) {
  const JumpProfile p = jump_profile(m);
  const long num = static_cast<long>(p.t[0]) - static_cast<long>(p.t[p.ell]) + static_cast<long>(p.it[p.ell]);
  return make_rational(num, static_cast<long>(p.width(p.k())));
}

/// Builds the explicit covering vector behind upper_bound and checks, in
/// exact arithmetic, that it is nonincreasing on 1..i_{t_ell}, dominated by
/// y_{i_{t_ell}} afterwards, covers each diagonal block [t_j, i_{t_j}], and
/// sums to upper_bound(m). Those conditions imply A y >= 1 for the full
/// prime matrix. A failed check throws std::logic_error.
inline UpperBoundCertificate upper_bound_certificate(const SquareFreeMonomial& m) {
  const JumpProfile p = jump_profile(m);
  const std::size_t k = p.k(), ell = p.ell;
  UpperBoundCertificate cert;
  cert.a = p.width(ell);

  cert.segments.push_back({1, p.it[k], make_rational(1, static_cast<long>(p.width(k)))});
  for (std::size_t j = k; j-- > ell;)
    cert.segments.push_back({p.it[j + 1] + 1, p.it[j], make_rational(1, static_cast<long>(p.width(j)))});
  for (std::size_t j = ell; j-- > 0;) {
    Rational v = make_rational(static_cast<long>(p.t[j] - p.t[j + 1]), static_cast<long>(p.it[j] - p.it[j + 1]));
    cert.segments.push_back({p.it[j + 1] + 1, p.it[j], v / cert.a});
  }

  const Index n = m.max_index();
  cert.y.reserve(static_cast<std::size_t>(n));
  for (const auto& seg : cert.segments)
    for (Index i = seg.first; i <= seg.last; ++i) cert.y.push_back(seg.value);

  auto fail = [&](const std::string& what) {
    throw std::logic_error("upper bound certificate for " + m.to_string() + ": " + what);
  };
  if (static_cast<Index>(cert.y.size()) != n) fail("segments do not partition 1..i_s");
  auto y = [&](Index i) -> const Rational& { return cert.y[static_cast<std::size_t>(i - 1)]; };

  const Index pivot = p.it[ell];
  for (Index j = 1; j <= pivot && j < n; ++j)
    if (y(j) < y(j + 1)) fail("not nonincreasing at position " + std::to_string(j));
  for (Index j = pivot; j <= n; ++j)
    if (y(pivot) < y(j)) fail("position " + std::to_string(j) + " exceeds y at i_{t_ell}");
  for (std::size_t j = 0; j <= k; ++j) {
    Rational row = 0;
    for (Index i = static_cast<Index>(p.t[j]); i <= p.it[j]; ++i) row += y(i);
    if (row < 1) fail("block " + std::to_string(j) + " is not covered");
  }
  cert.bound = 0;
  for (const auto& v : cert.y) cert.bound += v;
  if (cert.bound != upper_bound(m)) fail("sum " + to_string(cert.bound) + " differs from the bound");
  return cert;
}

/// Closed form 1 + (s-1)/(i_{t_k} - t_k + 1), available when t_0 <= i_{t_k}.
inline std::optional<ExactResult> exact_formula(const SquareFreeMonomial& m) {
  const JumpProfile p = jump_profile(m);
  if (p.ell != p.k()) return std::nullopt;
  Rational v = 1 + make_rational(static_cast<long>(m.degree()) - 1, static_cast<long>(p.width(p.k())));
  return ExactResult{v, Method::closed_form, std::nullopt};
}

/// Recursive lower bound. With nu = i_{t_{ell+1}} + 1 and i_nu read from m:
///   lower(m) = lower(x_{i_1} ... x_{i_{t_{ell+1}}}) + 1 + (t_0 - nu)/(i_nu - nu + 1)
/// bottoming out at the closed form once ell = k.
inline Rational lower_bound(const SquareFreeMonomial& m) {
  Rational acc = 0;
  SquareFreeMonomial cur = m;
  while (true) {
    const JumpProfile p = jump_profile(cur);
    if (p.ell == p.k()) return acc + exact_formula(cur)->value;
    const Index nu = *p.nu;
    const Index t0 = static_cast<Index>(p.t[0]);
    acc += 1 + make_rational(static_cast<long>(t0 - nu), static_cast<long>(cur.at(static_cast<std::size_t>(nu)) - nu + 1));
    cur = cur.prefix(p.t[p.ell + 1]);
  }
}

/// m with its last index moved up by r.
inline SquareFreeMonomial shift_last(const SquareFreeMonomial& m, Index r) {
  if (r < 0) throw std::invalid_argument("shift must be nonnegative");
  std::vector<Index> v(m.indices().begin(), m.indices().end());
  v.back() += r;
  return SquareFreeMonomial(std::move(v));
}

/// Monomial whose square-free principal Borel ideal has Waldschmidt
/// constant a/b: x_1 when a = b, else x_b x_{b+1} ... x_a after reducing a/b.
inline SquareFreeMonomial construct_for_rational(long a, long b) {
  if (a < 1 || b < 1) throw std::invalid_argument("construct_for_rational needs positive a and b");
  if (a < b) throw std::invalid_argument("target a/b must be at least 1");
  const long g = std::gcd(a, b);
  a /= g;
  b /= g;
  if (a == b) return SquareFreeMonomial({1});
  return SquareFreeMonomial::range(b, a);
}

inline SquareFreeMonomial construct_for_rational(const Rational& target) {
  if (target < 1) throw std::invalid_argument("target must be at least 1");
  if (!target.get_num().fits_slong_p() || !target.get_den().fits_slong_p())
    throw std::invalid_argument("target numerator/denominator too large");
  return construct_for_rational(target.get_num().get_si(), target.get_den().get_si());
}

using AutoResult = std::variant<ExactResult, BoundInterval>;

inline BoundInterval bound_interval(const SquareFreeMonomial& m) {
  BoundInterval b{lower_bound(m), upper_bound(m), Method::recursive_lower, Method::segment_upper};
  if (b.lower > b.upper)
    throw std::logic_error("lower bound " + to_string(b.lower) + " exceeds upper bound " + to_string(b.upper) +
                           " for " + m.to_string());
  return b;
}

/// Closed form when it applies, else the LP when the predicted prime count
/// fits `cap`, else the [lower, upper] interval.
inline AutoResult waldschmidt_auto(const SquareFreeMonomial& m, std::size_t cap = kDefaultEnumerationCap,
                                   const SolverLimits& limits = {}) {
  if (auto exact = exact_formula(m)) return *exact;
  if (!predict_prime_count(jump_profile(m)).exceeds(cap)) {
    try {
      return waldschmidt_lp(m, cap, limits);
    } catch (const CapExceeded&) {
    }
  }
  return bound_interval(m);
}

}  // namespace sfborel

#endif  // SFBOREL_WALDSCHMIDT_HPP
