#ifndef SFBOREL_ASSOC_PRIMES_HPP
#define SFBOREL_ASSOC_PRIMES_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "sfborel/monomial.hpp"

namespace sfborel {

/// Support of a monomial prime <x_{j_1}, ..., x_{j_l}>, sorted ascending.
struct PrimeSupport {
  std::vector<Index> variables;

  friend bool operator==(const PrimeSupport&, const PrimeSupport&) = default;
  friend auto operator<=>(const PrimeSupport&, const PrimeSupport&) = default;
};

/// Inclusive range [first, last] standing for x_first ... x_last.
struct IndexRange {
  Index first = 1;
  Index last = 1;

  Index width() const noexcept { return last - first + 1; }
  SquareFreeMonomial to_monomial() const { return SquareFreeMonomial::range(first, last); }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// Upper estimate of the number of associated primes, kept as the list of
/// binomials C(n, k) it sums. `value` is absent past 10^18.
struct PrimeCountEstimate {
  std::vector<std::pair<Index, Index>> binomials;
  std::optional<std::uint64_t> value;

  bool exceeds(std::size_t cap) const { return !value || *value > cap; }

  /// "3" when small, otherwise e.g. "C(104348,33215)" or a sum of such terms.
  std::string to_string() const {
    if (value) return std::to_string(*value);
    std::string out;
    for (const auto& [n, k] : binomials) {
      if (!out.empty()) out += " + ";
      out += "C(" + std::to_string(n) + "," + std::to_string(k) + ")";
    }
    return out;
  }
};

struct AssociatedPrimeSystem {
  std::vector<PrimeSupport> primes;
  /// For systems built from base blocks: profile index j of the base block the prime
  /// comes from. Empty optional for oracle-derived systems.
  std::vector<std::optional<std::size_t>> base_index;
  Index n_eff = 0;
  bool truncated = false;
  PrimeCountEstimate predicted;
};

/// 0/1 incidence of variables 1..n_cols in each prime, one row per prime.
struct PrimeMatrix {
  std::size_t n_cols = 0;
  std::vector<std::vector<std::uint8_t>> rows;
};

/// Thrown when an enumeration or solver limit stops a computation.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Base blocks x_{t_j} ... x_{i_{t_j}} for j = k, k-1, ..., 0.
inline std::vector<IndexRange> base_blocks(const JumpProfile& profile) {
  std::vector<IndexRange> out;
  for (std::size_t j = profile.t.size(); j-- > 0;)
    out.push_back({static_cast<Index>(profile.t[j]), profile.it[j]});
  return out;
}

/// Ambient dimension for all downstream computation: the largest index.
inline Index reduce_variables(const SquareFreeMonomial& m) { return m.max_index(); }

namespace detail {

inline constexpr std::uint64_t kExactCountLimit = 1000000000000000000ULL;

// Exact C(n, k) when it is at most 10^18.
inline std::optional<std::uint64_t> small_binomial(Index n, Index k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  double log10_estimate = (std::lgamma(double(n) + 1) - std::lgamma(double(k) + 1) - std::lgamma(double(n - k) + 1)) / std::log(10.0);
  if (log10_estimate > 19.0) return std::nullopt;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  if (b > mpz_class(std::to_string(kExactCountLimit))) return std::nullopt;
  return std::stoull(b.get_str());
}

}  // namespace detail

/// Sum over base blocks of C(i_{t_j}, t_j - 1): the size of each block's
/// Borel closure. Every associated prime is counted, possibly with extras.
inline PrimeCountEstimate predict_prime_count(const JumpProfile& profile) {
  PrimeCountEstimate est;
  std::uint64_t total = 0;
  bool exact = true;
  for (std::size_t j = 0; j < profile.t.size(); ++j) {
    Index n = profile.it[j];
    Index k = static_cast<Index>(profile.t[j]) - 1;
    est.binomials.emplace_back(n, std::min(k, n - k));
    auto b = detail::small_binomial(n, k);
    if (!b || total + *b > detail::kExactCountLimit) exact = false;
    else total += *b;
  }
  if (exact) est.value = total;
  return est;
}

/// Associated primes of sfBorel(m): supports of the minimal generators of
/// the Borel ideal spanned by the base blocks. When the predicted count
/// exceeds `cap` nothing is enumerated and the system comes back truncated.
inline AssociatedPrimeSystem associated_primes(const SquareFreeMonomial& m,
                                               std::size_t cap = kDefaultEnumerationCap) {
  const JumpProfile profile = jump_profile(m);
  AssociatedPrimeSystem sys;
  sys.n_eff = reduce_variables(m);
  sys.predicted = predict_prime_count(profile);
  if (sys.predicted.exceeds(cap)) {
    sys.truncated = true;
    return sys;
  }

  std::vector<SquareFreeMonomial> bases;
  std::vector<std::size_t> base_j;
  for (std::size_t j = profile.t.size(); j-- > 0;) {
    bases.push_back(SquareFreeMonomial::range(static_cast<Index>(profile.t[j]), profile.it[j]));
    base_j.push_back(j);
  }
  GeneratorSet gens = sfborel_generators(bases, cap);
  sys.truncated = gens.truncated;
  for (auto& g : gens.monomials) {
    std::optional<std::size_t> owner;
    for (std::size_t b = 0; b < bases.size(); ++b) {
      if (!borel_dominates(g, bases[b])) continue;
      if (owner) throw std::logic_error("associated prime " + g.to_string() + " is a Borel move of two base blocks");
      owner = base_j[b];
    }
    if (!owner) throw std::logic_error("associated prime " + g.to_string() + " has no base block");
    sys.primes.push_back({std::vector<Index>(g.indices().begin(), g.indices().end())});
    sys.base_index.push_back(owner);
  }
  return sys;
}

/// Hard limit on the variable count for the exhaustive cover oracle.
inline constexpr Index kCoverOracleMaxVariables = 20;

/// Independent route to the associated primes: all inclusion-minimal
/// variable sets meeting every generator (minimal vertex covers of the
/// generator hypergraph), by exhaustive subset search over 1..n_eff.
inline AssociatedPrimeSystem minimal_cover_primes(const GeneratorSet& gens, Index n_eff = 0) {
  if (gens.truncated) throw std::invalid_argument("minimal_cover_primes: generator set is truncated");
  if (gens.monomials.empty()) throw std::invalid_argument("minimal_cover_primes: no generators");
  for (const auto& g : gens.monomials) n_eff = std::max(n_eff, g.max_index());
  if (n_eff > kCoverOracleMaxVariables)
    throw std::invalid_argument("minimal_cover_primes: " + std::to_string(n_eff) + " variables exceeds oracle limit");

  std::vector<std::uint32_t> edges;
  for (const auto& g : gens.monomials) {
    std::uint32_t mask = 0;
    for (Index i : g.indices()) mask |= 1u << (i - 1);
    edges.push_back(mask);
  }
  auto covers = [&](std::uint32_t set) {
    return std::all_of(edges.begin(), edges.end(), [&](std::uint32_t e) { return (e & set) != 0; });
  };

  AssociatedPrimeSystem sys;
  sys.n_eff = n_eff;
  const std::uint32_t full = n_eff == 32 ? ~0u : (1u << n_eff);
  for (std::uint32_t set = 1; set < full; ++set) {
    if (!covers(set)) continue;
    bool minimal = true;
    for (std::uint32_t rest = set; rest && minimal; rest &= rest - 1) {
      std::uint32_t bit = rest & (~rest + 1);
      if (covers(set & ~bit)) minimal = false;
    }
    if (!minimal) continue;
    PrimeSupport p;
    for (Index i = 1; i <= n_eff; ++i)
      if (set & (1u << (i - 1))) p.variables.push_back(i);
    sys.primes.push_back(std::move(p));
  }
  std::sort(sys.primes.begin(), sys.primes.end());
  sys.base_index.assign(sys.primes.size(), std::nullopt);
  sys.predicted.value = sys.primes.size();
  return sys;
}

inline PrimeMatrix prime_matrix(const AssociatedPrimeSystem& system) {
  if (system.truncated)
    throw std::invalid_argument("prime matrix needs a complete prime system (predicted " + system.predicted.to_string() + " primes)");
  PrimeMatrix a;
  a.n_cols = static_cast<std::size_t>(system.n_eff);
  for (const auto& p : system.primes) {
    std::vector<std::uint8_t> row(a.n_cols, 0);
    for (Index i : p.variables) row.at(static_cast<std::size_t>(i - 1)) = 1;
    a.rows.push_back(std::move(row));
  }
  return a;
}

/// Prime supports as a set, for order-insensitive comparison.
inline std::set<std::vector<Index>> prime_set(const AssociatedPrimeSystem& system) {
  std::set<std::vector<Index>> out;
  for (const auto& p : system.primes) out.insert(p.variables);
  return out;
}

}  // namespace sfborel

#endif  // SFBOREL_ASSOC_PRIMES_HPP
