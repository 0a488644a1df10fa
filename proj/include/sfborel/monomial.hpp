#ifndef SFBOREL_MONOMIAL_HPP
#define SFBOREL_MONOMIAL_HPP

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sfborel {

/// Variable subscript (x_1 has index 1).
using Index = std::int64_t;

/// Default bound on the number of monomials an enumeration may produce.
inline constexpr std::size_t kDefaultEnumerationCap = 200000;

/// A square-free monomial x_{i_1} x_{i_2} ... x_{i_s} with i_1 < ... < i_s,
/// all indices >= 1. The unit monomial is not representable.
class SquareFreeMonomial {
 public:
  explicit SquareFreeMonomial(std::vector<Index> indices) : indices_(std::move(indices)) {
    if (indices_.empty()) throw std::invalid_argument("monomial must have at least one variable");
    if (indices_.front() < 1) throw std::invalid_argument("variable indices must be positive");
    for (std::size_t r = 1; r < indices_.size(); ++r)
      if (indices_[r - 1] >= indices_[r])
        throw std::invalid_argument("variable indices must be strictly increasing");
  }

  /// x_first x_{first+1} ... x_last
  static SquareFreeMonomial range(Index first, Index last) {
    if (first < 1 || last < first) throw std::invalid_argument("invalid index range");
    std::vector<Index> v;
    v.reserve(static_cast<std::size_t>(last - first + 1));
    for (Index i = first; i <= last; ++i) v.push_back(i);
    return SquareFreeMonomial(std::move(v));
  }

  std::span<const Index> indices() const noexcept { return indices_; }
  std::size_t degree() const noexcept { return indices_.size(); }
  Index max_index() const noexcept { return indices_.back(); }

  /// 1-based position access: at(j) == i_j.
  Index at(std::size_t position) const {
    if (position < 1 || position > indices_.size()) throw std::out_of_range("monomial position");
    return indices_[position - 1];
  }

  /// Divisibility of square-free monomials is inclusion of supports.
  bool divides(const SquareFreeMonomial& other) const {
    return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(), indices_.end());
  }

  /// The first `count` variables, x_{i_1} ... x_{i_count}.
  SquareFreeMonomial prefix(std::size_t count) const {
    if (count < 1 || count > indices_.size()) throw std::out_of_range("prefix length");
    return SquareFreeMonomial(std::vector<Index>(indices_.begin(), indices_.begin() + static_cast<std::ptrdiff_t>(count)));
  }

  /// Canonical text: comma separated, runs of three or more consecutive
  /// indices written "a..b". Round-trips through parse_monomial.
  std::string to_string() const {
    std::string out;
    std::size_t r = 0;
    while (r < indices_.size()) {
      std::size_t run_end = r;
      while (run_end + 1 < indices_.size() && indices_[run_end + 1] == indices_[run_end] + 1) ++run_end;
      if (!out.empty()) out.push_back(',');
      if (run_end - r >= 2) {
        out += std::to_string(indices_[r]) + ".." + std::to_string(indices_[run_end]);
        r = run_end + 1;
      } else {
        out += std::to_string(indices_[r]);
        ++r;
      }
    }
    return out;
  }

  friend bool operator==(const SquareFreeMonomial&, const SquareFreeMonomial&) = default;
  friend auto operator<=>(const SquareFreeMonomial& a, const SquareFreeMonomial& b) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    return a.indices_ <=> b.indices_;
  }

 private:
  std::vector<Index> indices_;
};

/// Parses "2,3,5", "33215..104348" or mixtures like "3..5,8..10".
/// Whitespace around tokens is ignored; duplicates are rejected.
inline SquareFreeMonomial parse_monomial(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) s.remove_suffix(1);
    return s;
  };
  auto number = [&](std::string_view s) -> Index {
    s = trim(s);
    if (s.empty()) throw std::invalid_argument("malformed monomial: empty index");
    if (s.front() == '-') throw std::invalid_argument("malformed monomial: negative index '" + std::string(s) + "'");
    Index v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw std::invalid_argument("malformed monomial: bad index '" + std::string(s) + "'");
    if (v < 1) throw std::invalid_argument("malformed monomial: index must be positive");
    return v;
  };

  std::vector<Index> values;
  std::string_view rest = trim(text);
  if (rest.empty()) throw std::invalid_argument("malformed monomial: empty set");
  while (true) {
    auto comma = rest.find(',');
    std::string_view token = trim(rest.substr(0, comma));
    if (auto dots = token.find(".."); dots != std::string_view::npos) {
      Index a = number(token.substr(0, dots));
      Index b = number(token.substr(dots + 2));
      if (a > b) throw std::invalid_argument("malformed monomial: range " + std::string(token) + " is decreasing");
      for (Index i = a; i <= b; ++i) values.push_back(i);
    } else {
      values.push_back(number(token));
    }
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  std::sort(values.begin(), values.end());
  if (auto dup = std::adjacent_find(values.begin(), values.end()); dup != values.end())
    throw std::invalid_argument("duplicate index " + std::to_string(*dup) + " (monomial must be square-free)");
  return SquareFreeMonomial(std::move(values));
}

/// Positions where the subscripts of m jump, read right to left, and the
/// derived indices used by the bounds.
///
/// t = (t_0, ..., t_k) with t_0 = s and t_r the largest j < t_{r-1} with
/// i_j < i_{j+1} - 1; it = (i_{t_0}, ..., i_{t_k}). ell is the smallest
/// index with i_{t_{ell+1}} < t_0 <= i_{t_ell} (taking i_{t_{k+1}} = 0).
/// When ell < k, nu = i_{t_{ell+1}} + 1 and nu_anchor is the largest p with
/// nu <= t_p.
struct JumpProfile {
  std::vector<std::size_t> t;
  std::vector<Index> it;
  std::size_t ell = 0;
  std::optional<Index> nu;
  std::optional<std::size_t> nu_anchor;

  std::size_t k() const noexcept { return t.size() - 1; }

  /// Width of the j-th base block: i_{t_j} - t_j + 1.
  Index width(std::size_t j) const { return it.at(j) - static_cast<Index>(t.at(j)) + 1; }
};

inline JumpProfile jump_profile(const SquareFreeMonomial& m) {
  JumpProfile p;
  const std::size_t s = m.degree();
  p.t.push_back(s);
  for (std::size_t j = s - 1; j >= 1; --j)
    if (m.at(j) < m.at(j + 1) - 1) p.t.push_back(j);
  for (std::size_t tj : p.t) p.it.push_back(m.at(tj));

  const Index t0 = static_cast<Index>(s);
  const std::size_t k = p.k();
  p.ell = k;
  for (std::size_t j = 0; j <= k; ++j) {
    Index next = j + 1 <= k ? p.it[j + 1] : 0;
    if (next < t0 && t0 <= p.it[j]) {
      p.ell = j;
      break;
    }
  }

  if (p.ell < k) {
    const Index nu = p.it[p.ell + 1] + 1;
    std::size_t anchor = 0;
    for (std::size_t j = 0; j <= k; ++j)
      if (nu <= static_cast<Index>(p.t[j])) anchor = j;
    Index below = anchor + 1 <= k ? static_cast<Index>(p.t[anchor + 1]) : 0;
    if (!(below < nu && nu <= static_cast<Index>(p.t[anchor])) ||
        m.at(static_cast<std::size_t>(nu)) - nu + 1 != p.width(anchor))
      throw std::logic_error("jump profile: nu bracket check failed for " + m.to_string());
    p.nu = nu;
    p.nu_anchor = anchor;
  }
  return p;
}

/// True iff deg u == deg v and u is reachable from v by square-free Borel
/// moves, i.e. u_r <= v_r for every sorted position r.
inline bool borel_dominates(const SquareFreeMonomial& u, const SquareFreeMonomial& v) {
  if (u.degree() != v.degree()) return false;
  auto a = u.indices(), b = v.indices();
  for (std::size_t r = 0; r < a.size(); ++r)
    if (a[r] > b[r]) return false;
  return true;
}

struct GeneratorSet {
  std::vector<SquareFreeMonomial> monomials;
  bool truncated = false;
};

/// Elements of `set` not strictly divisible by another element. Duplicates
/// collapse; output is sorted by (degree, indices).
inline std::vector<SquareFreeMonomial> minimal_elements(std::vector<SquareFreeMonomial> set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  std::vector<SquareFreeMonomial> kept;
  for (const auto& cand : set) {
    bool minimal = std::none_of(kept.begin(), kept.end(), [&](const SquareFreeMonomial& g) {
      return g.degree() < cand.degree() && g.divides(cand);
    });
    if (minimal) kept.push_back(cand);
  }
  return kept;
}

namespace detail {

// Calls visit(u) for every square-free u with u_r <= bound_r, in lex order.
// Stops early when visit returns false; returns false in that case.
template <typename Visit>
bool for_each_dominated(std::span<const Index> bound, Visit&& visit) {
  const std::size_t d = bound.size();
  std::vector<Index> u(d);
  // Iterative odometer over strictly increasing sequences.
  std::size_t r = 0;
  Index next = 1;
  while (true) {
    if (r == d) {
      if (!visit(std::span<const Index>(u))) return false;
      --r;
      next = u[r] + 1;
      continue;
    }
    // Enough room for the remaining positions is implied by bound being
    // strictly increasing.
    if (next <= bound[r]) {
      u[r] = next;
      ++r;
      next = u[r - 1] + 1;
    } else {
      if (r == 0) return true;
      --r;
      next = u[r] + 1;
    }
  }
}

}  // namespace detail

/// Minimal generators of the square-free Borel ideal generated by `seeds`.
/// Stops with truncated = true once more than `cap` candidate monomials have
/// been produced.
inline GeneratorSet sfborel_generators(std::span<const SquareFreeMonomial> seeds,
                                       std::size_t cap = kDefaultEnumerationCap) {
  if (seeds.empty()) throw std::invalid_argument("sfborel_generators needs at least one seed");
  GeneratorSet out;
  std::size_t produced = 0;

  // u strictly contains a closure element of degree d from seed v iff its d
  // smallest indices are dominated by v.
  auto has_smaller_divisor = [&](std::span<const Index> u) {
    for (const auto& v : seeds) {
      if (v.degree() >= u.size()) continue;
      auto b = v.indices();
      bool dominated = true;
      for (std::size_t r = 0; r < b.size() && dominated; ++r) dominated = u[r] <= b[r];
      if (dominated) return true;
    }
    return false;
  };

  for (const auto& seed : seeds) {
    bool complete = detail::for_each_dominated(seed.indices(), [&](std::span<const Index> u) {
      if (++produced > cap) return false;
      if (!has_smaller_divisor(u)) out.monomials.emplace_back(std::vector<Index>(u.begin(), u.end()));
      return true;
    });
    if (!complete) {
      out.truncated = true;
      break;
    }
  }
  std::sort(out.monomials.begin(), out.monomials.end());
  out.monomials.erase(std::unique(out.monomials.begin(), out.monomials.end()), out.monomials.end());
  return out;
}

inline GeneratorSet sfborel_generators(const SquareFreeMonomial& seed, std::size_t cap = kDefaultEnumerationCap) {
  return sfborel_generators(std::span<const SquareFreeMonomial>(&seed, 1), cap);
}

}  // namespace sfborel

#endif  // SFBOREL_MONOMIAL_HPP
