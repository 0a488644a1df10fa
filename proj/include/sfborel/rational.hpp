#ifndef SFBOREL_RATIONAL_HPP
#define SFBOREL_RATIONAL_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sfborel {

/// Exact rational number. GMP keeps every value in lowest terms with a
/// positive denominator once canonicalized, which all constructors below do.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// "p/q" in lowest terms, or "p" when the denominator is one.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "a/b" or "a" with optional sign; the result is reduced.
inline Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!digits(num) || !digits(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("malformed fraction: '" + std::string(text) + "'");
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  BigInt a(n, 10), b(std::string(den), 10);
  return make_rational(a, b);
}

inline BigInt ceil(const Rational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

/// Decimal rendering with `significant` significant digits, rounded half away
/// from zero. Display only; never parsed back.
inline std::string to_decimal(const Rational& q, int significant = 12) {
  if (significant < 1) throw std::invalid_argument("significant digits must be positive");
  if (q == 0) return "0";
  Rational a = abs(q);
  // Find e with 10^(e-1) <= a < 10^e.
  long e = 0;
  Rational ten(10);
  Rational scaled = a;
  while (scaled >= 1) { scaled /= ten; ++e; }
  while (scaled < Rational(1, 10)) { scaled *= ten; --e; }
  // scaled in [1/10, 1); take `significant` digits.
  BigInt pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(significant));
  Rational digits_q = scaled * Rational(pow10) + Rational(1, 2);
  BigInt digits = digits_q.get_num() / digits_q.get_den();
  if (digits == pow10) {  // rounding carried into a new digit
    digits /= 10;
    ++e;
  }
  std::string ds = digits.get_str();
  std::string out;
  if (q < 0) out.push_back('-');
  if (e <= 0) {
    out += "0.";
    out.append(static_cast<std::size_t>(-e), '0');
    out += ds;
  } else if (static_cast<std::size_t>(e) >= ds.size()) {
    out += ds;
    out.append(static_cast<std::size_t>(e) - ds.size(), '0');
  } else {
    out += ds.substr(0, static_cast<std::size_t>(e));
    out.push_back('.');
    out += ds.substr(static_cast<std::size_t>(e));
  }
  // Trim trailing zeros after the decimal point.
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return out;
}

}  // namespace sfborel

#endif  // SFBOREL_RATIONAL_HPP
