#ifndef TORICWEYL_SCALARS_HPP
#define TORICWEYL_SCALARS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace toricweyl {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Exact conversion; every finite double is a dyadic rational.
Rat rat_from_double(double x);

double rat_to_double(const Rat& r);

/// Largest integer <= r.
BigInt rat_floor(const Rat& r);

/// r reduced into [0, 1).
Rat rat_mod1(const Rat& r);

/// Parses "p", "p/q" or a plain decimal like "-0.25" into an exact rational.
std::optional<Rat> rat_from_string(const std::string& text);

std::string rat_to_string(const Rat& r);

/// Element of the Q-vector space spanned by {1, ln 2, ln 3, ln 5, ...}.
///
/// Log-weights C(x) of the built-in families live here: ln of a positive
/// integer decomposes over prime logarithms, and the witness C-systems can
/// then be solved exactly component by component (the basis is linearly
/// independent over Q).
class LogCombo {
 public:
  LogCombo() = default;
  explicit LogCombo(Rat rational_part) : rational_(std::move(rational_part)) {}

  /// ln(k) for an integer k >= 1, decomposed over prime logarithms.
  static LogCombo log_of_integer(const BigInt& k);

  /// ln C(n, k) via Legendre's formula on the prime exponents.
  static LogCombo log_binomial_coefficient(unsigned n, unsigned k);

  const Rat& rational_part() const { return rational_; }
  const std::map<std::int64_t, Rat>& log_terms() const { return logs_; }

  bool is_zero() const { return rational_ == 0 && logs_.empty(); }
  bool is_rational() const { return logs_.empty(); }

  double value() const;

  LogCombo& operator+=(const LogCombo& other);
  LogCombo& operator-=(const LogCombo& other);
  LogCombo& operator*=(const Rat& scale);

  friend LogCombo operator+(LogCombo a, const LogCombo& b) { return a += b; }
  friend LogCombo operator-(LogCombo a, const LogCombo& b) { return a -= b; }
  friend LogCombo operator*(const Rat& s, LogCombo a) { return a *= s; }
  friend bool operator==(const LogCombo& a, const LogCombo& b) {
    return a.rational_ == b.rational_ && a.logs_ == b.logs_;
  }

  std::string to_string() const;

 private:
  void prune();

  Rat rational_ = 0;
  std::map<std::int64_t, Rat> logs_;  // prime -> coefficient
};

/// Parses a C-entry token: "p/q", decimals, or "ln(k)" with optional sign.
std::optional<LogCombo> logcombo_from_string(const std::string& text);

}  // namespace toricweyl

#endif
