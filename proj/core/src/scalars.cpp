#include "toricweyl/scalars.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "toricweyl/errors.hpp"

namespace toricweyl {

Rat rat_from_double(double x) {
  if (!std::isfinite(x)) fail(ErrorCode::Parse, "non-finite value");
  if (x == 0.0) return Rat(0);
  int exp = 0;
  double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
  // 53 doublings make the mantissa integral.
  BigInt num = BigInt(std::llround(std::ldexp(mant, 53)));
  exp -= 53;
  Rat r(num);
  if (exp > 0) {
    r *= Rat(BigInt(1) << exp);
  } else if (exp < 0) {
    r /= Rat(BigInt(1) << (-exp));
  }
  return r;
}

double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

BigInt rat_floor(const Rat& r) {
  BigInt num = numerator(r);
  BigInt den = denominator(r);  // > 0 by normalization
  BigInt q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

Rat rat_mod1(const Rat& r) { return r - Rat(rat_floor(r)); }

std::optional<Rat> rat_from_string(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) return std::nullopt;

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (num.empty() || den.empty()) return std::nullopt;
    try {
      BigInt n(num), d(den);
      if (d == 0) return std::nullopt;
      return Rat(n, d);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
      s.find('E') != std::string::npos) {
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == nullptr || *end != '\0') return std::nullopt;
    if (!std::isfinite(v)) return std::nullopt;
    return rat_from_double(v);
  }

  try {
    return Rat(BigInt(s));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::string rat_to_string(const Rat& r) {
  std::ostringstream out;
  out << numerator(r);
  if (denominator(r) != 1) out << '/' << denominator(r);
  return out.str();
}

void LogCombo::prune() {
  for (auto it = logs_.begin(); it != logs_.end();) {
    if (it->second == 0)
      it = logs_.erase(it);
    else
      ++it;
  }
}

LogCombo LogCombo::log_of_integer(const BigInt& k) {
  if (k < 1) fail(ErrorCode::Parse, "ln of non-positive integer");
  LogCombo out;
  BigInt rest = k;
  for (BigInt p = 2; p * p <= rest; ++p) {
    while (rest % p == 0) {
      out.logs_[p.convert_to<std::int64_t>()] += 1;
      rest /= p;
    }
  }
  if (rest > 1) out.logs_[rest.convert_to<std::int64_t>()] += 1;
  out.prune();
  return out;
}

LogCombo LogCombo::log_binomial_coefficient(unsigned n, unsigned k) {
  if (k > n) fail(ErrorCode::Parse, "binomial coefficient with k > n");
  LogCombo out;
  for (std::int64_t p = 2; p <= static_cast<std::int64_t>(n); ++p) {
    bool prime = true;
    for (std::int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    // Legendre: v_p(n!) = sum_j floor(n/p^j)
    std::int64_t e = 0;
    for (std::int64_t q = p; q <= static_cast<std::int64_t>(n); q *= p) {
      e += n / q - k / q - (n - k) / q;
      if (q > static_cast<std::int64_t>(n) / p) break;
    }
    if (e != 0) out.logs_[p] = Rat(e);
  }
  return out;
}

double LogCombo::value() const {
  double v = rat_to_double(rational_);
  for (const auto& [prime, coeff] : logs_)
    v += rat_to_double(coeff) * std::log(static_cast<double>(prime));
  return v;
}

LogCombo& LogCombo::operator+=(const LogCombo& other) {
  rational_ += other.rational_;
  for (const auto& [p, c] : other.logs_) logs_[p] += c;
  prune();
  return *this;
}

LogCombo& LogCombo::operator-=(const LogCombo& other) {
  rational_ -= other.rational_;
  for (const auto& [p, c] : other.logs_) logs_[p] -= c;
  prune();
  return *this;
}

LogCombo& LogCombo::operator*=(const Rat& scale) {
  rational_ *= scale;
  for (auto& [p, c] : logs_) c *= scale;
  prune();
  return *this;
}

std::string LogCombo::to_string() const {
  std::ostringstream out;
  bool first = true;
  if (rational_ != 0 || logs_.empty()) {
    out << rat_to_string(rational_);
    first = false;
  }
  for (const auto& [p, c] : logs_) {
    if (!first) out << " + ";
    if (c != 1) out << rat_to_string(c) << "*";
    out << "ln(" << p << ")";
    first = false;
  }
  return out.str();
}

std::optional<LogCombo> logcombo_from_string(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) return std::nullopt;

  bool negate = false;
  if (s[0] == '+' || s[0] == '-') {
    negate = (s[0] == '-');
    s = s.substr(1);
  }

  LogCombo combo;
  if (s.rfind("ln(", 0) == 0 && s.back() == ')') {
    std::string arg = s.substr(3, s.size() - 4);
    try {
      BigInt k(arg);
      if (k < 1) return std::nullopt;
      combo = LogCombo::log_of_integer(k);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  } else {
    auto r = rat_from_string(s);
    if (!r) return std::nullopt;
    combo = LogCombo(*r);
  }
  if (negate) combo *= Rat(-1);
  return combo;
}

}  // namespace toricweyl
