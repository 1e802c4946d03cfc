#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "cusemi/rational.hpp"

namespace cusemi {

/// A point of the extended line: an exact rational or +infinity.
/// Addition is infinity-absorbing. Subtraction is defined when the result is
/// determined (finite - finite, inf - finite); inf - inf is a contract violation.
class ExtScalar {
 public:
  constexpr ExtScalar() : inf_(false), v_() {}
  ExtScalar(long long n) : inf_(false), v_(n) {}
  ExtScalar(const Rat& r) : inf_(false), v_(r) {}

  static ExtScalar infinity() {
    ExtScalar s;
    s.inf_ = true;
    return s;
  }
  static ExtScalar rational(long long n, long long d) { return ExtScalar(Rat(n, d)); }

  bool is_infinite() const { return inf_; }
  bool is_finite() const { return !inf_; }

  const Rat& finite_value() const {
    if (inf_) throw std::domain_error("ExtScalar: finite_value of infinity");
    return v_;
  }

  friend ExtScalar operator+(const ExtScalar& a, const ExtScalar& b) {
    if (a.inf_ || b.inf_) return infinity();
    return ExtScalar(a.v_ + b.v_);
  }
  friend ExtScalar operator-(const ExtScalar& a, const ExtScalar& b) {
    if (b.inf_) throw std::domain_error("ExtScalar: cannot subtract infinity");
    if (a.inf_) return infinity();
    return ExtScalar(a.v_ - b.v_);
  }
  ExtScalar operator-() const {
    if (inf_) throw std::domain_error("ExtScalar: cannot negate infinity");
    return ExtScalar(-v_);
  }

  /// Scalar multiple by a nonnegative weight, with the measure convention 0 * inf = 0.
  static ExtScalar weighted(const ExtScalar& w, const ExtScalar& x) {
    if (w.is_finite() && w.v_ == Rat(0)) return ExtScalar(0);
    if (x.is_finite() && x.v_ == Rat(0)) return ExtScalar(0);
    if (w.inf_ || x.inf_) return infinity();
    return ExtScalar(w.v_ * x.v_);
  }

  friend bool operator==(const ExtScalar& a, const ExtScalar& b) {
    if (a.inf_ != b.inf_) return false;
    return a.inf_ || a.v_ == b.v_;
  }
  friend bool operator!=(const ExtScalar& a, const ExtScalar& b) { return !(a == b); }
  friend bool operator<(const ExtScalar& a, const ExtScalar& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator<=(const ExtScalar& a, const ExtScalar& b) { return a < b || a == b; }
  friend bool operator>(const ExtScalar& a, const ExtScalar& b) { return b < a; }
  friend bool operator>=(const ExtScalar& a, const ExtScalar& b) { return b <= a; }

  static ExtScalar max(const ExtScalar& a, const ExtScalar& b) { return a < b ? b : a; }
  static ExtScalar min(const ExtScalar& a, const ExtScalar& b) { return a < b ? a : b; }

  std::string str() const { return inf_ ? "inf" : v_.str(); }

  /// Parses "inf", "-3", "1/2". Returns nullopt on malformed input.
  static std::optional<ExtScalar> parse(const std::string& s);

  friend std::ostream& operator<<(std::ostream& os, const ExtScalar& s) { return os << s.str(); }

 private:
  bool inf_;
  Rat v_;
};

}  // namespace cusemi
