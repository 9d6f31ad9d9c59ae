#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

namespace tspan {

/// Exact rational scalar. Values are kept in lowest terms with a positive
/// denominator, so equality is structural and printing is canonical.
class Rat {
public:
  Rat() = default;

  template <std::integral I>
  Rat(I n) : v_(static_cast<long>(n)) {}  // NOLINT: implicit on purpose

  Rat(long num, long den);

  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p/q", "p", or "-p/q". Non-lowest terms are normalized; a zero
  /// denominator or malformed text throws Error(ParseError/ZeroDenominator).
  static Rat parse(std::string_view text);

  std::string str() const { return v_.get_str(); }
  double to_double() const { return v_.get_d(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }
  Rat abs() const { return Rat(mpq_class(::abs(v_))); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
  mpq_class v_;
};

inline Rat abs(const Rat& r) { return r.abs(); }
inline const Rat& min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& max(const Rat& a, const Rat& b) { return a < b ? b : a; }

/// Fixed-point decimal rendering, rounded half away from zero. Presentation only.
std::string to_decimal(const Rat& r, int digits);

}  // namespace tspan
