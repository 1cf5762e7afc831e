#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace luka {

// Exact rational truth value in [0,1]. Always kept in canonical reduced form
// (den > 0, gcd(num,den) = 1, 0 <= num <= den), so equality is plain member
// comparison. Intermediate products go through __int128 before reduction;
// values that would leave [0,1] throw.
class Rational01 {
public:
  constexpr Rational01() : num_(0), den_(1) {}

  static Rational01 of(long long num, long long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    if (num < 0 || num > den)
      throw std::domain_error("rational " + std::to_string(num) + "/" +
                              std::to_string(den) + " outside [0,1]");
    long long g = std::gcd(num, den);
    Rational01 r;
    r.num_ = num / g;
    r.den_ = den / g;
    return r;
  }

  static constexpr Rational01 zero() { return Rational01(); }
  static Rational01 one() { return of(1, 1); }
  static Rational01 half() { return of(1, 2); }

  // Accepts "3/5", "0.6", "1", "1.0". Returns nullopt on malformed text or a
  // value outside [0,1]. Decimal input is converted exactly.
  static std::optional<Rational01> parse(std::string_view text);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == den_; }

  friend bool operator==(const Rational01& a, const Rational01& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational01& a, const Rational01& b) { return !(a == b); }
  friend bool operator<(const Rational01& a, const Rational01& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator>(const Rational01& a, const Rational01& b) { return b < a; }
  friend bool operator<=(const Rational01& a, const Rational01& b) { return !(b < a); }
  friend bool operator>=(const Rational01& a, const Rational01& b) { return !(a < b); }

  // 1 - x
  Rational01 complement() const {
    Rational01 r;
    r.num_ = den_ - num_;
    r.den_ = den_;
    long long g = std::gcd(r.num_, r.den_);
    r.num_ /= g;
    r.den_ /= g;
    return r;
  }

  // Lukasiewicz connective values.
  static Rational01 strong_conj(const Rational01& x, const Rational01& y);  // max(0, x+y-1)
  static Rational01 implies(const Rational01& x, const Rational01& y);      // min(1, 1-x+y)
  static Rational01 strong_disj(const Rational01& x, const Rational01& y);  // min(1, x+y)
  static Rational01 min(const Rational01& x, const Rational01& y) { return y < x ? y : x; }
  static Rational01 max(const Rational01& x, const Rational01& y) { return x < y ? y : x; }
  static Rational01 equiv(const Rational01& x, const Rational01& y) {
    return strong_conj(implies(x, y), implies(y, x));
  }
  // Plain product x*y (stays in [0,1]).
  static Rational01 product(const Rational01& x, const Rational01& y);

  std::string to_fraction() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  // Exact decimal when the reduced denominator is 2^a*5^b, otherwise a
  // 6-digit approximation prefixed with '~'.
  std::string to_decimal() const;
  // "3/5 (0.6)"
  std::string display() const { return to_fraction() + " (" + to_decimal() + ")"; }

private:
  long long num_;
  long long den_;

  static Rational01 reduced128(__int128 num, __int128 den);
};

}  // namespace luka
