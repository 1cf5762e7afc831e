#include "luka/rational.hpp"

namespace luka {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

}  // namespace

Rational01 Rational01::reduced128(__int128 num, __int128 den) {
  if (num < 0) num = 0;
  if (num > den) num = den;
  __int128 g = gcd128(num, den);
  if (g == 0) g = 1;
  num /= g;
  den /= g;
  if (den > INT64_MAX)
    throw std::overflow_error("rational denominator overflow");
  Rational01 r;
  r.num_ = static_cast<long long>(num);
  r.den_ = static_cast<long long>(den);
  return r;
}

Rational01 Rational01::strong_conj(const Rational01& x, const Rational01& y) {
  // max(0, x+y-1)
  __int128 den = static_cast<__int128>(x.den_) * y.den_;
  __int128 num = static_cast<__int128>(x.num_) * y.den_ +
                 static_cast<__int128>(y.num_) * x.den_ - den;
  return reduced128(num, den);
}

Rational01 Rational01::implies(const Rational01& x, const Rational01& y) {
  // min(1, 1-x+y)
  __int128 den = static_cast<__int128>(x.den_) * y.den_;
  __int128 num = den - static_cast<__int128>(x.num_) * y.den_ +
                 static_cast<__int128>(y.num_) * x.den_;
  return reduced128(num, den);
}

Rational01 Rational01::strong_disj(const Rational01& x, const Rational01& y) {
  // min(1, x+y)
  __int128 den = static_cast<__int128>(x.den_) * y.den_;
  __int128 num = static_cast<__int128>(x.num_) * y.den_ +
                 static_cast<__int128>(y.num_) * x.den_;
  return reduced128(num, den);
}

Rational01 Rational01::product(const Rational01& x, const Rational01& y) {
  // Cross-reduce before multiplying to keep intermediates small.
  long long g1 = std::gcd(x.num_, y.den_);
  long long g2 = std::gcd(y.num_, x.den_);
  __int128 num = static_cast<__int128>(x.num_ / g1) * (y.num_ / g2);
  __int128 den = static_cast<__int128>(x.den_ / g2) * (y.den_ / g1);
  return reduced128(num, den);
}

std::optional<Rational01> Rational01::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  try {
    if (slash != std::string_view::npos) {
      std::string_view n = text.substr(0, slash), d = text.substr(slash + 1);
      if (!all_digits(n) || !all_digits(d)) return std::nullopt;
      if (n.size() > 18 || d.size() > 18) return std::nullopt;
      return of(std::stoll(std::string(n)), std::stoll(std::string(d)));
    }
    auto dot = text.find('.');
    if (dot == std::string_view::npos) {
      if (!all_digits(text) || text.size() > 18) return std::nullopt;
      return of(std::stoll(std::string(text)), 1);
    }
    std::string_view whole = text.substr(0, dot), frac = text.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) return std::nullopt;
    if (whole.size() + frac.size() > 17) return std::nullopt;
    long long den = 1;
    for (size_t i = 0; i < frac.size(); i++) den *= 10;
    long long num = std::stoll(std::string(whole)) * den + std::stoll(std::string(frac));
    return of(num, den);
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}

std::string Rational01::to_decimal() const {
  long long d = den_;
  int twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; twos++; }
  while (d % 5 == 0) { d /= 5; fives++; }
  if (d != 1) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "~%.6f", static_cast<double>(num_) / static_cast<double>(den_));
    return buf;
  }
  // Scale to a power of ten: num/den = scaled / 10^k with k = max(twos, fives).
  int k = twos > fives ? twos : fives;
  __int128 scaled = num_;
  for (int i = 0; i < twos - fives; i++) scaled *= 5;
  for (int i = 0; i < fives - twos; i++) scaled *= 2;
  std::string digits;
  if (scaled == 0) digits = "0";
  while (scaled > 0) {
    digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(scaled % 10)));
    scaled /= 10;
  }
  if (k == 0) return digits;
  while (static_cast<int>(digits.size()) <= k) digits.insert(digits.begin(), '0');
  digits.insert(digits.size() - k, ".");
  while (digits.back() == '0') digits.pop_back();
  if (digits.back() == '.') digits.pop_back();
  return digits;
}

}  // namespace luka
