#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "defdom/graph.hpp"

namespace defdom {

// Exact rational with 64-bit numerator and positive denominator, always in
// lowest terms. Comparisons widen to 128 bits.
class Rational {
public:
  constexpr Rational() = default;
  constexpr Rational(long long value) : num_(value), den_(1) {}  // NOLINT(implicit)

  Rational(long long num, long long den) {
    if (den == 0) throw InputError("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) g = 1;
    num_ = num / g;
    den_ = den / g;
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  // Accepts "12", "-3.25", "7/4".
  static Rational parse(const std::string& text) {
    if (text.empty()) throw InputError("empty number");
    auto slash = text.find('/');
    if (slash != std::string::npos)
      return Rational(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(parse_int(text, text));
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 17 || frac.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("bad decimal '" + text + "'");
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    long long scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    long long w = parse_int(whole, text);
    long long f = parse_int(frac, text);
    __int128 num = static_cast<__int128>(w < 0 ? -w : w) * scale + f;
    if (num > INT64_MAX) throw InputError("decimal out of range '" + text + "'");
    auto n = static_cast<long long>(num);
    return Rational(negative ? -n : n, scale);
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    // Terminating decimals print as decimals, the rest as p/q.
    long long d = den_;
    int twos = 0, fives = 0;
    while (d % 2 == 0) {
      d /= 2;
      ++twos;
    }
    while (d % 5 == 0) {
      d /= 5;
      ++fives;
    }
    if (d != 1 || std::max(twos, fives) > 17) return std::to_string(num_) + "/" + std::to_string(den_);
    int digits = std::max(twos, fives);
    __int128 scaled = static_cast<__int128>(num_);
    long long pow10 = 1;
    for (int i = 0; i < digits; ++i) pow10 *= 10;
    scaled = scaled * (pow10 / den_);
    bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    auto whole = static_cast<long long>(scaled / pow10);
    auto frac = static_cast<long long>(scaled % pow10);
    std::string f = std::to_string(frac);
    f.insert(0, static_cast<std::size_t>(digits) - f.size(), '0');
    return (negative ? "-" : "") + std::to_string(whole) + "." + f;
  }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend bool operator==(const Rational& a, const Rational& b) = default;

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                     static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_wide(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                     static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw InputError("division by zero");
    return from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  static long long parse_int(const std::string& s, const std::string& whole) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      throw InputError("bad number '" + whole + "'");
    }
    if (used != s.size()) throw InputError("bad number '" + whole + "'");
    return v;
  }

  static Rational from_wide(__int128 num, __int128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    __int128 a = num < 0 ? -num : num, b = den;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a == 0) a = 1;
    num /= a;
    den /= a;
    if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX) throw InputError("rational overflow");
    Rational r;
    r.num_ = static_cast<long long>(num);
    r.den_ = static_cast<long long>(den);
    return r;
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace defdom
