#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace planar_turan {

// Exact rational with a positive, reduced denominator. Comparisons widen to
// 128 bits so products of edge-count-sized values never overflow.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t num) : num_(num) {}  // NOLINT(implicit)
  constexpr Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr std::int64_t num() const noexcept { return num_; }
  constexpr std::int64_t den() const noexcept { return den_; }

  constexpr std::int64_t floor() const noexcept {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  constexpr bool is_integer() const noexcept { return den_ == 1; }

  friend constexpr Rational operator+(Rational a, Rational b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend constexpr Rational operator-(Rational a, Rational b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend constexpr Rational operator*(Rational a, Rational b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend constexpr Rational operator/(Rational a, Rational b) {
    return {a.num_ * b.den_, a.den_ * b.num_};
  }

  friend constexpr bool operator==(Rational a, Rational b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend constexpr std::strong_ordering operator<=>(Rational a, Rational b) noexcept {
    const __int128 l = static_cast<__int128>(a.num_) * b.den_;
    const __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }

  std::string to_string() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace planar_turan
