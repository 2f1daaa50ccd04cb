#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace szlab {

// Exact value on the quarter-integer lattice (value = quarters/4).
//
// Every revised-Szeged summand is (x + m0/2)(y + m0/2), a product of two
// half-integers, hence a quarter-integer; sums and integer multiples stay on
// the lattice. Keeping the raw quarter count in a signed 64-bit integer makes
// every comparison and equality test exact -- no floating point is involved in
// any index computation.
class Q4 {
 public:
  constexpr Q4() = default;

  static constexpr Q4 from_int(std::int64_t v) { return Q4(v * 4); }
  static constexpr Q4 from_halves(std::int64_t h) { return Q4(h * 2); }
  static constexpr Q4 from_quarters(std::int64_t q) { return Q4(q); }
  // (a/2)*(b/2) where both factors are given in halves.
  static constexpr Q4 product_of_halves(std::int64_t a_halves,
                                        std::int64_t b_halves) {
    return Q4(a_halves * b_halves);
  }

  constexpr std::int64_t quarters() const { return q_; }
  constexpr bool is_integer() const { return q_ % 4 == 0; }
  constexpr std::int64_t as_integer() const {
    assert(is_integer());
    return q_ / 4;
  }
  constexpr double to_double() const { return static_cast<double>(q_) / 4.0; }

  // Uniform exact rendering: "<quarters>/4".
  std::string to_string() const { return std::to_string(q_) + "/4"; }
  static std::optional<Q4> parse(const std::string& s);

  friend constexpr Q4 operator+(Q4 a, Q4 b) { return Q4(a.q_ + b.q_); }
  friend constexpr Q4 operator-(Q4 a, Q4 b) { return Q4(a.q_ - b.q_); }
  friend constexpr Q4 operator-(Q4 a) { return Q4(-a.q_); }
  friend constexpr Q4 operator*(Q4 a, std::int64_t k) { return Q4(a.q_ * k); }
  friend constexpr Q4 operator*(std::int64_t k, Q4 a) { return Q4(a.q_ * k); }
  constexpr Q4& operator+=(Q4 o) {
    q_ += o.q_;
    return *this;
  }
  constexpr Q4& operator-=(Q4 o) {
    q_ -= o.q_;
    return *this;
  }
  friend constexpr bool operator==(Q4 a, Q4 b) = default;
  friend constexpr auto operator<=>(Q4 a, Q4 b) = default;

 private:
  explicit constexpr Q4(std::int64_t q) : q_(q) {}
  std::int64_t q_ = 0;
};

inline std::optional<Q4> Q4::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos || s.substr(slash) != "/4") return std::nullopt;
  const std::string num = s.substr(0, slash);
  if (num.empty()) return std::nullopt;
  std::size_t pos = 0;
  std::int64_t q = 0;
  try {
    q = std::stoll(num, &pos);
  } catch (...) {
    return std::nullopt;
  }
  if (pos != num.size()) return std::nullopt;
  return Q4::from_quarters(q);
}

}  // namespace szlab
