#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "toricsegre/error.hpp"

namespace toricsegre {

/// Exponent vector x^e with a fixed number of variables. Storage is inline;
/// rings with more than kMaxVariables variables (auxiliary ones included)
/// are rejected.
class Monomial {
 public:
  static constexpr std::size_t kMaxVariables = 32;
  using Exponent = std::uint16_t;

  Monomial() = default;

  explicit Monomial(std::size_t nvars) : size_(check_size(nvars)) { exps_.fill(0); }

  Monomial(std::initializer_list<int> exps) : Monomial(exps.size()) {
    std::size_t i = 0;
    for (int e : exps) set(i++, e);
  }

  explicit Monomial(std::span<const int> exps) : Monomial(exps.size()) {
    for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
  }

  std::size_t size() const { return size_; }
  int operator[](std::size_t i) const { return exps_[i]; }

  void set(std::size_t i, int e) {
    if (e < 0 || e > 0xffff) fail(ErrorCode::Internal, "exponent out of range");
    exps_[i] = static_cast<Exponent>(e);
  }

  long total_degree() const {
    long d = 0;
    for (std::size_t i = 0; i < size_; ++i) d += exps_[i];
    return d;
  }

  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.begin() + size_, [](Exponent e) { return e == 0; });
  }

  /// True iff this divides `other`.
  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < size_; ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  std::vector<int> exponents() const { return {exps_.begin(), exps_.begin() + size_}; }

  /// Same exponents in a ring with `nvars` variables; new slots are zero.
  Monomial resized(std::size_t nvars) const {
    Monomial m(nvars);
    for (std::size_t i = 0; i < std::min<std::size_t>(nvars, size_); ++i) m.exps_[i] = exps_[i];
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i) m.set(i, int(a.exps_[i]) + int(b.exps_[i]));
    return m;
  }

  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i) m.exps_[i] = a.exps_[i] - b.exps_[i];
    return m;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i) m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return m;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size_; ++i)
      if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.size_ == b.size_ && std::equal(a.exps_.begin(), a.exps_.begin() + a.size_, b.exps_.begin());
  }

  /// Lexicographic on exponents (x_0 most significant). This is the storage
  /// order of Polynomial, not a term order used for Groebner computations.
  friend bool lex_less(const Monomial& a, const Monomial& b) {
    return std::lexicographical_compare(a.exps_.begin(), a.exps_.begin() + a.size_, b.exps_.begin(),
                                        b.exps_.begin() + b.size_);
  }

  std::size_t hash() const {
    std::size_t h = size_;
    for (std::size_t i = 0; i < size_; ++i) h = h * 1000003u ^ exps_[i];
    return h;
  }

 private:
  static std::uint8_t check_size(std::size_t n) {
    if (n > kMaxVariables)
      fail(ErrorCode::InvalidInput,
           "at most " + std::to_string(kMaxVariables) + " variables are supported");
    return static_cast<std::uint8_t>(n);
  }

  std::array<Exponent, kMaxVariables> exps_{};
  std::uint8_t size_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace toricsegre
