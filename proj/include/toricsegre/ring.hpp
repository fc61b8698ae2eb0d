#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "toricsegre/error.hpp"
#include "toricsegre/linalg.hpp"
#include "toricsegre/polynomial.hpp"
#include "toricsegre/random.hpp"

namespace toricsegre {

/// Coordinates of a class in Pic(X) = Z^{r-k}.
using MultiDegree = IntVector;

inline std::string to_string(const MultiDegree& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

inline MultiDegree operator+(const MultiDegree& a, const MultiDegree& b) {
  MultiDegree c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline MultiDegree operator-(const MultiDegree& a, const MultiDegree& b) {
  MultiDegree c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

/// A polynomial ring with named variables and a positive multigrading.
///
/// `grading` has one column per variable; `heft` pairs positively with
/// every column. An affine ring (no grading rows) uses unit weights.
class RingContext {
 public:
  RingContext() = default;

  RingContext(std::vector<std::string> names, IntMatrix grading, IntVector heft)
      : names_(std::move(names)), grading_(std::move(grading)), heft_(std::move(heft)) {
    const std::size_t n = names_.size();
    if (n > Monomial::kMaxVariables) fail(ErrorCode::InvalidInput, "too many variables");
    for (const auto& row : grading_)
      if (row.size() != n) fail(ErrorCode::InvalidDegrees, "grading matrix has wrong number of columns");
    if (heft_.size() != grading_.size()) fail(ErrorCode::InvalidDegrees, "heft vector has wrong length");
    weights_.assign(n, 1);
    if (!grading_.empty()) {
      for (std::size_t i = 0; i < n; ++i) {
        std::int64_t w = 0;
        for (std::size_t j = 0; j < grading_.size(); ++j) w += heft_[j] * grading_[j][i];
        if (w <= 0)
          fail(ErrorCode::NoPositiveGrading, "heft does not pair positively with the degree of " + names_[i]);
        weights_[i] = w;
      }
      if (rank(to_rational(grading_)) != grading_.size())
        fail(ErrorCode::InvalidDegrees, "grading matrix does not have full row rank");
    }
  }

  static RingContext affine(std::vector<std::string> names) { return RingContext(std::move(names), {}, {}); }

  std::size_t nvars() const { return names_.size(); }
  std::size_t grading_rank() const { return grading_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const IntMatrix& grading() const { return grading_; }
  const IntVector& heft() const { return heft_; }
  /// Heft-weighted degree of each variable (all positive).
  const IntVector& weights() const { return weights_; }

  MultiDegree degree_of(const Monomial& m) const {
    MultiDegree d(grading_.size(), 0);
    for (std::size_t j = 0; j < grading_.size(); ++j)
      for (std::size_t i = 0; i < m.size(); ++i) d[j] += grading_[j][i] * m[i];
    return d;
  }

  std::int64_t weight_of(const Monomial& m) const {
    std::int64_t w = 0;
    for (std::size_t i = 0; i < m.size(); ++i) w += weights_[i] * m[i];
    return w;
  }

  std::int64_t weight_of(const MultiDegree& d) const {
    std::int64_t w = 0;
    for (std::size_t j = 0; j < d.size(); ++j) w += heft_[j] * d[j];
    return w;
  }

  /// Same ring with one extra variable of the given degree appended.
  RingContext extended(const std::string& name, const MultiDegree& degree) const {
    auto names = names_;
    names.push_back(name);
    auto grading = grading_;
    for (std::size_t j = 0; j < grading.size(); ++j) grading[j].push_back(degree[j]);
    if (grading.empty()) return affine(std::move(names));
    return RingContext(std::move(names), std::move(grading), heft_);
  }

  friend bool operator==(const RingContext&, const RingContext&) = default;

 private:
  std::vector<std::string> names_;
  IntMatrix grading_;
  IntVector heft_;
  IntVector weights_;
};

/// The common multidegree A*e of all terms of f.
inline MultiDegree multidegree_of(const Polynomial& f, const RingContext& ctx) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "the zero polynomial has no degree");
  const MultiDegree d = ctx.degree_of(f.terms().front().mono);
  for (const Term& t : f.terms()) {
    const MultiDegree e = ctx.degree_of(t.mono);
    if (e != d)
      fail(ErrorCode::NotHomogeneous, "polynomial is not homogeneous: terms of degree " + to_string(d) + " and " +
                                          to_string(e) + " in " + f.to_string(ctx.names()));
  }
  return d;
}

inline bool is_homogeneous(const Polynomial& f, const RingContext& ctx) {
  if (f.is_zero()) return true;
  const MultiDegree d = ctx.degree_of(f.terms().front().mono);
  for (const Term& t : f.terms())
    if (ctx.degree_of(t.mono) != d) return false;
  return true;
}

/// All monomials x^e with A*e = degree, in lex order on exponents.
inline std::vector<Monomial> monomials_of_degree(const MultiDegree& degree, const RingContext& ctx) {
  const std::size_t n = ctx.nvars();
  std::vector<Monomial> out;
  if (ctx.grading_rank() == 0 || degree.size() != ctx.grading_rank()) return out;
  const std::int64_t target = ctx.weight_of(degree);
  if (target < 0) return out;
  std::vector<int> e(n, 0);
  // Depth-first over exponents of x_0, x_1, ...; heft weight bounds each one.
  auto rec = [&](auto&& self, std::size_t i, std::int64_t remaining) -> void {
    if (i == n) {
      if (remaining != 0) return;
      Monomial m(std::span<const int>(e.data(), n));
      if (ctx.degree_of(m) == degree) out.push_back(m);
      return;
    }
    const std::int64_t maxe = remaining / ctx.weights()[i];
    for (std::int64_t k = maxe; k >= 0; --k) {
      e[i] = static_cast<int>(k);
      self(self, i + 1, remaining - k * ctx.weights()[i]);
    }
    e[i] = 0;
  };
  rec(rec, 0, target);
  std::reverse(out.begin(), out.end());
  return out;
}

/// Sum over all monomials of the degree with nonzero coefficients drawn
/// uniformly from [-bound, bound].
inline Polynomial random_homogeneous(const MultiDegree& degree, SeededRandom& rng, std::int64_t bound,
                                     const RingContext& ctx) {
  const auto monos = monomials_of_degree(degree, ctx);
  if (monos.empty()) fail(ErrorCode::EmptyDegree, "no monomials of degree " + to_string(degree));
  std::vector<Term> terms;
  terms.reserve(monos.size());
  for (const Monomial& m : monos) terms.push_back({make_rational(rng.nonzero(bound)), m});
  return Polynomial(ctx.nvars(), std::move(terms));
}

}  // namespace toricsegre
