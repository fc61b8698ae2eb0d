#pragma once

// Chow ring of a smooth complete toric variety:
//   Z[D_0..D_{r-1}] / (Stanley-Reisner monomials + linear relations).
// Computation is over Q with integrality asserted throughout.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toricsegre/error.hpp"
#include "toricsegre/fan.hpp"
#include "toricsegre/groebner.hpp"
#include "toricsegre/linalg.hpp"

namespace toricsegre {

/// A class of fixed codimension, as integer coordinates over the ring's basis.
struct ChowClass {
  int codim = 0;
  IntVector coeffs;

  bool is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](std::int64_t c) { return c == 0; });
  }

  friend bool operator==(const ChowClass&, const ChowClass&) = default;

  friend ChowClass operator+(ChowClass a, const ChowClass& b) {
    if (a.codim != b.codim) fail(ErrorCode::Internal, "adding Chow classes of different codimension");
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) a.coeffs[i] += b.coeffs[i];
    return a;
  }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) {
    if (a.codim != b.codim) fail(ErrorCode::Internal, "subtracting Chow classes of different codimension");
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) a.coeffs[i] -= b.coeffs[i];
    return a;
  }
  friend ChowClass operator*(std::int64_t s, ChowClass a) {
    for (auto& c : a.coeffs) c *= s;
    return a;
  }
};

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t b = 1;
  for (std::int64_t i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

class ChowRing {
 public:
  /// `labels` name the divisor classes in printed output (default D0, D1, ...).
  explicit ChowRing(const Fan& fan, std::vector<std::string> labels = {})
      : fan_(fan), k_(static_cast<int>(fan.dim())), r_(fan.nrays()), labels_(std::move(labels)) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < r_; ++i) names.push_back("D" + std::to_string(i));
    if (labels_.empty()) labels_ = names;
    ring_ = RingContext::affine(names);

    std::vector<Polynomial> rel;
    for (const Cone& c : minimal_nonfaces(fan)) {
      Monomial m(r_);
      for (std::size_t i : c) m.set(i, 1);
      rel.push_back(Polynomial::monomial(m));
    }
    for (std::size_t j = 0; j < static_cast<std::size_t>(k_); ++j) {
      std::vector<Term> t;
      for (std::size_t i = 0; i < r_; ++i)
        if (fan.rays[i][j] != 0) t.push_back({make_rational(fan.rays[i][j]), Monomial(r_)});
      std::size_t idx = 0;
      for (std::size_t i = 0; i < r_; ++i)
        if (fan.rays[i][j] != 0) t[idx++].mono.set(i, 1);
      rel.push_back(Polynomial(r_, std::move(t)));
    }
    relations_ = Ideal(ring_, rel);

    std::vector<std::size_t> seq(r_);
    for (std::size_t i = 0; i < r_; ++i) seq[i] = r_ - 1 - i;
    order_ = MonomialOrder::degrevlex(IntVector(r_, 1), seq);
    gb_.emplace(groebner_basis(relations_, order_));
    if (gb_->is_unit()) fail(ErrorCode::RankMismatch, "Chow ring relations generate the unit ideal");

    // Standard monomials by degree.
    bases_.assign(static_cast<std::size_t>(k_) + 1, {});
    const auto lms = gb_->leading_monomials();
    auto standard = [&](const Monomial& m) {
      for (const Monomial& l : lms)
        if (l.divides(m)) return false;
      return true;
    };
    std::vector<Monomial> frontier{Monomial(r_)};
    for (int d = 0; d <= k_ + 1; ++d) {
      std::vector<Monomial> next;
      for (const Monomial& m : frontier) {
        if (d <= k_) bases_[static_cast<std::size_t>(d)].push_back(m);
        for (std::size_t v = 0; v < r_; ++v) {
          Monomial mv = m;
          mv.set(v, m[v] + 1);
          if (standard(mv)) next.push_back(mv);
        }
      }
      std::sort(next.begin(), next.end(), [&](const Monomial& a, const Monomial& b) { return order_.compare(a, b) < 0; });
      next.erase(std::unique(next.begin(), next.end()), next.end());
      if (d == k_ + 1 && !next.empty()) fail(ErrorCode::RankMismatch, "Chow ring is nonzero above the dimension");
      frontier = std::move(next);
    }

    const auto expected = expected_ranks();
    for (int d = 0; d <= k_; ++d)
      if (static_cast<std::int64_t>(rank(d)) != expected[static_cast<std::size_t>(d)])
        fail(ErrorCode::RankMismatch, "codimension " + std::to_string(d) + " has rank " + std::to_string(rank(d)) +
                                          ", expected " + std::to_string(expected[static_cast<std::size_t>(d)]));

    // Degree normalization: every maximal-cone monomial has degree 1.
    std::optional<Rational> top;
    for (const Cone& c : fan.max_cones) {
      Monomial m(r_);
      for (std::size_t i : c) m.set(i, 1);
      const Polynomial nf = gb_->normal_form(Polynomial::monomial(m));
      if (nf.size() != 1)
        fail(ErrorCode::NormalizationInconsistent, "a maximal-cone monomial does not reduce to the top class");
      const Rational v = nf.terms().front().coeff;
      if (top && *top != v)
        fail(ErrorCode::NormalizationInconsistent, "maximal cones " + detail::cone_string(c) +
                                                       " and " + detail::cone_string(fan.max_cones.front()) +
                                                       " give different top-degree values");
      top = v;
    }
    top_value_ = *top;
  }

  int dim() const { return k_; }
  std::size_t nrays() const { return r_; }
  const Fan& fan() const { return fan_; }
  const Ideal& relations() const { return relations_; }
  const GroebnerBasis& groebner() const { return *gb_; }
  const RingContext& ring() const { return ring_; }

  /// Standard monomials of codimension d, ascending in the ring's order.
  const std::vector<Monomial>& basis(int d) const { return bases_.at(static_cast<std::size_t>(d)); }
  std::size_t rank(int d) const { return basis(d).size(); }

  /// h_{k-d} = sum_{j=k-d}^{k} (-1)^{j-k+d} C(j, k-d) c_{k-j}, indexed by codimension d.
  std::vector<std::int64_t> expected_ranks() const {
    const auto cones = cone_counts(fan_);
    std::vector<std::int64_t> out;
    for (int d = 0; d <= k_; ++d) {
      const int i = k_ - d;
      std::int64_t h = 0;
      for (int j = i; j <= k_; ++j)
        h += ((j - i) % 2 ? -1 : 1) * binomial(j, i) * cones[static_cast<std::size_t>(k_ - j)];
      out.push_back(h);
    }
    return out;
  }

  ChowClass zero(int d) const { return {d, IntVector(rank(d), 0)}; }
  ChowClass one() const { return from_polynomial(Polynomial::constant(r_, 1), 0); }
  ChowClass divisor(std::size_t i) const { return from_polynomial(Polynomial::variable(r_, i), 1); }

  /// Class of the monomial prod D_i^{e_i}.
  ChowClass monomial_class(const Monomial& m) const {
    return from_polynomial(Polynomial::monomial(m), static_cast<int>(m.total_degree()));
  }

  /// Class of a homogeneous polynomial of degree d in the D_i.
  ChowClass from_polynomial(const Polynomial& f, int d) const {
    if (d > k_) return {d, {}};
    const Polynomial nf = gb_->normal_form(f);
    ChowClass c = zero(d);
    const auto& b = basis(d);
    for (const Term& t : nf.terms()) {
      auto it = std::find(b.begin(), b.end(), t.mono);
      if (it == b.end()) fail(ErrorCode::Internal, "normal form left the graded piece");
      c.coeffs[static_cast<std::size_t>(it - b.begin())] = to_int64(t.coeff, ErrorCode::NonIntegerCoefficient);
    }
    return c;
  }

  Polynomial to_polynomial(const ChowClass& c) const {
    std::vector<Term> t;
    const auto& b = basis(c.codim);
    for (std::size_t i = 0; i < c.coeffs.size(); ++i)
      if (c.coeffs[i] != 0) t.push_back({make_rational(c.coeffs[i]), b[i]});
    return Polynomial(r_, std::move(t));
  }

  /// Product; codimension above k gives an empty (zero) class.
  ChowClass multiply(const ChowClass& a, const ChowClass& b) const {
    const int d = a.codim + b.codim;
    if (d > k_) return {d, {}};
    return from_polynomial(to_polynomial(a) * to_polynomial(b), d);
  }

  ChowClass power(const ChowClass& a, int e) const {
    ChowClass out = one();
    for (int i = 0; i < e; ++i) out = multiply(out, a);
    return out;
  }

  /// Degree of a top-codimension class.
  std::int64_t degree(const ChowClass& c) const {
    if (c.codim != k_) fail(ErrorCode::Internal, "degree of a class that is not of top codimension");
    return to_int64(Rational(make_rational(c.coeffs.at(0)) / top_value_), ErrorCode::NonIntegerCoefficient);
  }

  /// sum_i a_i D_i for any lift a of the Pic class (A a = delta).
  ChowClass pic_to_chow(const MultiDegree& delta, const IntMatrix& grading) const {
    const IntMatrix inverse = right_inverse(grading);
    IntVector a(r_, 0);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < delta.size(); ++j) a[i] += inverse[i][j] * delta[j];
    if (toricsegre::multiply(grading, a) != delta)
      fail(ErrorCode::NoIntegerLift, "integral lift failed for " + toricsegre::to_string(delta));
    std::vector<Term> t;
    for (std::size_t i = 0; i < r_; ++i)
      if (a[i] != 0) t.push_back({make_rational(a[i]), Monomial(r_)});
    std::size_t idx = 0;
    for (std::size_t i = 0; i < r_; ++i)
      if (a[i] != 0) t[idx++].mono.set(i, 1);
    return from_polynomial(Polynomial(r_, std::move(t)), 1);
  }

  /// Integer R with A R = I, from a unimodular column reduction of A.
  static IntMatrix right_inverse(const IntMatrix& grading) {
    if (grading.empty()) return {};
    const std::size_t rows = grading.size(), cols = grading[0].size();
    // Row-reduce A^T: U A^T = H, so A U^T = H^T; the top block of H is
    // square with unit determinant when A is surjective.
    auto [h, u] = unimodular_row_echelon(transpose(grading));
    IntMatrix top(rows, IntVector(rows));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < rows; ++j) top[i][j] = h[i][j];
    const std::int64_t det = determinant(top);
    if (det != 1 && det != -1) fail(ErrorCode::NoIntegerLift, "grading matrix is not surjective onto the lattice");
    // Inverse of the triangular unimodular block (exact over Q, integral).
    RatMatrix aug(rows, RatVector(2 * rows));
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < rows; ++j) aug[i][j] = make_rational(top[i][j]);
      aug[i][rows + i] = 1;
    }
    auto [red, piv] = rref(aug);
    // A (U^T)_{:,0..rows} = (H^T)_{:, 0..rows} = top^T, so R = (U^T)_{:,0..rows} (top^T)^{-1}.
    IntMatrix r(cols, IntVector(rows, 0));
    for (std::size_t i = 0; i < cols; ++i)
      for (std::size_t j = 0; j < rows; ++j) {
        Rational s = 0;
        for (std::size_t l = 0; l < rows; ++l) s += make_rational(u[l][i]) * red[j][rows + l];
        r[i][j] = to_int64(s, ErrorCode::NoIntegerLift);
      }
    return r;
  }

  /// Matrix of degrees of products between the bases of codim d and k-d.
  IntMatrix pairing_matrix(int d) const {
    IntMatrix m;
    for (const Monomial& a : basis(d)) {
      IntVector row;
      for (const Monomial& b : basis(k_ - d)) row.push_back(degree(monomial_class(a * b)));
      m.push_back(row);
    }
    return m;
  }

  /// Coordinates of c against a list of classes spanning its graded piece.
  std::optional<IntVector> coordinates_in(const ChowClass& c, const std::vector<ChowClass>& basis_classes) const {
    RatMatrix a(c.coeffs.size(), RatVector(basis_classes.size()));
    RatVector b;
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
      for (std::size_t j = 0; j < basis_classes.size(); ++j) a[i][j] = make_rational(basis_classes[j].coeffs[i]);
      b.push_back(make_rational(c.coeffs[i]));
    }
    const auto x = solve(a, b, basis_classes.size());
    if (!x) return std::nullopt;
    IntVector out;
    for (const Rational& v : *x) {
      if (!is_integer(v)) return std::nullopt;
      out.push_back(to_int64(v));
    }
    return out;
  }

  std::string monomial_name(const Monomial& m) const {
    if (m.is_one()) return "1";
    std::string s;
    for (std::size_t i = 0; i < r_; ++i)
      for (int e = 0; e < m[i]; ++e) s += (s.empty() ? "" : "*") + labels_[i];
    return s;
  }

  std::string to_string(const ChowClass& c) const {
    std::string s;
    const auto& b = basis(c.codim);
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
      const std::int64_t x = c.coeffs[i];
      if (x == 0) continue;
      const std::string name = monomial_name(b[i]);
      if (s.empty()) s += x < 0 ? "-" : "";
      else s += x < 0 ? " - " : " + ";
      const std::int64_t ax = x < 0 ? -x : x;
      if (name == "1") s += std::to_string(ax);
      else s += (ax == 1 ? "" : std::to_string(ax) + "*") + name;
    }
    return s.empty() ? "0" : s;
  }

 private:
  Fan fan_;
  int k_;
  std::size_t r_;
  std::vector<std::string> labels_;
  RingContext ring_;
  Ideal relations_;
  MonomialOrder order_;
  std::optional<GroebnerBasis> gb_;
  std::vector<std::vector<Monomial>> bases_;
  Rational top_value_;
};

}  // namespace toricsegre
