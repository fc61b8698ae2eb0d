#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "toricsegre/monomial.hpp"
#include "toricsegre/rational.hpp"

namespace toricsegre {

struct Term {
  Rational coeff;
  Monomial mono;

  friend bool operator==(const Term& a, const Term& b) { return a.mono == b.mono && a.coeff == b.coeff; }
};

/// Multivariate polynomial over Q in a fixed number of variables.
///
/// Canonical form: nonzero coefficients, no repeated monomials, terms sorted
/// by descending lex on exponents. The zero polynomial has no terms. Two
/// polynomials are equal iff their canonical forms are.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  /// Builds from arbitrary terms (any order, repeats allowed).
  Polynomial(std::size_t nvars, std::vector<Term> terms) : nvars_(nvars), terms_(std::move(terms)) {
    canonicalize();
  }

  static Polynomial constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.push_back({c, Monomial(nvars)});
    return p;
  }

  static Polynomial variable(std::size_t nvars, std::size_t index) {
    Monomial m(nvars);
    m.set(index, 1);
    return monomial(m);
  }

  static Polynomial monomial(const Monomial& m, const Rational& c = 1) {
    Polynomial p(m.size());
    if (c != 0) p.terms_.push_back({c, m});
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (Term& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, 1); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, -1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const Term& s : a.terms_)
      for (const Term& t : b.terms_) out.push_back({s.coeff * t.coeff, s.mono * t.mono});
    return Polynomial(a.nvars_, std::move(out));
  }

  friend Polynomial operator*(const Rational& c, const Polynomial& p) {
    if (c == 0) return Polynomial(p.nvars_);
    Polynomial r = p;
    for (Term& t : r.terms_) t.coeff *= c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned e) const {
    Polynomial r = constant(nvars_, 1);
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

  /// Multiplies by the rational making the polynomial primitive over Z with
  /// positive leading (lex) coefficient.
  Polynomial primitive() const {
    if (terms_.empty()) return *this;
    Integer num_gcd = 0, den_lcm = 1;
    for (const Term& t : terms_) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (terms_.front().coeff < 0) scale = -scale;
    return scale * *this;
  }

  /// Same polynomial viewed in a ring with `nvars` variables; the dropped
  /// variables must not occur.
  Polynomial resized(std::size_t nvars) const {
    Polynomial r(nvars);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
      for (std::size_t i = nvars; i < nvars_; ++i)
        if (t.mono[i] != 0) fail(ErrorCode::Internal, "resized(): dropping a live variable");
      r.terms_.push_back({t.coeff, t.mono.resized(nvars)});
    }
    r.canonicalize();
    return r;
  }

  /// Ring map x_i -> images[i].
  Polynomial substitute(std::span<const Polynomial> images, std::size_t target_nvars) const {
    Polynomial r(target_nvars);
    for (const Term& t : terms_) {
      Polynomial prod = constant(target_nvars, t.coeff);
      for (std::size_t i = 0; i < nvars_; ++i)
        if (t.mono[i] != 0) prod *= images[i].pow(t.mono[i]);
      r += prod;
    }
    return r;
  }

  /// Sets the listed variables to 1 and keeps the rest, renumbered in order.
  Polynomial set_to_one(const std::vector<bool>& keep) const {
    std::size_t n = 0;
    for (bool k : keep) n += k;
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
      Monomial m(n);
      std::size_t j = 0;
      for (std::size_t i = 0; i < nvars_; ++i)
        if (keep[i]) m.set(j++, t.mono[i]);
      out.push_back({t.coeff, m});
    }
    return Polynomial(n, std::move(out));
  }

  /// Largest e such that x_var^e divides every term.
  int min_exponent(std::size_t var) const {
    if (terms_.empty()) return 0;
    int e = terms_.front().mono[var];
    for (const Term& t : terms_) e = std::min(e, t.mono[var]);
    return e;
  }

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  static Polynomial combine(const Polynomial& a, const Polynomial& b, int sign) {
    Polynomial r(a.nvars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin(), j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && lex_less(j->mono, i->mono))) {
        r.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || lex_less(i->mono, j->mono)) {
        r.terms_.push_back({sign > 0 ? j->coeff : Rational(-j->coeff), j->mono});
        ++j;
      } else {
        Rational c = sign > 0 ? Rational(i->coeff + j->coeff) : Rational(i->coeff - j->coeff);
        if (c != 0) r.terms_.push_back({std::move(c), i->mono});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return lex_less(b.mono, a.mono); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (Term& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff += t.coeff;
      } else {
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
    terms_ = std::move(out);
  }

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

inline std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += i < names.size() ? names[i] : "x" + std::to_string(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

inline std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const Term& t : terms_) {
    Rational c = t.coeff;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (c < 0) c = -c;
    if (t.mono.is_one()) {
      s += c.get_str();
    } else {
      if (c != 1) s += c.get_str() + "*";
      s += monomial_to_string(t.mono, names);
    }
  }
  return s;
}

}  // namespace toricsegre
