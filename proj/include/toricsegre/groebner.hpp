#pragma once

// Groebner bases over Q: Buchberger with Gebauer-Moeller pair elimination,
// normal forms, elimination, intersection, saturation, Krull dimension and
// the length of Artinian quotients.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "toricsegre/error.hpp"
#include "toricsegre/order.hpp"
#include "toricsegre/polynomial.hpp"
#include "toricsegre/ring.hpp"

namespace toricsegre {

/// Ideal of a polynomial ring, given by generators.
///
/// When the ring is graded every generator must be multihomogeneous; the
/// degrees are cached. Zero generators are dropped.
class Ideal {
 public:
  Ideal() = default;

  Ideal(RingContext ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
    for (Polynomial& g : generators) {
      if (g.nvars() != ring_.nvars()) fail(ErrorCode::Internal, "generator lives in a different ring");
      if (g.is_zero()) continue;
      if (ring_.grading_rank() > 0) degrees_.push_back(multidegree_of(g, ring_));
      gens_.push_back(std::move(g));
    }
  }

  static Ideal unit(const RingContext& ring) { return Ideal(ring, {Polynomial::constant(ring.nvars(), 1)}); }

  const RingContext& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  /// Cached multidegrees, parallel to generators() (empty for affine rings).
  const std::vector<MultiDegree>& degrees() const { return degrees_; }
  bool is_zero() const { return gens_.empty(); }
  std::size_t size() const { return gens_.size(); }

  /// True iff every generator is homogeneous for the ring's variable weights.
  bool is_weighted_homogeneous() const {
    for (const Polynomial& g : gens_) {
      const std::int64_t w = ring_.weight_of(g.terms().front().mono);
      for (const Term& t : g.terms())
        if (ring_.weight_of(t.mono) != w) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].to_string(ring_.names());
    return s + ")";
  }

  friend Ideal operator+(const Ideal& a, const Ideal& b) {
    auto gens = a.gens_;
    gens.insert(gens.end(), b.gens_.begin(), b.gens_.end());
    return Ideal(a.ring_, std::move(gens));
  }

 private:
  RingContext ring_;
  std::vector<Polynomial> gens_;
  std::vector<MultiDegree> degrees_;
};

namespace detail {

inline std::uint64_t support_mask(const Monomial& m) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) mask |= std::uint64_t{1} << i;
  return mask;
}

/// Polynomial with terms sorted descending in a term order.
struct OrderedPoly {
  std::vector<Term> terms;
  std::int64_t sugar = 0;
  std::uint64_t lm_mask = 0;

  const Monomial& lm() const { return terms.front().mono; }
  const Rational& lc() const { return terms.front().coeff; }
  bool is_zero() const { return terms.empty(); }
};

inline OrderedPoly to_ordered(const Polynomial& p, const MonomialOrder& order) {
  OrderedPoly o;
  o.terms = p.terms();
  std::sort(o.terms.begin(), o.terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  for (const Term& t : o.terms) o.sugar = std::max(o.sugar, order.weight(t.mono));
  if (!o.terms.empty()) o.lm_mask = support_mask(o.lm());
  return o;
}

inline Polynomial to_polynomial(const OrderedPoly& p, std::size_t nvars) { return Polynomial(nvars, p.terms); }

inline void make_monic(OrderedPoly& p) {
  if (p.terms.empty() || p.lc() == 1) return;
  const Rational inv = 1 / p.lc();
  for (Term& t : p.terms) t.coeff *= inv;
}

/// out = h[from..] - c * m * g, all sorted descending in `order`.
inline std::vector<Term> sub_mul(const std::vector<Term>& h, std::size_t from, const Rational& c, const Monomial& m,
                                 const std::vector<Term>& g, std::size_t gfrom, const MonomialOrder& order) {
  std::vector<Term> out;
  out.reserve(h.size() - from + g.size() - gfrom);
  std::size_t i = from, j = gfrom;
  Monomial mg;
  bool have = false;
  while (i < h.size() || j < g.size()) {
    if (j < g.size() && !have) {
      mg = m * g[j].mono;
      have = true;
    }
    int cmp;
    if (j >= g.size()) cmp = 1;
    else if (i >= h.size()) cmp = -1;
    else cmp = order.compare(h[i].mono, mg);
    if (cmp > 0) {
      out.push_back(h[i++]);
    } else if (cmp < 0) {
      out.push_back({-c * g[j].coeff, mg});
      ++j;
      have = false;
    } else {
      Rational v = h[i].coeff - c * g[j].coeff;
      if (v != 0) out.push_back({std::move(v), mg});
      ++i;
      ++j;
      have = false;
    }
  }
  return out;
}

inline const OrderedPoly* find_divisor(const Monomial& m, std::uint64_t mask, const std::vector<const OrderedPoly*>& basis) {
  for (const OrderedPoly* g : basis) {
    if ((g->lm_mask & ~mask) != 0) continue;
    if (g->lm().divides(m)) return g;
  }
  return nullptr;
}

/// Full reduction of h modulo monic `basis`; the result is monic unless zero.
inline OrderedPoly reduce(OrderedPoly h, const std::vector<const OrderedPoly*>& basis, const MonomialOrder& order,
                          bool monic = true) {
  std::vector<Term> rem;
  std::vector<Term> cur = std::move(h.terms);
  std::size_t pos = 0;
  while (pos < cur.size()) {
    const Term& lt = cur[pos];
    const OrderedPoly* g = find_divisor(lt.mono, support_mask(lt.mono), basis);
    if (g == nullptr) {
      rem.push_back(lt);
      ++pos;
      continue;
    }
    const Monomial q = lt.mono / g->lm();
    h.sugar = std::max(h.sugar, g->sugar + order.weight(q));
    const Rational c = lt.coeff;  // g is monic
    cur = sub_mul(cur, pos + 1, c, q, g->terms, 1, order);
    pos = 0;
  }
  h.terms = std::move(rem);
  h.lm_mask = h.terms.empty() ? 0 : support_mask(h.lm());
  if (monic) make_monic(h);
  return h;
}

inline OrderedPoly spoly(const OrderedPoly& f, const OrderedPoly& g, const MonomialOrder& order) {
  const Monomial l = lcm(f.lm(), g.lm());
  const Monomial mf = l / f.lm(), mg = l / g.lm();
  OrderedPoly s;
  std::vector<Term> a;
  a.reserve(f.terms.size());
  for (std::size_t i = 1; i < f.terms.size(); ++i) a.push_back({f.terms[i].coeff, mf * f.terms[i].mono});
  s.terms = sub_mul(a, 0, 1, mg, g.terms, 1, order);
  s.sugar = std::max(f.sugar + order.weight(mf), g.sugar + order.weight(mg));
  return s;
}

// Fraction-free variants used inside Buchberger. Elements are kept with
// coprime integer coefficients and positive leading coefficient; only scalar
// multiples matter there, and integer arithmetic avoids a gcd per term.

inline mpz_class content_of(const std::vector<Term>& a, const std::vector<Term>& b) {
  mpz_class g = 0;
  for (const auto* v : {&a, &b})
    for (const Term& t : *v) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
      if (g == 1) return g;
    }
  return g;
}

inline void divide_exact(std::vector<Term>& v, const mpz_class& g) {
  for (Term& t : v) mpz_divexact(t.coeff.get_num_mpz_t(), t.coeff.get_num_mpz_t(), g.get_mpz_t());
}

inline void make_primitive(OrderedPoly& p) {
  if (p.terms.empty()) return;
  mpz_class den = 1;
  for (const Term& t : p.terms) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  if (den != 1)
    for (Term& t : p.terms) t.coeff *= den;
  mpz_class g = content_of(p.terms, {});
  if (p.lc() < 0) g = -g;
  if (g != 1) divide_exact(p.terms, g);
}

/// out = a * h[from..] - c * m * g[gfrom..] on integer coefficients.
inline std::vector<Term> sub_mul_ff(const std::vector<Term>& h, std::size_t from, const mpz_class& a, const mpz_class& c,
                                    const Monomial& m, const std::vector<Term>& g, std::size_t gfrom,
                                    const MonomialOrder& order) {
  std::vector<Term> out;
  out.reserve(h.size() - from + g.size() - gfrom);
  std::size_t i = from, j = gfrom;
  Monomial mg;
  bool have = false;
  mpz_class v;
  while (i < h.size() || j < g.size()) {
    if (j < g.size() && !have) {
      mg = m * g[j].mono;
      have = true;
    }
    int cmp;
    if (j >= g.size()) cmp = 1;
    else if (i >= h.size()) cmp = -1;
    else cmp = order.compare(h[i].mono, mg);
    if (cmp > 0) {
      v = a * h[i].coeff.get_num();
      out.push_back({Rational(v), h[i].mono});
      ++i;
    } else if (cmp < 0) {
      v = -c * g[j].coeff.get_num();
      out.push_back({Rational(v), mg});
      ++j;
      have = false;
    } else {
      v = a * h[i].coeff.get_num() - c * g[j].coeff.get_num();
      if (v != 0) out.push_back({Rational(v), mg});
      ++i;
      ++j;
      have = false;
    }
  }
  return out;
}

/// A nonzero multiple of the full reduction of integral h modulo a primitive
/// integral basis, made primitive. With keep_lead the leading term is left alone.
inline OrderedPoly reduce_ff(OrderedPoly h, const std::vector<const OrderedPoly*>& basis, const MonomialOrder& order,
                             bool keep_lead = false) {
  std::vector<Term> rem;
  std::vector<Term> cur = std::move(h.terms);
  std::size_t pos = 0;
  if (keep_lead && !cur.empty()) {
    rem.push_back(cur.front());
    pos = 1;
  }
  int steps = 0;
  mpz_class d, a, c;
  while (pos < cur.size()) {
    const Term& lt = cur[pos];
    const OrderedPoly* g = find_divisor(lt.mono, support_mask(lt.mono), basis);
    if (g == nullptr) {
      rem.push_back(lt);
      ++pos;
      continue;
    }
    const Monomial q = lt.mono / g->lm();
    h.sugar = std::max(h.sugar, g->sugar + order.weight(q));
    const mpz_class& gl = g->lc().get_num();
    mpz_gcd(d.get_mpz_t(), gl.get_mpz_t(), lt.coeff.get_num_mpz_t());
    mpz_divexact(a.get_mpz_t(), gl.get_mpz_t(), d.get_mpz_t());
    mpz_divexact(c.get_mpz_t(), lt.coeff.get_num_mpz_t(), d.get_mpz_t());
    cur = sub_mul_ff(cur, pos + 1, a, c, q, g->terms, 1, order);
    if (a != 1)
      for (Term& t : rem) t.coeff.get_num() *= a;
    pos = 0;
    if (++steps % 8 == 0) {
      const mpz_class k = content_of(rem, cur);
      if (k > 1) {
        divide_exact(rem, k);
        divide_exact(cur, k);
      }
    }
  }
  h.terms = std::move(rem);
  h.lm_mask = h.terms.empty() ? 0 : support_mask(h.lm());
  make_primitive(h);
  return h;
}

inline OrderedPoly spoly_ff(const OrderedPoly& f, const OrderedPoly& g, const MonomialOrder& order) {
  const Monomial l = lcm(f.lm(), g.lm());
  const Monomial mf = l / f.lm(), mg = l / g.lm();
  mpz_class d, a, c;
  mpz_gcd(d.get_mpz_t(), f.lc().get_num_mpz_t(), g.lc().get_num_mpz_t());
  mpz_divexact(a.get_mpz_t(), g.lc().get_num_mpz_t(), d.get_mpz_t());
  mpz_divexact(c.get_mpz_t(), f.lc().get_num_mpz_t(), d.get_mpz_t());
  std::vector<Term> t;
  t.reserve(f.terms.size());
  for (std::size_t i = 1; i < f.terms.size(); ++i) t.push_back({f.terms[i].coeff, mf * f.terms[i].mono});
  OrderedPoly s;
  s.terms = sub_mul_ff(t, 0, a, c, mg, g.terms, 1, order);
  s.sugar = std::max(f.sugar + order.weight(mf), g.sugar + order.weight(mg));
  return s;
}

/// Buchberger's algorithm with the Gebauer-Moeller criteria. Pairs are
/// selected by (sugar, lcm); on homogeneous input this is the normal strategy.
inline std::vector<OrderedPoly> buchberger(const std::vector<OrderedPoly>& input, const MonomialOrder& order) {
  std::vector<OrderedPoly> store;
  std::vector<bool> active;

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::int64_t sugar;
  };
  std::vector<Pair> pairs;

  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    const int c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  };

  auto update = [&](std::size_t h) {
    const Monomial& lh = store[h].lm();
    // Candidate new pairs with every active element.
    std::vector<Pair> c;
    for (std::size_t g = 0; g < h; ++g) {
      if (!active[g]) continue;
      const Monomial l = lcm(store[g].lm(), lh);
      const std::int64_t sugar = std::max(store[g].sugar + order.weight(l / store[g].lm()),
                                          store[h].sugar + order.weight(l / lh));
      c.push_back({g, h, l, sugar});
    }
    // Criterion M/F: drop a pair if another new pair's lcm properly divides it
    // (or equals it and comes earlier), unless coprime (kept for criterion B).
    std::vector<Pair> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      bool keep = true;
      const bool cop = coprime(store[c[a].i].lm(), lh);
      if (!cop) {
        for (std::size_t b = 0; b < c.size() && keep; ++b) {
          if (b == a) continue;
          if (!c[b].lcm.divides(c[a].lcm)) continue;
          if (!(c[b].lcm == c[a].lcm)) keep = false;
          else if (b < a || coprime(store[c[b].i].lm(), lh)) keep = false;
        }
      }
      if (keep) d.push_back(c[a]);
    }
    // Product criterion on the survivors; if an equal-lcm coprime pair
    // existed it already eliminated its siblings above.
    std::vector<Pair> e;
    for (const Pair& p : d)
      if (!coprime(store[p.i].lm(), lh)) e.push_back(p);
    // Criterion B on old pairs.
    std::vector<Pair> kept;
    for (const Pair& p : pairs) {
      if (lh.divides(p.lcm)) {
        const Monomial l1 = lcm(store[p.i].lm(), lh), l2 = lcm(store[p.j].lm(), lh);
        if (!(l1 == p.lcm) && !(l2 == p.lcm)) continue;
      }
      kept.push_back(p);
    }
    kept.insert(kept.end(), e.begin(), e.end());
    pairs = std::move(kept);
    for (std::size_t g = 0; g < h; ++g)
      if (active[g] && lh.divides(store[g].lm())) active[g] = false;
  };

  auto active_basis = [&]() {
    std::vector<const OrderedPoly*> b;
    for (std::size_t i = 0; i < store.size(); ++i)
      if (active[i]) b.push_back(&store[i]);
    return b;
  };

  auto add = [&](OrderedPoly p) {
    store.push_back(std::move(p));
    active.push_back(true);
    update(store.size() - 1);
  };

  // Seed with the inputs in increasing order of leading monomial.
  std::vector<OrderedPoly> seeds;
  for (const OrderedPoly& f : input)
    if (!f.is_zero()) {
      seeds.push_back(f);
      make_primitive(seeds.back());
    }
  std::sort(seeds.begin(), seeds.end(), [&](const OrderedPoly& a, const OrderedPoly& b) {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    return order.compare(a.lm(), b.lm()) < 0;
  });
  for (OrderedPoly& f : seeds) {
    OrderedPoly r = reduce_ff(std::move(f), active_basis(), order);
    if (r.is_zero()) continue;
    if (r.lm().is_one()) return {r};
    add(std::move(r));
  }

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
    const Pair p = *it;
    pairs.erase(it);
    OrderedPoly s = spoly_ff(store[p.i], store[p.j], order);
    OrderedPoly r = reduce_ff(std::move(s), active_basis(), order);
    if (r.is_zero()) continue;
    if (r.lm().is_one()) return {r};
    add(std::move(r));
  }

  // Reduced basis: minimal leading terms, tails fully reduced, monic.
  std::vector<OrderedPoly> minimal;
  for (std::size_t i = 0; i < store.size(); ++i)
    if (active[i]) minimal.push_back(store[i]);
  std::sort(minimal.begin(), minimal.end(),
            [&](const OrderedPoly& a, const OrderedPoly& b) { return order.compare(a.lm(), b.lm()) < 0; });
  std::vector<OrderedPoly> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const OrderedPoly*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(&minimal[j]);
    OrderedPoly g = reduce_ff(minimal[i], others, order, true);
    make_monic(g);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace detail

/// A Groebner basis of an ideal for a fixed term order.
class GroebnerBasis {
 public:
  GroebnerBasis(RingContext ring, MonomialOrder order, std::vector<detail::OrderedPoly> elements, bool reduced)
      : ring_(std::move(ring)), order_(std::move(order)), elements_(std::move(elements)), reduced_(reduced) {
    for (const auto& e : elements_) ptrs_.push_back(&e);
  }

  GroebnerBasis(const GroebnerBasis& o) : GroebnerBasis(o.ring_, o.order_, o.elements_, o.reduced_) {}
  GroebnerBasis& operator=(const GroebnerBasis& o) {
    if (this != &o) *this = GroebnerBasis(o);
    return *this;
  }
  GroebnerBasis(GroebnerBasis&&) = default;
  GroebnerBasis& operator=(GroebnerBasis&& o) = default;

  const RingContext& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  bool reduced() const { return reduced_; }
  std::size_t size() const { return elements_.size(); }
  bool is_unit() const { return elements_.size() == 1 && elements_[0].lm().is_one(); }

  std::vector<Polynomial> elements() const {
    std::vector<Polynomial> out;
    for (const auto& e : elements_) out.push_back(detail::to_polynomial(e, ring_.nvars()));
    return out;
  }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& e : elements_) out.push_back(e.lm());
    return out;
  }

  const std::vector<detail::OrderedPoly>& ordered_elements() const { return elements_; }

  Polynomial normal_form(const Polynomial& f) const {
    auto r = detail::reduce(detail::to_ordered(f, order_), ptrs_, order_, false);
    return detail::to_polynomial(r, ring_.nvars());
  }

  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

  Ideal ideal() const { return Ideal(ring_, elements()); }

 private:
  RingContext ring_;
  MonomialOrder order_;
  std::vector<detail::OrderedPoly> elements_;
  std::vector<const detail::OrderedPoly*> ptrs_;
  bool reduced_;
};

inline MonomialOrder default_order(const RingContext& ring) { return MonomialOrder::degrevlex(ring.weights()); }

inline GroebnerBasis groebner_basis(const Ideal& ideal, const MonomialOrder& order) {
  std::vector<detail::OrderedPoly> in;
  for (const Polynomial& g : ideal.generators()) in.push_back(detail::to_ordered(g, order));
  return GroebnerBasis(ideal.ring(), order, detail::buchberger(in, order), true);
}

inline GroebnerBasis groebner_basis(const Ideal& ideal) { return groebner_basis(ideal, default_order(ideal.ring())); }

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) { return gb.normal_form(f); }

/// J subset of I.
inline bool contains(const GroebnerBasis& gb, const Ideal& j) {
  for (const Polynomial& g : j.generators())
    if (!gb.contains(g)) return false;
  return true;
}

inline bool ideals_equal(const Ideal& a, const Ideal& b) {
  return contains(groebner_basis(a), b) && contains(groebner_basis(b), a);
}

inline bool is_unit_ideal(const Ideal& ideal) { return groebner_basis(ideal).is_unit(); }

/// Generators of I intersected with the subring omitting `vars` (same ring).
inline Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& vars) {
  const auto order = MonomialOrder::elimination(ideal.ring().weights(), vars);
  const GroebnerBasis gb = groebner_basis(ideal, order);
  std::vector<Polynomial> kept;
  for (const auto& e : gb.ordered_elements()) {
    bool uses = false;
    for (std::size_t v : vars) uses = uses || e.lm()[v] != 0;
    // Block order: the leading monomial involves an eliminated variable iff
    // some term does.
    if (!uses) kept.push_back(detail::to_polynomial(e, ideal.ring().nvars()));
  }
  return Ideal(ideal.ring(), std::move(kept));
}

namespace detail {

/// Ring with one appended auxiliary variable used only inside an
/// elimination; its ring weight is 1 and it carries no multidegree.
inline RingContext with_aux_variable(const RingContext& ring, const std::string& name) {
  return RingContext::affine([&] {
    auto n = ring.names();
    n.push_back(name);
    return n;
  }());
}

/// Elimination of the last variable of an (n+1)-variable ideal, returned in
/// the n-variable ring `target`.
inline Ideal eliminate_last(const std::vector<Polynomial>& gens, const RingContext& target) {
  const std::size_t n = target.nvars();
  IntVector weights = target.weights();
  weights.push_back(1);
  const auto order = MonomialOrder::elimination(weights, {n});
  std::vector<OrderedPoly> in;
  for (const Polynomial& g : gens) in.push_back(to_ordered(g, order));
  std::vector<Polynomial> kept;
  for (const OrderedPoly& e : buchberger(in, order))
    if (e.lm()[n] == 0) kept.push_back(to_polynomial(e, n + 1).resized(n));
  return Ideal(target, std::move(kept));
}

}  // namespace detail

/// I intersected with J, via t*I + (1-t)*J and elimination of t.
inline Ideal intersect(const Ideal& a, const Ideal& b) {
  const RingContext& ring = a.ring();
  const std::size_t n = ring.nvars();
  if (a.is_zero() || b.is_zero()) return Ideal(ring, {});
  const Polynomial t = Polynomial::variable(n + 1, n);
  const Polynomial one_minus_t = Polynomial::constant(n + 1, 1) - t;
  std::vector<Polynomial> gens;
  for (const Polynomial& f : a.generators()) gens.push_back(t * f.resized(n + 1));
  for (const Polynomial& g : b.generators()) gens.push_back(one_minus_t * g.resized(n + 1));
  return detail::eliminate_last(gens, ring);
}

enum class SaturationStrategy {
  Automatic,    // Bayer when weighted-homogeneous, elimination otherwise
  Elimination,  // I + (1 - t g), eliminate t
  Bayer,        // revlex with the saturating variable last
};

namespace detail {

/// (I : x_var^inf) for a weighted-homogeneous ideal: Groebner basis in
/// degrevlex with x_var cheapest, then divide out powers of x_var.
inline Ideal saturate_variable_bayer(const Ideal& ideal, std::size_t var) {
  const auto order = MonomialOrder::degrevlex_last(ideal.ring().weights(), var);
  const GroebnerBasis gb = groebner_basis(ideal, order);
  std::vector<Polynomial> gens;
  Monomial divisor(ideal.ring().nvars());
  for (Polynomial g : gb.elements()) {
    const int e = g.min_exponent(var);
    if (e > 0) {
      Monomial m(ideal.ring().nvars());
      m.set(var, e);
      std::vector<Term> terms;
      for (const Term& t : g.terms()) terms.push_back({t.coeff, t.mono / m});
      g = Polynomial(g.nvars(), std::move(terms));
    }
    gens.push_back(std::move(g));
  }
  return Ideal(ideal.ring(), std::move(gens));
}

/// (I : g^inf) for weighted-homogeneous I and g: adjoin z of the degree of g,
/// saturate I + (z - g) by z as above, then substitute z := g.
inline Ideal saturate_element_bayer(const Ideal& ideal, const Polynomial& g) {
  const RingContext& ring = ideal.ring();
  const std::size_t n = ring.nvars();
  IntVector weights = ring.weights();
  std::int64_t wg = ring.weight_of(g.terms().front().mono);
  weights.push_back(wg);
  const auto order = MonomialOrder::degrevlex(weights);  // z = x_n is already last
  std::vector<OrderedPoly> in;
  for (const Polynomial& f : ideal.generators()) in.push_back(to_ordered(f.resized(n + 1), order));
  in.push_back(to_ordered(Polynomial::variable(n + 1, n) - g.resized(n + 1), order));
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial::variable(n, i));
  images.push_back(g);
  std::vector<Polynomial> gens;
  for (const OrderedPoly& e : buchberger(in, order)) {
    Polynomial p = to_polynomial(e, n + 1);
    const int k = p.min_exponent(n);
    if (k > 0) {
      Monomial m(n + 1);
      m.set(n, k);
      std::vector<Term> terms;
      for (const Term& t : p.terms()) terms.push_back({t.coeff, t.mono / m});
      p = Polynomial(n + 1, std::move(terms));
    }
    gens.push_back(p.substitute(images, n));
  }
  return Ideal(ring, std::move(gens));
}

inline Ideal saturate_element_elimination(const Ideal& ideal, const Polynomial& g) {
  const std::size_t n = ideal.ring().nvars();
  std::vector<Polynomial> gens;
  for (const Polynomial& f : ideal.generators()) gens.push_back(f.resized(n + 1));
  gens.push_back(Polynomial::constant(n + 1, 1) - Polynomial::variable(n + 1, n) * g.resized(n + 1));
  return eliminate_last(gens, ideal.ring());
}

inline bool weighted_homogeneous(const Polynomial& g, const RingContext& ring) {
  if (g.is_zero()) return true;
  const std::int64_t w = ring.weight_of(g.terms().front().mono);
  for (const Term& t : g.terms())
    if (ring.weight_of(t.mono) != w) return false;
  return true;
}

}  // namespace detail

/// (I : g^inf).
inline Ideal saturate_element(const Ideal& ideal, const Polynomial& g,
                              SaturationStrategy strategy = SaturationStrategy::Automatic) {
  if (g.is_zero()) fail(ErrorCode::ZeroPolynomial, "cannot saturate by the zero polynomial");
  if (ideal.is_zero()) return ideal;
  if (g.is_constant()) return ideal;
  const bool homogeneous = ideal.is_weighted_homogeneous() && detail::weighted_homogeneous(g, ideal.ring());
  if (strategy == SaturationStrategy::Bayer && !homogeneous)
    fail(ErrorCode::Internal, "Bayer saturation needs weighted-homogeneous input");
  if (strategy == SaturationStrategy::Elimination || !homogeneous)
    return detail::saturate_element_elimination(ideal, g);
  if (g.is_monomial()) {
    // (I : (x y)^inf) = ((I : x^inf) : y^inf)
    Ideal cur = ideal;
    const Monomial& m = g.terms().front().mono;
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m[v] != 0) cur = detail::saturate_variable_bayer(cur, v);
    return cur;
  }
  return detail::saturate_element_bayer(ideal, g);
}

/// (I : J^inf) as the intersection of the saturations by J's generators.
inline Ideal saturate_ideal(const Ideal& ideal, const Ideal& by,
                            SaturationStrategy strategy = SaturationStrategy::Automatic) {
  if (by.is_zero()) fail(ErrorCode::InvalidInput, "cannot saturate by the zero ideal");
  std::optional<Ideal> acc;
  for (const Polynomial& g : by.generators()) {
    if (g.is_constant()) return ideal;
    Ideal s = saturate_element(ideal, g, strategy);
    acc = acc ? intersect(*acc, s) : s;
  }
  return *acc;
}

/// Krull dimension of R/I from the leading-term ideal of a Groebner basis;
/// nullopt for the unit ideal.
inline std::optional<int> krull_dimension(const GroebnerBasis& gb) {
  if (gb.is_unit()) return std::nullopt;
  const std::size_t n = gb.ring().nvars();
  std::vector<std::uint64_t> supports;
  for (const Monomial& m : gb.leading_monomials()) supports.push_back(detail::support_mask(m));
  // Largest set U of variables such that no leading monomial lives in U.
  int best = 0;
  auto independent = [&](std::uint64_t u) {
    for (std::uint64_t s : supports)
      if ((s & ~u) == 0) return false;
    return true;
  };
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t u, int size) -> void {
    if (size + static_cast<int>(n - i) <= best) return;
    if (i == n) {
      best = size;
      return;
    }
    const std::uint64_t with = u | (std::uint64_t{1} << i);
    if (independent(with)) self(self, i + 1, with, size + 1);
    self(self, i + 1, u, size);
  };
  rec(rec, 0, 0, 0);
  return best;
}

inline std::optional<int> krull_dimension(const Ideal& ideal) { return krull_dimension(groebner_basis(ideal)); }

/// Number of standard monomials of a zero-dimensional ideal (0 for the unit ideal).
inline std::size_t vector_space_dimension(const GroebnerBasis& gb) {
  if (gb.is_unit()) return 0;
  const std::size_t n = gb.ring().nvars();
  const auto lms = gb.leading_monomials();
  for (std::size_t v = 0; v < n; ++v) {
    bool pure = false;
    for (const Monomial& m : lms) {
      bool only_v = m[v] > 0;
      for (std::size_t w = 0; w < n && only_v; ++w)
        if (w != v && m[w] != 0) only_v = false;
      pure = pure || only_v;
    }
    if (!pure) fail(ErrorCode::NotZeroDimensional, "ideal is not zero-dimensional");
  }
  std::size_t count = 0;
  Monomial cur(n);
  auto in_lead_ideal = [&](const Monomial& m) {
    for (const Monomial& l : lms)
      if (l.divides(m)) return true;
    return false;
  };
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (v == n) {
      ++count;
      return;
    }
    for (int e = 0;; ++e) {
      cur.set(v, e);
      if (in_lead_ideal(cur)) break;
      self(self, v + 1);
    }
    cur.set(v, 0);
  };
  rec(rec, 0);
  return count;
}

inline std::size_t vector_space_dimension(const Ideal& ideal) { return vector_space_dimension(groebner_basis(ideal)); }

}  // namespace toricsegre
