#pragma once

// Push-forward Segre classes of subschemes of smooth projective toric
// varieties by residual intersection:
//   s_i = alpha^{i+k-n} - [R_{i+k-n}] - sum_{j<i} C(i+k-n, i-j) alpha^{i-j} s_j.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "toricsegre/error.hpp"
#include "toricsegre/groebner.hpp"
#include "toricsegre/random.hpp"
#include "toricsegre/toric.hpp"

namespace toricsegre {

struct SegreOptions {
  std::uint64_t seed = 0;
  std::int64_t coeff_bound = 100;
  int retries = 5;
  std::function<void(const std::string&)> log;  // optional progress sink
};

/// A subscheme after B-saturation. `generators` is the ideal as given (used
/// for the degree alpha and the sections); `saturated` is (I : B^inf).
struct SubschemeInput {
  Ideal generators;
  Ideal saturated;
  int n = 0;
};

/// One equation sum_i b_i beta_i = gamma of the residual system.
struct ResidualRow {
  std::vector<int> tuple;  // exponents p_j of the divisors D_j
  std::size_t index = 0;   // position of the tuple in the enumeration
  std::int64_t gamma = 0;
  IntVector beta;
};

struct ResidualData {
  int d = 0;
  bool empty = false;
  int dimension = -1;  // of V(I_{R_d}); -1 when empty
  ChowClass cls;
  std::vector<ResidualRow> rows;
  std::vector<std::vector<int>> skipped;  // tuples whose intersection was not finite
  std::size_t consistency_rows = 0;
  int attempts = 1;
  Ideal jd;  // ((f_1..f_d) : B^inf)
  Ideal ir;  // (J_d : I^inf)
};

struct SegreResult {
  MultiDegree alpha;
  ChowClass alpha_class;
  int n = 0, k = 0;
  std::vector<ChowClass> s;  // s_i has codimension k - n + i
  std::vector<ResidualData> residuals;
  std::uint64_t seed = 0;
  std::int64_t coeff_bound = 0;
  int retries_used = 0;
};

/// Replaces I by (I : B^inf) and computes n = dim Z.
inline SubschemeInput preprocess(const Ideal& ideal, const ToricVariety& x) {
  if (ideal.is_zero()) fail(ErrorCode::WholeSpace, "the ideal is zero: the subscheme is all of X");
  Ideal sat = saturate_irrelevant(ideal, x.fan());
  const GroebnerBasis gb = groebner_basis(sat);
  if (gb.is_unit()) fail(ErrorCode::EmptySubscheme, "the subscheme is empty (its ideal saturates to the unit ideal)");
  if (gb.size() == 0) fail(ErrorCode::WholeSpace, "the ideal saturates to zero: the subscheme is all of X");
  const int dim = *krull_dimension(gb) - static_cast<int>(x.nrays() - x.dim());
  if (dim < 0 || dim >= static_cast<int>(x.dim()))
    fail(ErrorCode::Internal, "unexpected subscheme dimension " + std::to_string(dim));
  return {ideal, gb.ideal(), dim};
}

/// f_j = sum_i g_i * random(alpha - deg g_i), j = 1..count.
inline std::vector<Polynomial> pick_sections(const Ideal& ideal, const MultiDegree& alpha, std::size_t count,
                                             SeededRandom& rng, std::int64_t bound) {
  const RingContext& ring = ideal.ring();
  std::vector<Polynomial> out;
  for (std::size_t j = 0; j < count; ++j) {
    Polynomial f(ring.nvars());
    for (std::size_t i = 0; i < ideal.size(); ++i)
      f += ideal.generators()[i] * random_homogeneous(alpha - ideal.degrees()[i], rng, bound, ring);
    if (f.is_zero()) fail(ErrorCode::DimensionFailure, "a random section vanished identically");
    if (multidegree_of(f, ring) != alpha) fail(ErrorCode::Internal, "section has the wrong degree");
    out.push_back(std::move(f));
  }
  return out;
}

/// Length of a zero-dimensional subscheme of X, summed over charts: chart t
/// counts only the part of V(J) outside the earlier charts.
inline std::int64_t zero_dim_length(const Ideal& j, const Fan& fan) {
  std::int64_t total = 0;
  for (std::size_t t = 0; t < fan.max_cones.size(); ++t) {
    const Cone& cone = fan.max_cones[t];
    const Ideal jt = chart_dehomogenize(j, cone);
    const GroebnerBasis gb = groebner_basis(jt);
    if (gb.is_unit()) continue;
    if (krull_dimension(gb) != 0)
      fail(ErrorCode::NotZeroDimensional, "the scheme is not finite in the chart of cone " + detail::cone_string(cone));
    const auto length = static_cast<std::int64_t>(vector_space_dimension(gb));
    if (t == 0) {
      total += length;
      continue;
    }
    // M_t: earlier irrelevant generators, dehomogenized in this chart.
    std::vector<Polynomial> m;
    for (std::size_t s = 0; s < t; ++s) {
      Monomial mono(cone.size());
      for (std::size_t i = 0; i < cone.size(); ++i)
        if (!std::binary_search(fan.max_cones[s].begin(), fan.max_cones[s].end(), cone[i])) mono.set(i, 1);
      // Keep a minimal generating set.
      bool redundant = false;
      for (const Polynomial& p : m) redundant = redundant || p.terms().front().mono.divides(mono);
      if (!redundant) m.push_back(Polynomial::monomial(mono));
    }
    const Ideal rest = saturate_ideal(jt, Ideal(jt.ring(), m));
    total += length - static_cast<std::int64_t>(vector_space_dimension(rest));
  }
  return total;
}

/// Exponent tuples of length r summing to m, in descending lexicographic order.
inline std::vector<std::vector<int>> exponent_tuples(std::size_t r, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(r, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == r) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[i] = e;
      self(self, i + 1, left - e);
    }
    cur[i] = 0;
  };
  if (r > 0) rec(rec, 0, m);
  return out;
}

/// (J_d, I_{R_d}) = (((f_1..f_d) : B^inf), (J_d : I^inf)).
inline std::pair<Ideal, Ideal> residual_ideal(std::size_t d, const std::vector<Polynomial>& sections,
                                              const SubschemeInput& z, const ToricVariety& x) {
  const Ideal f(x.ring(), std::vector<Polynomial>(sections.begin(), sections.begin() + static_cast<std::ptrdiff_t>(d)));
  const Ideal jd = saturate_irrelevant(f, x.fan());
  const Ideal ir = groebner_basis(saturate_ideal(jd, z.generators)).ideal();
  return {jd, ir};
}

/// Solves the residual system for [R_d] given the residual ideal.
inline ResidualData residual_class(int d, const Ideal& ir, const ToricVariety& x, std::uint64_t seed,
                                   std::uint64_t attempt, std::int64_t bound) {
  const ChowRing& chow = x.chow();
  const int k = static_cast<int>(x.dim());
  ResidualData out;
  out.d = d;
  const GroebnerBasis gb = groebner_basis(ir);
  if (gb.is_unit()) {
    out.empty = true;
    out.cls = chow.zero(d);
    return out;
  }
  out.dimension = *krull_dimension(gb) - static_cast<int>(x.nrays() - x.dim());
  if (out.dimension != k - d)
    fail(ErrorCode::DimensionFailure, "residual R_" + std::to_string(d) + " has dimension " +
                                          std::to_string(out.dimension) + ", expected " + std::to_string(k - d));

  const std::size_t h = chow.rank(d);
  const auto tuples = exponent_tuples(x.nrays(), k - d);
  RatMatrix a;
  RatVector g;
  std::optional<RatVector> b;
  for (std::size_t idx = 0; idx < tuples.size(); ++idx) {
    const auto& p = tuples[idx];
    Monomial dp(x.nrays());
    for (std::size_t j = 0; j < p.size(); ++j) dp.set(j, p[j]);
    IntVector beta;
    bool nonzero = false;
    for (const Monomial& w : chow.basis(d)) {
      beta.push_back(chow.degree(chow.monomial_class(w * dp)));
      nonzero = nonzero || beta.back() != 0;
    }
    // A zero row carries no information about b.
    if (!nonzero) continue;
    const bool extra = b.has_value();
    if (extra && out.consistency_rows >= 1) break;

    SeededRandom rng(seed, {attempt, static_cast<std::uint64_t>(d), 1 + idx});
    std::vector<Polynomial> gens = ir.generators();
    for (std::size_t j = 0; j < p.size(); ++j)
      for (int c = 0; c < p[j]; ++c) gens.push_back(random_homogeneous(x.variable_degree(j), rng, bound, x.ring()));
    std::int64_t gamma;
    try {
      gamma = zero_dim_length(saturate_irrelevant(Ideal(x.ring(), gens), x.fan()), x.fan());
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotZeroDimensional) throw;
      out.skipped.push_back(p);
      continue;
    }
    out.rows.push_back({p, idx, gamma, beta});
    RatVector row;
    for (auto v : beta) row.push_back(make_rational(v));
    a.push_back(row);
    g.push_back(make_rational(gamma));
    if (extra) {
      Rational lhs = 0;
      for (std::size_t i = 0; i < h; ++i) lhs += row[i] * (*b)[i];
      if (lhs != g.back())
        fail(ErrorCode::InconsistentSystem, "residual system for R_" + std::to_string(d) + " is inconsistent at tuple " +
                                                std::to_string(idx));
      ++out.consistency_rows;
    } else if (rank(a) == h) {
      b = solve(a, g, h);
      if (!b) fail(ErrorCode::InconsistentSystem, "residual system for R_" + std::to_string(d) + " is inconsistent");
      out.consistency_rows = a.size() - h;
    }
  }
  if (!b) fail(ErrorCode::InconsistentSystem, "residual system for R_" + std::to_string(d) + " does not have full rank");
  out.cls.codim = d;
  for (const Rational& v : *b) {
    if (!is_integer(v))
      fail(ErrorCode::NonIntegerSolution, "residual class of R_" + std::to_string(d) + " has a non-integer coefficient");
    out.cls.coeffs.push_back(to_int64(v));
  }
  return out;
}

/// s_i = alpha^{i+k-n} - [R_{i+k-n}] - sum_{j<i} C(i+k-n, i-j) alpha^{i-j} s_j.
inline std::vector<ChowClass> segre_recursion(const ChowRing& chow, const ChowClass& alpha, int n,
                                              const std::vector<ChowClass>& residual_classes) {
  const int k = chow.dim();
  std::vector<ChowClass> s;
  for (int i = 0; i <= n; ++i) {
    const int c = i + k - n;
    ChowClass si = chow.power(alpha, c) - residual_classes[static_cast<std::size_t>(i)];
    for (int j = 0; j < i; ++j)
      si = si - binomial(c, i - j) * chow.multiply(chow.power(alpha, i - j), s[static_cast<std::size_t>(j)]);
    s.push_back(si);
  }
  return s;
}

/// Computes [R_d] for one d with fresh randomness per attempt.
inline ResidualData compute_residual(int d, const SubschemeInput& z, const MultiDegree& alpha, const ToricVariety& x,
                                     const SegreOptions& opt) {
  for (int attempt = 0;; ++attempt) {
    try {
      SeededRandom rng(opt.seed, {static_cast<std::uint64_t>(attempt), static_cast<std::uint64_t>(d), 0});
      const auto sections = pick_sections(z.generators, alpha, static_cast<std::size_t>(d), rng, opt.coeff_bound);
      const auto [jd, ir] = residual_ideal(static_cast<std::size_t>(d), sections, z, x);
      ResidualData r = residual_class(d, ir, x, opt.seed, static_cast<std::uint64_t>(attempt), opt.coeff_bound);
      r.attempts = attempt + 1;
      r.jd = jd;
      r.ir = ir;
      if (opt.log)
        opt.log("R_" + std::to_string(d) + ": " + (r.empty ? std::string("empty") : x.chow().to_string(r.cls)) + " (" +
                std::to_string(r.rows.size()) + " rows, " + std::to_string(r.consistency_rows) + " checks)");
      return r;
    } catch (const Error& e) {
      if (!is_resample_failure(e.code())) throw;
      if (opt.log) opt.log("R_" + std::to_string(d) + " attempt " + std::to_string(attempt) + ": " + e.what());
      if (attempt >= opt.retries)
        fail(ErrorCode::RetriesExhausted, "gave up on R_" + std::to_string(d) + " after " +
                                              std::to_string(attempt + 1) + " attempts: " + e.what());
    }
  }
}

inline SegreResult segre_class(const ToricVariety& x, const Ideal& ideal, const SegreOptions& opt = {}) {
  const SubschemeInput z = preprocess(ideal, x);
  const int k = static_cast<int>(x.dim());
  SegreResult res;
  res.k = k;
  res.n = z.n;
  res.seed = opt.seed;
  res.coeff_bound = opt.coeff_bound;
  res.alpha = x.find_alpha(z.generators.degrees());
  res.alpha_class = x.pic_to_chow(res.alpha);
  if (opt.log) opt.log("n = " + std::to_string(z.n) + ", alpha = " + to_string(res.alpha));
  std::vector<ChowClass> classes;
  for (int d = k - z.n; d <= k; ++d) {
    res.residuals.push_back(compute_residual(d, z, res.alpha, x, opt));
    res.retries_used = std::max(res.retries_used, res.residuals.back().attempts - 1);
    classes.push_back(res.residuals.back().cls);
  }
  res.s = segre_recursion(x.chow(), res.alpha_class, z.n, classes);
  return res;
}

}  // namespace toricsegre
