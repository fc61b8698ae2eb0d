#pragma once

// Wall curves, nefness, ample classes and the common section degree alpha.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "toricsegre/chow.hpp"
#include "toricsegre/error.hpp"
#include "toricsegre/fan.hpp"
#include "toricsegre/linalg.hpp"
#include "toricsegre/ring.hpp"

namespace toricsegre {

/// The invariant curve of a wall between two adjacent maximal cones.
struct WallCurve {
  std::size_t cone_a = 0, cone_b = 0;  // indices into max_cones
  Cone facet;
  IntVector pairing;      // <D_rho, C> for every ray
  IntVector pic_pairing;  // c with c . (A a) = pairing . a
};

/// One wall curve per pair of maximal cones sharing a facet, in order of
/// (cone_a, cone_b). Needs the fan smooth and complete.
inline std::vector<WallCurve> wall_curves(const Fan& fan, const IntMatrix& grading) {
  const std::size_t r = fan.nrays(), k = fan.dim();
  const IntMatrix lift = ChowRing::right_inverse(grading);
  std::vector<WallCurve> out;
  for (std::size_t a = 0; a < fan.max_cones.size(); ++a)
    for (std::size_t b = a + 1; b < fan.max_cones.size(); ++b) {
      const Cone& ca = fan.max_cones[a];
      const Cone& cb = fan.max_cones[b];
      Cone facet;
      std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(), std::back_inserter(facet));
      if (facet.size() + 1 != k) continue;
      std::size_t u = 0, u2 = 0;
      for (std::size_t i : ca)
        if (!std::binary_search(facet.begin(), facet.end(), i)) u = i;
      for (std::size_t i : cb)
        if (!std::binary_search(facet.begin(), facet.end(), i)) u2 = i;
      // u + u2 + sum c_i u_i = 0 over the facet rays.
      RatMatrix m(k, RatVector(facet.size()));
      RatVector rhs(k);
      for (std::size_t row = 0; row < k; ++row) {
        for (std::size_t j = 0; j < facet.size(); ++j) m[row][j] = make_rational(fan.rays[facet[j]][row]);
        rhs[row] = make_rational(-fan.rays[u][row] - fan.rays[u2][row]);
      }
      const auto c = solve(m, rhs, facet.size());
      if (!c) fail(ErrorCode::NotComplete, "wall " + detail::cone_string(facet) + " has no linear wall relation");
      WallCurve w;
      w.cone_a = a;
      w.cone_b = b;
      w.facet = facet;
      w.pairing.assign(r, 0);
      w.pairing[u] = 1;
      w.pairing[u2] = 1;
      for (std::size_t j = 0; j < facet.size(); ++j)
        w.pairing[facet[j]] = to_int64((*c)[j], ErrorCode::NotSmooth);
      // pairing lies in the row lattice of A, so c = pairing . R.
      w.pic_pairing.assign(grading.size(), 0);
      for (std::size_t j = 0; j < grading.size(); ++j)
        for (std::size_t i = 0; i < r; ++i) w.pic_pairing[j] += w.pairing[i] * lift[i][j];
      IntVector check(r, 0);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < grading.size(); ++j) check[i] += w.pic_pairing[j] * grading[j][i];
      if (check != w.pairing) fail(ErrorCode::Internal, "wall pairing is not a function of the degree");
      out.push_back(std::move(w));
    }
  return out;
}

inline std::int64_t pair(const WallCurve& w, const MultiDegree& delta) { return dot(w.pic_pairing, delta); }

inline bool is_nef(const MultiDegree& delta, const std::vector<WallCurve>& walls) {
  return std::all_of(walls.begin(), walls.end(), [&](const WallCurve& w) { return pair(w, delta) >= 0; });
}

inline bool is_ample(const MultiDegree& delta, const std::vector<WallCurve>& walls) {
  return std::all_of(walls.begin(), walls.end(), [&](const WallCurve& w) { return pair(w, delta) >= 1; });
}

namespace detail {

/// Distinct curve classes in Pic-dual coordinates, in first-seen order.
inline IntMatrix distinct_curve_classes(const std::vector<WallCurve>& walls) {
  IntMatrix out;
  for (const WallCurve& w : walls)
    if (std::find(out.begin(), out.end(), w.pic_pairing) == out.end()) out.push_back(w.pic_pairing);
  return out;
}

}  // namespace detail

/// Integral class pairing at least 1 with every wall curve, of small heft
/// weight; throws NotProjective when none exists.
inline MultiDegree find_ample(const std::vector<WallCurve>& walls, const IntVector& heft) {
  const IntMatrix curves = detail::distinct_curve_classes(walls);
  const std::size_t n = heft.size();
  RatVector c;
  for (auto h : heft) c.push_back(make_rational(h));
  const auto sol = lp_minimize(c, to_rational(curves), RatVector(curves.size(), 1));
  if (!sol) fail(ErrorCode::NotProjective, "no ample class: the variety is not projective");
  Integer den = 1;
  for (const Rational& x : *sol) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  MultiDegree delta(n);
  for (std::size_t i = 0; i < n; ++i) delta[i] = to_int64(Rational((*sol)[i] * den));
  // Clearing denominators only scales the pairings up, so delta stays ample.
  return delta;
}

/// Degree alpha with alpha - deg_i nef for every input degree. When the
/// curve classes span a simplicial cone the unique minimal such class is
/// returned; otherwise, or if that point is not integral, start from the
/// first degree and add the ample class until every wall bound holds.
inline MultiDegree find_alpha(const std::vector<MultiDegree>& degrees, const std::vector<WallCurve>& walls,
                              const IntVector& heft) {
  if (degrees.empty()) fail(ErrorCode::InvalidInput, "no degrees given");
  const std::size_t n = degrees.front().size();
  const IntMatrix curves = detail::distinct_curve_classes(walls);
  auto bound = [&](const IntVector& curve) {
    std::int64_t m = dot(curve, degrees.front());
    for (const MultiDegree& d : degrees) m = std::max(m, dot(curve, d));
    return m;
  };
  auto feasible = [&](const MultiDegree& a) {
    for (const IntVector& c : curves)
      if (dot(c, a) < bound(c)) return false;
    return true;
  };

  // Search for n independent curve classes generating all others with
  // nonnegative coefficients (a simplicial Mori cone).
  std::vector<std::size_t> pick;
  std::optional<MultiDegree> apex;
  auto try_subset = [&]() -> bool {
    RatMatrix sub;
    for (std::size_t i : pick) {
      RatVector row;
      for (auto x : curves[i]) row.push_back(make_rational(x));
      sub.push_back(row);
    }
    if (rank(sub) != n) return false;
    // Every curve c must equal sum lambda_i sub_i with lambda >= 0.
    RatMatrix subt(n, RatVector(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) subt[i][j] = sub[j][i];
    for (const IntVector& c : curves) {
      RatVector rhs;
      for (auto x : c) rhs.push_back(make_rational(x));
      const auto lambda = solve(subt, rhs, n);
      if (!lambda) return false;
      for (const Rational& l : *lambda)
        if (l < 0) return false;
    }
    RatVector m;
    for (std::size_t i : pick) m.push_back(make_rational(bound(curves[i])));
    const auto a = solve(sub, m, n);
    if (!a) return false;
    MultiDegree out;
    for (const Rational& x : *a) {
      if (!is_integer(x)) return true;  // simplicial but no integral apex
      out.push_back(to_int64(x));
    }
    if (feasible(out)) apex = out;
    return true;
  };
  bool done = false;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (done) return;
    if (pick.size() == n) {
      done = try_subset();
      return;
    }
    for (std::size_t i = start; i < curves.size() && !done; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  if (n > 0) rec(rec, 0);
  if (apex) return *apex;

  const MultiDegree ample = find_ample(walls, heft);
  MultiDegree a = degrees.front();
  while (!feasible(a)) a = a + ample;
  return a;
}

}  // namespace toricsegre
