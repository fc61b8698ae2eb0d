#pragma once

// Smooth complete fans, the Cox grading, the irrelevant ideal and charts.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toricsegre/error.hpp"
#include "toricsegre/groebner.hpp"
#include "toricsegre/linalg.hpp"
#include "toricsegre/ring.hpp"

namespace toricsegre {

using Cone = std::vector<std::size_t>;  // sorted ray indices

struct Fan {
  IntMatrix rays;               // r rows of length k
  std::vector<Cone> max_cones;  // each sorted

  std::size_t nrays() const { return rays.size(); }
  std::size_t dim() const { return rays.empty() ? 0 : rays[0].size(); }
};

namespace detail {

inline std::string cone_string(const Cone& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + "}";
}

inline IntMatrix ray_matrix(const Fan& fan, const Cone& c) {
  IntMatrix m;
  for (std::size_t i : c) m.push_back(fan.rays[i]);
  return m;
}

/// Integer normal to the hyperplane spanned by k-1 vectors (cofactor vector).
inline IntVector facet_normal(const IntMatrix& facet, std::size_t k) {
  IntVector n(k);
  for (std::size_t j = 0; j < k; ++j) {
    IntMatrix minor;
    for (const IntVector& v : facet) {
      IntVector row;
      for (std::size_t c = 0; c < k; ++c)
        if (c != j) row.push_back(v[c]);
      minor.push_back(row);
    }
    const std::int64_t d = k == 1 ? 1 : determinant(minor);
    n[j] = (j % 2 == 0) ? d : -d;
  }
  return n;
}

inline std::uint64_t cone_mask(const Cone& c) {
  std::uint64_t m = 0;
  for (std::size_t i : c) m |= std::uint64_t{1} << i;
  return m;
}

}  // namespace detail

/// Checks that the fan is smooth and complete; throws NotSmooth, NotComplete
/// or InvalidInput naming the offending cone or facet.
inline void validate_smooth_complete(const Fan& fan) {
  const std::size_t r = fan.nrays(), k = fan.dim();
  if (r == 0 || k == 0) fail(ErrorCode::InvalidInput, "fan has no rays");
  if (r > Monomial::kMaxVariables) fail(ErrorCode::InvalidInput, "too many rays");
  if (fan.max_cones.empty()) fail(ErrorCode::InvalidInput, "fan has no maximal cones");
  for (std::size_t i = 0; i < r; ++i) {
    if (fan.rays[i].size() != k) fail(ErrorCode::InvalidInput, "ray " + std::to_string(i) + " has the wrong length");
    if (content(fan.rays[i]) != 1)
      fail(ErrorCode::InvalidInput, "ray " + std::to_string(i) + " is not a primitive lattice vector");
  }
  std::vector<bool> used(r, false);
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const Cone& cone = fan.max_cones[c];
    for (std::size_t i = 0; i < cone.size(); ++i) {
      if (cone[i] >= r) fail(ErrorCode::InvalidInput, "cone " + detail::cone_string(cone) + " uses an unknown ray");
      if (i > 0 && cone[i] <= cone[i - 1])
        fail(ErrorCode::InvalidInput, "cone " + detail::cone_string(cone) + " is not a sorted set of ray indices");
      used[cone[i]] = true;
    }
    for (std::size_t d = 0; d < c; ++d)
      if (fan.max_cones[d] == cone) fail(ErrorCode::InvalidInput, "cone " + detail::cone_string(cone) + " is repeated");
    if (cone.size() != k)
      fail(ErrorCode::NotSmooth, "cone " + detail::cone_string(cone) + " is not full-dimensional and simplicial");
    const std::int64_t det = determinant(detail::ray_matrix(fan, cone));
    if (det != 1 && det != -1)
      fail(ErrorCode::NotSmooth,
           "cone " + detail::cone_string(cone) + " is not smooth (determinant " + std::to_string(det) + ")");
  }
  for (std::size_t i = 0; i < r; ++i)
    if (!used[i]) fail(ErrorCode::InvalidInput, "ray " + std::to_string(i) + " lies in no maximal cone");

  // Every facet is shared by exactly one other maximal cone on the other side.
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const Cone& cone = fan.max_cones[c];
    for (std::size_t drop = 0; drop < k; ++drop) {
      Cone facet;
      for (std::size_t i = 0; i < k; ++i)
        if (i != drop) facet.push_back(cone[i]);
      const IntVector normal = detail::facet_normal(detail::ray_matrix(fan, facet), k);
      const std::int64_t side = dot(normal, fan.rays[cone[drop]]);
      std::size_t partners = 0;
      bool opposite = false;
      for (std::size_t e = 0; e < fan.max_cones.size(); ++e) {
        if (e == c) continue;
        const Cone& other = fan.max_cones[e];
        if (!std::includes(other.begin(), other.end(), facet.begin(), facet.end())) continue;
        ++partners;
        for (std::size_t i : other)
          if (!std::binary_search(facet.begin(), facet.end(), i)) {
            const std::int64_t s = dot(normal, fan.rays[i]);
            opposite = (s < 0 && side > 0) || (s > 0 && side < 0);
          }
      }
      if (partners != 1 || !opposite)
        fail(ErrorCode::NotComplete, "facet " + detail::cone_string(facet) + " of cone " + detail::cone_string(cone) +
                                         (partners == 0   ? " is not shared by another maximal cone"
                                          : partners > 1 ? " is shared by more than two maximal cones"
                                                          : " has both neighbours on the same side"));
    }
  }
}

/// Canonical grading: the Hermite normal form of a cokernel map Z^r -> Z^{r-k}
/// of the ray matrix. Throws InvalidDegrees if the cokernel has torsion.
inline IntMatrix canonical_grading(const Fan& fan) {
  const std::size_t k = fan.dim();
  auto [h, u] = unimodular_row_echelon(fan.rays);
  std::int64_t pivots = 1;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t col = 0;
    while (col < k && h[i][col] == 0) ++col;
    if (col == k) fail(ErrorCode::InvalidInput, "rays do not span the lattice");
    pivots *= h[i][col];
  }
  if (pivots != 1) fail(ErrorCode::InvalidDegrees, "class group has torsion");
  IntMatrix a(u.begin() + static_cast<std::ptrdiff_t>(k), u.end());
  if (a.empty()) return a;
  return hermite_normal_form(a);
}

/// Checks a user-supplied degree matrix: it must be a cokernel map of the ray
/// matrix, i.e. differ from the canonical grading by a unimodular left factor.
inline void validate_grading(const Fan& fan, const IntMatrix& degrees) {
  const std::size_t r = fan.nrays(), k = fan.dim();
  if (degrees.size() != r - k)
    fail(ErrorCode::InvalidDegrees, "degree matrix must have " + std::to_string(r - k) + " rows");
  for (const IntVector& row : degrees)
    if (row.size() != r) fail(ErrorCode::InvalidDegrees, "degree matrix must have " + std::to_string(r) + " columns");
  const IntMatrix av = multiply(degrees, fan.rays);
  for (const IntVector& row : av)
    for (std::int64_t x : row)
      if (x != 0) fail(ErrorCode::InvalidDegrees, "degree matrix does not annihilate the rays");
  if (hermite_normal_form(degrees) != canonical_grading(fan))
    fail(ErrorCode::InvalidDegrees, "degree matrix is not a surjective cokernel map of the rays");
}

/// Integral heft vector h with h . a_i > 0 for every column, minimizing the
/// total weight; throws NoPositiveGrading if none exists.
inline IntVector find_heft(const IntMatrix& grading) {
  const std::size_t rows = grading.size();
  if (rows == 0) return {};
  const std::size_t r = grading[0].size();
  RatMatrix a(r, RatVector(rows));
  RatVector b(r, 1), c(rows, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < rows; ++j) {
      a[i][j] = make_rational(grading[j][i]);
      c[j] += make_rational(grading[j][i]);
    }
  const auto sol = lp_minimize(c, a, b);
  if (!sol) fail(ErrorCode::NoPositiveGrading, "no heft vector exists: the grading is not positive");
  Integer den = 1;
  for (const Rational& x : *sol) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  IntVector h;
  for (const Rational& x : *sol) h.push_back(to_int64(Rational(x * den)));
  const std::int64_t g = content(h);
  for (auto& x : h) x /= g;
  return h;
}

/// Generators x^{sigma-hat} = prod of variables off sigma, one per maximal cone.
inline std::vector<Monomial> irrelevant_monomials(const Fan& fan) {
  std::vector<Monomial> out;
  for (const Cone& c : fan.max_cones) {
    Monomial m(fan.nrays());
    for (std::size_t i = 0; i < fan.nrays(); ++i)
      if (!std::binary_search(c.begin(), c.end(), i)) m.set(i, 1);
    out.push_back(m);
  }
  return out;
}

inline Ideal irrelevant_ideal(const Fan& fan, const RingContext& ring) {
  std::vector<Polynomial> gens;
  for (const Monomial& m : irrelevant_monomials(fan)) gens.push_back(Polynomial::monomial(m));
  return Ideal(ring, std::move(gens));
}

/// Faces are subsets of maximal cones (all cones are simplicial).
inline bool is_face(const Fan& fan, std::uint64_t mask) {
  for (const Cone& c : fan.max_cones)
    if ((mask & ~detail::cone_mask(c)) == 0) return true;
  return false;
}

/// Minimal non-faces (primitive collections), each sorted; in discovery order.
inline std::vector<Cone> minimal_nonfaces(const Fan& fan) {
  const std::size_t r = fan.nrays();
  std::vector<Cone> out;
  Cone cur;
  auto rec = [&](auto&& self, std::size_t start, std::uint64_t mask) -> void {
    for (std::size_t j = start; j < r; ++j) {
      const std::uint64_t next = mask | (std::uint64_t{1} << j);
      cur.push_back(j);
      if (is_face(fan, next)) {
        self(self, j + 1, next);
      } else {
        bool minimal = true;
        for (std::size_t x : cur) minimal = minimal && is_face(fan, next & ~(std::uint64_t{1} << x));
        if (minimal) out.push_back(cur);
      }
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

/// Number of cones of each dimension 0..k.
inline std::vector<std::int64_t> cone_counts(const Fan& fan) {
  std::vector<std::uint64_t> faces;
  for (const Cone& c : fan.max_cones) {
    const std::uint64_t m = detail::cone_mask(c);
    for (std::uint64_t s = m;; s = (s - 1) & m) {
      faces.push_back(s);
      if (s == 0) break;
    }
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<std::int64_t> d(fan.dim() + 1, 0);
  for (std::uint64_t f : faces) ++d[static_cast<std::size_t>(__builtin_popcountll(f))];
  return d;
}

/// (I : B^inf). B is the intersection of the primes generated by the
/// variables of each primitive collection, so the saturation is the iterated
/// saturation by those primes, each an intersection of variable saturations.
inline Ideal saturate_irrelevant(const Ideal& ideal, const Fan& fan) {
  Ideal cur = ideal;
  for (const Cone& c : minimal_nonfaces(fan)) {
    if (cur.is_zero()) return cur;
    std::optional<Ideal> acc;
    for (std::size_t v : c) {
      Ideal s = saturate_element(cur, Polynomial::variable(fan.nrays(), v));
      acc = acc ? intersect(*acc, s) : s;
    }
    cur = *acc;
  }
  return cur;
}

/// Affine ring of the chart of a maximal cone: the variables of its rays.
inline RingContext chart_ring(const RingContext& ring, const Cone& cone) {
  std::vector<std::string> names;
  for (std::size_t i : cone) names.push_back(ring.names()[i]);
  return RingContext::affine(std::move(names));
}

inline Polynomial chart_dehomogenize(const Polynomial& f, const Cone& cone) {
  std::vector<bool> keep(f.nvars(), false);
  for (std::size_t i : cone) keep[i] = true;
  return f.set_to_one(keep);
}

/// Sets x_rho := 1 for every ray off the cone.
inline Ideal chart_dehomogenize(const Ideal& ideal, const Cone& cone) {
  std::vector<Polynomial> gens;
  for (const Polynomial& g : ideal.generators()) gens.push_back(chart_dehomogenize(g, cone));
  return Ideal(chart_ring(ideal.ring(), cone), std::move(gens));
}

}  // namespace toricsegre
