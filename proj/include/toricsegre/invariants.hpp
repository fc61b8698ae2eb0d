#pragma once

// Self-checks on a constructed variety, run by `--check`.

#include <cstdint>
#include <string>
#include <vector>

#include "toricsegre/toric.hpp"

namespace toricsegre {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

inline std::vector<CheckResult> check_invariants(const ToricVariety& x) {
  const ChowRing& chow = x.chow();
  const int k = static_cast<int>(x.dim());
  std::vector<CheckResult> out;

  {
    CheckResult c{"rank identity", true, ""};
    const auto expected = chow.expected_ranks();
    for (int d = 0; d <= k; ++d) {
      c.detail += (d ? " " : "") + std::to_string(chow.rank(d));
      if (static_cast<std::int64_t>(chow.rank(d)) != expected[static_cast<std::size_t>(d)]) c.ok = false;
    }
    c.detail = "ranks " + c.detail;
    out.push_back(c);
  }
  {
    CheckResult c{"poincare pairing unimodular", true, ""};
    for (int d = 0; d <= k; ++d) {
      const std::int64_t det = determinant(chow.pairing_matrix(d));
      if (det != 1 && det != -1) {
        c.ok = false;
        c.detail = "codim " + std::to_string(d) + " has determinant " + std::to_string(det);
      }
    }
    out.push_back(c);
  }
  {
    // Two routes to <D_i, C>: the wall relation, and the Chow product with
    // the class of the facet's orbit closure.
    CheckResult c{"wall curves", true, std::to_string(x.walls().size()) + " walls"};
    for (const WallCurve& w : x.walls()) {
      for (std::size_t j = 0; j < x.dim() && c.ok; ++j) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < x.nrays(); ++i) s += w.pairing[i] * x.fan().rays[i][j];
        if (s != 0) c.ok = false, c.detail = "wall " + detail::cone_string(w.facet) + " does not annihilate characters";
      }
      Monomial m(x.nrays());
      for (std::size_t i : w.facet) m.set(i, 1);
      for (std::size_t i = 0; i < x.nrays() && c.ok; ++i) {
        Monomial mi = m;
        mi.set(i, mi[i] + 1);
        if (chow.degree(chow.monomial_class(mi)) != w.pairing[i])
          c.ok = false, c.detail = "wall " + detail::cone_string(w.facet) + " disagrees with the Chow ring";
      }
    }
    out.push_back(c);
  }
  {
    CheckResult c{"ample class", true, ""};
    try {
      const MultiDegree a = x.find_ample();
      c.ok = is_ample(a, x.walls());
      c.detail = to_string(a);
    } catch (const Error& e) {
      c.ok = false;
      c.detail = e.what();
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace toricsegre
