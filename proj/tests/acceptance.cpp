// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every comparison is exact integer equality; the only
// tolerances are the wall-clock limits below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "toricsegre/segre.hpp"

using namespace toricsegre;
using namespace fixtures;

namespace {

constexpr double kLimitHirzebruch = 60.0;  // seconds per seed
constexpr double kLimitP1Cubed = 120.0;    // seconds per seed
constexpr double kLimitThreefold = 300.0;  // seconds

const std::vector<std::string> kHirzebruchIdeal{"x1^2*y0^2 + x0^3*x1*y1^2", "x1*y0^2*y1^2 + x0^3*y1^4"};
const std::vector<std::string> kP1CubedIdeal{"x0*z0^2", "y0*z0 + z0*y1"};
const std::vector<std::string> kThreefoldIdeal{"x1*x2", "x3*x4"};
const std::vector<std::uint64_t> kSeeds{0, 1, 2};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (failures.size() < 4) failures.push_back(what);
    }
  }
};

SegreResult timed_run(const ToricVariety& x, const Ideal& i, std::uint64_t seed, double& elapsed) {
  SegreOptions opt;
  opt.seed = seed;
  const auto t0 = std::chrono::steady_clock::now();
  SegreResult res = segre_class(x, i, opt);
  elapsed = seconds_since(t0);
  return res;
}

std::string fmt_time(double t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", t);
  return buf;
}

// alpha^c = [R_c] + sum_{j <= i} C(c, i - j) alpha^(i-j) s_j, c = i + k - n.
bool resubstitution_holds(const ChowRing& chow, const SegreResult& res) {
  for (int i = 0; i <= res.n; ++i) {
    const int c = i + res.k - res.n;
    ChowClass rhs = res.residuals[static_cast<std::size_t>(i)].cls;
    for (int j = 0; j <= i; ++j)
      rhs = rhs + binomial(c, i - j) * chow.multiply(chow.power(res.alpha_class, i - j), res.s[static_cast<std::size_t>(j)]);
    if (!(rhs == chow.power(res.alpha_class, c))) return false;
  }
  return true;
}

std::vector<std::vector<std::int64_t>> gamma_table(const SegreResult& res) {
  std::vector<std::vector<std::int64_t>> out;
  for (const ResidualData& r : res.residuals) {
    std::vector<std::int64_t> g;
    for (const ResidualRow& row : r.rows) g.push_back(row.gamma);
    out.push_back(g);
  }
  return out;
}

Outcome criterion1() {
  Outcome o;
  const ToricVariety x = hirzebruch(1).variety();
  const ChowRing& chow = x.chow();
  const ChowClass F = chow.divisor(0), E = chow.divisor(3), EF = chow.multiply(E, F);
  double worst = 0;
  for (std::uint64_t seed : kSeeds) {
    double t = 0;
    const SegreResult res = timed_run(x, ideal(x, kHirzebruchIdeal), seed, t);
    worst = std::max(worst, t);
    const std::string s = "seed " + std::to_string(seed) + ": ";
    o.require(res.alpha == MultiDegree{6, 4}, s + "alpha " + to_string(res.alpha));
    o.require(res.residuals.size() == 2, s + "wrong number of residuals");
    if (res.residuals.size() != 2) continue;
    o.require(chow.coordinates_in(res.residuals[0].cls, {F, E}) == IntVector{3, 2}, s + "[R_1] " + chow.to_string(res.residuals[0].cls));
    o.require(chow.degree(res.residuals[1].cls) == 6, s + "[R_2] " + chow.to_string(res.residuals[1].cls));
    o.require(res.s[0] == 3 * F + 2 * E, s + "s_0 " + chow.to_string(res.s[0]));
    o.require(res.s[1] == -6 * EF, s + "s_1 " + chow.to_string(res.s[1]));
    o.require(t < kLimitHirzebruch, s + "took " + fmt_time(t));
  }
  o.detail = "alpha=(6,4), R_1=3F+2E, deg R_2=6, s_0=3F+2E, s_1=-6EF over seeds 0,1,2; slowest " + fmt_time(worst);
  return o;
}

Outcome criterion2() {
  Outcome o;
  const ToricVariety x = p1cubed().variety();
  const ChowRing& chow = x.chow();
  const ChowClass d1 = chow.divisor(0), d2 = chow.divisor(2), d3 = chow.divisor(4);
  const ChowClass d12 = chow.multiply(d1, d2), d13 = chow.multiply(d1, d3), d23 = chow.multiply(d2, d3);
  double worst = 0;
  for (std::uint64_t seed : kSeeds) {
    double t = 0;
    const SegreResult res = timed_run(x, ideal(x, kP1CubedIdeal), seed, t);
    worst = std::max(worst, t);
    const std::string s = "seed " + std::to_string(seed) + ": ";
    o.require(res.n == 2, s + "n = " + std::to_string(res.n));
    if (res.n != 2) continue;
    o.require(chow.coordinates_in(res.residuals[0].cls, {d1, d2, d3}) == IntVector{1, 1, 1}, s + "[R_1]");
    o.require(chow.coordinates_in(res.residuals[1].cls, {d23, d13, d12}) == IntVector{1, 2, 1}, s + "[R_2]");
    o.require(chow.degree(res.residuals[2].cls) == 2, s + "[R_3]");
    o.require(res.s[0] == d3, s + "s_0 " + chow.to_string(res.s[0]));
    o.require(res.s[1] == d23 + d12, s + "s_1 " + chow.to_string(res.s[1]));
    o.require(chow.degree(res.s[2]) == -5, s + "s_2 " + chow.to_string(res.s[2]));
    o.require(t < kLimitP1Cubed, s + "took " + fmt_time(t));
  }
  o.detail = "n=2, R=(1,1,1),(1,2,1),2, s=(D_3, D_2D_3+D_1D_2, -5D_1D_2D_3) over seeds 0,1,2; slowest " + fmt_time(worst);
  return o;
}

Outcome criterion3() {
  Outcome o;
  const ToricVariety x = threefold().variety();
  const ChowRing& chow = x.chow();
  std::vector<std::vector<ChowClass>> all;
  double worst = 0;
  std::int64_t top = 0;
  for (std::uint64_t seed : kSeeds) {
    double t = 0;
    const SegreResult res = timed_run(x, ideal(x, kThreefoldIdeal), seed, t);
    worst = std::max(worst, t);
    const std::string s = "seed " + std::to_string(seed) + ": ";
    o.require(res.n == 1, s + "n = " + std::to_string(res.n));
    if (res.n != 1) continue;
    top = chow.degree(res.s[1]);
    o.require(top == 12, s + "deg s_1 = " + std::to_string(top) + ", expected 12");
    o.require(resubstitution_holds(chow, res), s + "recursion re-substitution");
    o.require(t < kLimitThreefold, s + "took " + fmt_time(t));
    all.push_back(res.s);
  }
  for (std::size_t i = 1; i < all.size(); ++i) o.require(all[i] == all[0], "s depends on the seed");
  o.detail = "n=1, deg of dimension-0 component = " + std::to_string(top) +
             " (expected 12; a complete intersection of two (1,1) divisors gives -2*(H+K)^3 = -6); "
             "s_0 seed-independent and recursion consistent; slowest " + fmt_time(worst);
  return o;
}

Outcome criterion4() {
  Outcome o;
  SeededRandom rng(2024);
  int runs = 0;
  for (int e = 0; e <= 2; ++e) {
    const ToricVariety x = hirzebruch(e).variety();
    const ChowRing& chow = x.chow();
    const ChowClass F = chow.divisor(0), E = chow.divisor(3), EF = chow.multiply(E, F);
    std::vector<MultiDegree> nef;
    for (std::int64_t a = 0; a <= 3; ++a)
      for (std::int64_t b = 0; b <= 3; ++b)
        if (a >= e * b && (a > 0 || b > 0)) nef.push_back({a, b});
    for (int trial = 0; trial < 10; ++trial) {
      const MultiDegree ab = nef[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(nef.size()) - 1))];
      // Sparse random polynomial: each monomial kept with probability 1/2.
      Polynomial f(x.nrays());
      while (f.is_zero())
        for (const Monomial& m : monomials_of_degree(ab, x.ring()))
          if (rng.uniform(0, 1)) f += Rational(rng.nonzero(30)) * Polynomial::monomial(m);
      const SegreResult res = segre_class(x, Ideal(x.ring(), {f}));
      const std::int64_t a = ab[0], b = ab[1];
      const std::string s = "e=" + std::to_string(e) + " (a,b)=" + to_string(ab) + ": ";
      o.require(res.s.size() == 2, s + "wrong dimension");
      if (res.s.size() != 2) continue;
      o.require(res.s[0] == a * F + b * E, s + "s_0 " + chow.to_string(res.s[0]));
      o.require(res.s[1] == (b * b * e - 2 * a * b) * EF, s + "s_1 " + chow.to_string(res.s[1]));
      ++runs;
    }
  }
  o.detail = std::to_string(runs) + " random divisors on F_0, F_1, F_2 match aF+bE+(b^2e-2ab)EF";
  return o;
}

Outcome criterion5() {
  Outcome o;
  SeededRandom rng(77);
  int runs = 0;
  for (const NamedFan& f : {p2(), p1xp1(), hirzebruch(1), p1cubed()}) {
    const ToricVariety x = f.variety();
    const ChowRing& chow = x.chow();
    const std::size_t rho = x.grading().size();
    for (int trial = 0; trial < 5; ++trial) {
      MultiDegree d1, d2;
      ChowClass prod;
      do {
        d1.assign(rho, 0);
        d2.assign(rho, 0);
        for (std::size_t j = 0; j < rho; ++j) {
          d1[j] = rng.uniform(0, rho == 1 ? 3 : 2);
          d2[j] = rng.uniform(0, rho == 1 ? 3 : 2);
        }
        prod = chow.multiply(x.pic_to_chow(d1), x.pic_to_chow(d2));
      } while (!x.is_nef(d1) || !x.is_nef(d2) || prod.is_zero());
      const Polynomial u = random_homogeneous(d1, rng, 50, x.ring());
      const Polynomial v = random_homogeneous(d2, rng, 50, x.ring());
      const SegreResult res = segre_class(x, Ideal(x.ring(), {u, v}));
      const std::string s = f.name + " " + to_string(d1) + "," + to_string(d2) + ": ";
      const ChowClass sum = x.pic_to_chow(d1 + d2);
      o.require(!res.s.empty() && res.s[0] == prod, s + "s_0");
      // -(d1 + d2) d1 d2 lives in codimension 3, beyond the top on surfaces.
      const ChowClass expected1 = chow.multiply(sum, prod);
      if (res.s.size() > 1)
        o.require(res.s[1] == chow.zero(3) - expected1, s + "s_1 " + chow.to_string(res.s[1]));
      else
        o.require(expected1.coeffs.empty(), s + "s_1 missing");
      ++runs;
    }
  }
  o.detail = std::to_string(runs) + " generic complete intersections on P2, P1xP1, F_1, P1xP1xP1 give s_0=d1d2, s_1=-(d1+d2)d1d2";
  return o;
}

// h-vector from brute-force face counts.
std::vector<std::int64_t> expected_h(const Fan& fan) {
  std::set<std::vector<std::size_t>> faces;
  for (const Cone& c : fan.max_cones)
    for (unsigned mask = 0; mask < (1u << c.size()); ++mask) {
      std::vector<std::size_t> face;
      for (std::size_t i = 0; i < c.size(); ++i)
        if (mask >> i & 1) face.push_back(c[i]);
      faces.insert(face);
    }
  const std::size_t k = fan.dim();
  std::vector<std::int64_t> d(k + 1, 0);
  for (const auto& face : faces) ++d[face.size()];
  std::vector<std::int64_t> h(k + 1, 0);
  for (std::size_t i = 0; i <= k; ++i)
    for (std::size_t j = i; j <= k; ++j) h[i] += ((j - i) % 2 ? -1 : 1) * binomial(static_cast<std::int64_t>(j), static_cast<std::int64_t>(i)) * d[k - j];
  return h;
}

Outcome criterion6() {
  Outcome o;
  int fans = 0;
  for (const NamedFan& f : library()) {
    const ToricVariety x = f.variety();
    const auto h = expected_h(f.fan);
    const int k = x.chow().dim();
    for (int d = 0; d <= k; ++d)
      o.require(static_cast<std::int64_t>(x.chow().rank(d)) == h[static_cast<std::size_t>(k - d)],
                f.name + " codim " + std::to_string(d));
    ++fans;
  }
  o.detail = "graded ranks equal h_i on " + std::to_string(fans) + " fans";
  return o;
}

Outcome criterion7() {
  Outcome o;
  int checks = 0;
  for (int e = 0; e <= 3; ++e) {
    const ToricVariety x = hirzebruch(e).variety();
    for (std::int64_t a = 0; a <= 5; ++a)
      for (std::int64_t b = 0; b <= 5; ++b, ++checks)
        o.require(x.is_nef({a, b}) == (a >= e * b && b >= 0 && a >= 0),
                  "F_" + std::to_string(e) + " (" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
  o.detail = std::to_string(checks) + " classes on F_0..F_3";
  return o;
}

struct FatPointCase {
  std::string name;
  Ideal ideal;
  std::int64_t length;
};

// Ideal of a point of P2, and of P1xP1, as linear forms vanishing there.
std::vector<Polynomial> p2_point(std::int64_t a, std::int64_t b, std::int64_t c) {
  // p_i x_j - p_j x_i for a coordinate i with p_i != 0 and the two j != i.
  const std::int64_t p[3]{a, b, c};
  std::size_t i = 0;
  while (p[i] == 0) ++i;
  std::vector<Polynomial> out;
  for (std::size_t j = 0; j < 3; ++j)
    if (j != i) out.push_back(Rational(p[i]) * Polynomial::variable(3, j) - Rational(p[j]) * Polynomial::variable(3, i));
  return out;
}

std::vector<Polynomial> p1p1_point(std::int64_t a0, std::int64_t a1, std::int64_t b0, std::int64_t b1) {
  return {Rational(a1) * Polynomial::variable(4, 0) - Rational(a0) * Polynomial::variable(4, 1),
          Rational(b1) * Polynomial::variable(4, 2) - Rational(b0) * Polynomial::variable(4, 3)};
}

// (L1, L2)^m: length m(m+1)/2.
Ideal fat(const RingContext& r, const std::vector<Polynomial>& l, int m) {
  std::vector<Polynomial> gens;
  for (int i = 0; i <= m; ++i) {
    Polynomial g = Polynomial::constant(r.nvars(), 1);
    for (int j = 0; j < i; ++j) g *= l[0];
    for (int j = i; j < m; ++j) g *= l[1];
    gens.push_back(g);
  }
  return Ideal(r, gens);
}

// (L1^a, L2^b): length ab.
Ideal box(const RingContext& r, const std::vector<Polynomial>& l, int a, int b) {
  Polynomial g0 = Polynomial::constant(r.nvars(), 1), g1 = g0;
  for (int j = 0; j < a; ++j) g0 *= l[0];
  for (int j = 0; j < b; ++j) g1 *= l[1];
  return Ideal(r, {g0, g1});
}

Ideal union_of(const std::vector<Ideal>& parts) {
  Ideal acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = intersect(acc, parts[i]);
  return acc;
}

std::vector<FatPointCase> fat_point_cases(const ToricVariety& p2v, const ToricVariety& q) {
  const RingContext& r = p2v.ring();
  const RingContext& s = q.ring();
  std::vector<FatPointCase> out;
  const auto P = [&](std::int64_t a, std::int64_t b, std::int64_t c) { return p2_point(a, b, c); };
  // P2
  out.push_back({"P2 torus point", fat(r, P(1, 2, 3), 1), 1});
  out.push_back({"P2 coordinate point", fat(r, P(1, 0, 0), 1), 1});
  out.push_back({"P2 double point at [0:1:0]", fat(r, P(0, 1, 0), 2), 3});
  out.push_back({"P2 triple torus point", fat(r, P(1, 1, 1), 3), 6});
  out.push_back({"P2 point on two charts, fat", fat(r, P(0, 1, 1), 2), 3});
  out.push_back({"P2 curvilinear box 3x1", box(r, P(1, -1, 2), 3, 1), 3});
  out.push_back({"P2 box 2x2 at [1:0:1]", box(r, P(1, 0, 1), 2, 2), 4});
  out.push_back({"P2 three coordinate points", union_of({fat(r, P(1, 0, 0), 1), fat(r, P(0, 1, 0), 1), fat(r, P(0, 0, 1), 1)}), 3});
  out.push_back({"P2 fat + reduced", union_of({fat(r, P(1, 1, 1), 2), fat(r, P(1, 0, 0), 1)}), 4});
  out.push_back({"P2 two fat points", union_of({fat(r, P(2, 1, 1), 2), box(r, P(0, 1, 3), 2, 1)}), 5});
  // P1 x P1
  out.push_back({"P1xP1 torus point", fat(s, p1p1_point(1, 1, 1, 1), 1), 1});
  out.push_back({"P1xP1 corner point", fat(s, p1p1_point(1, 0, 1, 0), 1), 1});
  out.push_back({"P1xP1 edge point, fat", fat(s, p1p1_point(1, 0, 2, 1), 2), 3});
  out.push_back({"P1xP1 box 2x3 torus", box(s, p1p1_point(1, 2, 3, 1), 2, 3), 6});
  out.push_back({"P1xP1 box 3x1 corner", box(s, p1p1_point(0, 1, 0, 1), 3, 1), 3});
  out.push_back({"P1xP1 triple point", fat(s, p1p1_point(1, -1, 1, 1), 3), 6});
  out.push_back({"P1xP1 four corners",
                 union_of({fat(s, p1p1_point(1, 0, 1, 0), 1), fat(s, p1p1_point(1, 0, 0, 1), 1),
                           fat(s, p1p1_point(0, 1, 1, 0), 1), fat(s, p1p1_point(0, 1, 0, 1), 1)}),
                 4});
  out.push_back({"P1xP1 fat torus + corner", union_of({fat(s, p1p1_point(2, 1, 1, 3), 2), fat(s, p1p1_point(0, 1, 0, 1), 2)}), 6});
  out.push_back({"P1xP1 same fibre, two points", union_of({box(s, p1p1_point(1, 1, 1, 1), 1, 2), fat(s, p1p1_point(1, 1, 1, 0), 1)}), 3});
  out.push_back({"P1xP1 edge box + torus", union_of({box(s, p1p1_point(1, 0, 1, 1), 2, 2), fat(s, p1p1_point(3, 1, 1, 2), 1)}), 5});
  return out;
}

Outcome criterion8() {
  Outcome o;
  const ToricVariety p2v = p2().variety();
  const ToricVariety q = p1xp1().variety();
  const auto cases = fat_point_cases(p2v, q);
  for (const FatPointCase& c : cases) {
    const Fan& fan = c.ideal.ring().nvars() == 3 ? p2v.fan() : q.fan();
    const std::int64_t got = zero_dim_length(c.ideal, fan);
    o.require(got == c.length, c.name + ": " + std::to_string(got) + " != " + std::to_string(c.length));
  }
  int compared = 0;
  for (const NamedFan& f : {hirzebruch(1), p1cubed()}) {
    const ToricVariety x = f.variety();
    const auto& gens = f.name == "F1" ? kHirzebruchIdeal : kP1CubedIdeal;
    std::vector<std::vector<std::vector<std::int64_t>>> tables;
    for (std::uint64_t seed : kSeeds) {
      SegreOptions opt;
      opt.seed = seed;
      tables.push_back(gamma_table(segre_class(x, ideal(x, gens), opt)));
    }
    for (std::size_t i = 1; i < tables.size(); ++i) o.require(tables[i] == tables[0], f.name + " gamma depends on the seed");
    ++compared;
  }
  o.detail = std::to_string(cases.size()) + " fat-point schemes on P2 and P1xP1; gamma tables equal across 3 seeds on " +
             std::to_string(compared) + " examples";
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::size_t rows = 0, checks = 0, residuals = 0;
  const std::vector<std::pair<NamedFan, std::vector<std::string>>> examples{
      {hirzebruch(1), kHirzebruchIdeal}, {p1cubed(), kP1CubedIdeal}, {threefold(), kThreefoldIdeal}};
  for (const auto& [f, gens] : examples) {
    const ToricVariety x = f.variety();
    const ChowRing& chow = x.chow();
    for (std::uint64_t seed : kSeeds) {
      SegreOptions opt;
      opt.seed = seed;
      const SegreResult res = segre_class(x, ideal(x, gens), opt);
      for (const ResidualData& r : res.residuals) {
        ++residuals;
        const std::string s = f.name + " seed " + std::to_string(seed) + " R_" + std::to_string(r.d) + ": ";
        o.require(r.empty || r.dimension == res.k - r.d, s + "dimension " + std::to_string(r.dimension));
        // Every recorded row, including the extra ones, is satisfied by the class.
        for (const ResidualRow& row : r.rows) {
          std::int64_t lhs = 0;
          for (std::size_t i = 0; i < row.beta.size(); ++i) lhs += row.beta[i] * r.cls.coeffs[i];
          o.require(lhs == row.gamma, s + "row " + std::to_string(row.index));
          ++rows;
        }
        if (!r.empty) o.require(r.rows.size() >= chow.rank(r.d), s + "underdetermined");
        checks += r.consistency_rows;
      }
    }
  }
  o.detail = std::to_string(residuals) + " residuals pure; " + std::to_string(rows) + " rows satisfied, " +
             std::to_string(checks) + " of them overdetermined consistency rows";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Hirzebruch example", criterion1},        {"P1xP1xP1 example", criterion2},
      {"toric 3-fold example", criterion3},      {"Hirzebruch divisor closed form", criterion4},
      {"complete-intersection oracle", criterion5}, {"Chow rank identity", criterion6},
      {"nef criterion", criterion7},             {"zero-dimensional length oracle", criterion8},
      {"runtime assertions", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const Error& e) {
      o.ok = false;
      o.detail = std::string("error [") + std::string(error_name(e.code())) + "]: " + e.what();
    }
    std::cout << "criterion " << i + 1 << ": " << (o.ok ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
              << fmt_time(seconds_since(t0)) << "): " << o.detail;
    for (const std::string& f : o.failures) std::cout << " | " << f;
    std::cout << std::endl;
    failed += o.ok ? 0 : 1;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed ? 1 : 0;
}
