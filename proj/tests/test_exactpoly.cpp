#include <catch_amalgamated.hpp>

#include "toricsegre/linalg.hpp"
#include "toricsegre/parse.hpp"
#include "toricsegre/polynomial.hpp"
#include "toricsegre/random.hpp"
#include "toricsegre/ring.hpp"

using namespace toricsegre;

namespace {

// F_1 Cox ring: x0, x1 of degree (1,0), y0 of degree (1,1), y1 of degree (0,1).
RingContext f1_ring() {
  return RingContext({"x0", "x1", "y0", "y1"}, {{1, 1, 1, 0}, {0, 0, 1, 1}}, {1, 1});
}

Polynomial P(const std::string& s, const RingContext& r) { return parse_polynomial(s, r.names()); }

}  // namespace

TEST_CASE("monomial arithmetic") {
  Monomial a{2, 0, 1}, b{1, 3, 0};
  CHECK((a * b) == Monomial{3, 3, 1});
  CHECK(lcm(a, b) == Monomial{2, 3, 1});
  CHECK(Monomial{1, 0, 0}.divides(a));
  CHECK_FALSE(b.divides(a));
  CHECK(((a * b) / b) == a);
  CHECK(coprime(Monomial{1, 0, 0}, Monomial{0, 2, 1}));
  CHECK(a.total_degree() == 3);
}

TEST_CASE("polynomial canonical form and ring laws") {
  const std::vector<std::string> names{"x", "y", "z"};
  auto p = [&](const char* s) { return parse_polynomial(s, names); };
  CHECK(p("x + y - x") == p("y"));
  CHECK(p("x*y - y*x").is_zero());
  CHECK(p("(x+y)^2") == p("x^2 + 2*x*y + y^2"));
  CHECK(p("2x y^2") == p("2*x*y^2"));
  CHECK(p("-(x - 1)") == p("1 - x"));
  CHECK(p("x^2+x+y").to_string(names) == "x^2 + x + y");

  SeededRandom rng(7);
  auto random_poly = [&]() {
    std::vector<Term> t;
    for (int i = 0; i < 4; ++i)
      t.push_back({make_rational(rng.uniform(-5, 5)),
                   Monomial{static_cast<int>(rng.uniform(0, 2)), static_cast<int>(rng.uniform(0, 2)),
                            static_cast<int>(rng.uniform(0, 2))}});
    return Polynomial(3, t);
  };
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial f = random_poly(), g = random_poly(), h = random_poly();
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * g == g * f);
    CHECK((f - f).is_zero());
    CHECK(parse_polynomial(f.to_string(names), names) == f);
  }
}

TEST_CASE("parser diagnostics") {
  const std::vector<std::string> names{"x", "y"};
  auto code_of = [&](const char* s) {
    try {
      parse_polynomial(s, names);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  CHECK(code_of("x +") == ErrorCode::Syntax);
  CHECK(code_of("x^") == ErrorCode::Syntax);
  CHECK(code_of("x^0") == ErrorCode::Syntax);
  CHECK(code_of("(x + y") == ErrorCode::Syntax);
  CHECK(code_of("") == ErrorCode::Syntax);
  CHECK(code_of("x + w") == ErrorCode::UnknownVariable);
  try {
    parse_polynomial("x + y )", names);
    FAIL("expected syntax error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("position 6") != std::string::npos);
  }
  const std::vector<std::string> x01{"x0", "x1"};
  for (const auto& [text, offset] : std::vector<std::pair<std::string, int>>{{"x0 + ", 3}, {"x0*x1 -", 6}, {"2*", 1}}) {
    try {
      parse_polynomial(text, x01);
      FAIL("expected syntax error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Syntax);
      CHECK(std::string(e.what()).find("position " + std::to_string(offset) + ":") != std::string::npos);
    }
  }
}

TEST_CASE("multidegrees and homogeneity") {
  const RingContext r = f1_ring();
  CHECK(multidegree_of(P("x1^2*y0^2 + x0^3*x1*y1^2", r), r) == MultiDegree{4, 2});
  CHECK(multidegree_of(P("x1*y0^2*y1^2 + x0^3*y1^4", r), r) == MultiDegree{3, 4});
  try {
    multidegree_of(P("x0 + y1", r), r);
    FAIL("expected NotHomogeneous");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHomogeneous);
    const std::string msg = e.what();
    CHECK(msg.find("(1,0)") != std::string::npos);
    CHECK(msg.find("(0,1)") != std::string::npos);
  }
  CHECK_THROWS_AS(multidegree_of(Polynomial(4), r), Error);
}

TEST_CASE("monomials of a degree") {
  const RingContext r = f1_ring();
  auto names_of = [&](const MultiDegree& d) {
    std::vector<std::string> out;
    for (const Monomial& m : monomials_of_degree(d, r)) out.push_back(monomial_to_string(m, r.names()));
    return out;
  };
  CHECK(names_of({1, 0}) == std::vector<std::string>{"x1", "x0"});
  CHECK(names_of({0, 1}) == std::vector<std::string>{"y1"});
  CHECK(names_of({-1, 0}).empty());
  // Count check against brute force over a box.
  for (std::int64_t a = 0; a <= 4; ++a)
    for (std::int64_t b = 0; b <= 3; ++b) {
      std::size_t brute = 0;
      for (int i = 0; i <= 8; ++i)
        for (int j = 0; j <= 8; ++j)
          for (int k = 0; k <= 8; ++k)
            for (int l = 0; l <= 8; ++l)
              if (i + j + k == a && k + l == b) ++brute;
      CHECK(monomials_of_degree({a, b}, r).size() == brute);
    }
}

TEST_CASE("random homogeneous polynomials") {
  const RingContext r = f1_ring();
  SeededRandom a(3, {1, 2}), b(3, {1, 2}), c(3, {1, 3});
  const Polynomial f = random_homogeneous({2, 1}, a, 100, r);
  CHECK(f == random_homogeneous({2, 1}, b, 100, r));
  CHECK_FALSE(f == random_homogeneous({2, 1}, c, 100, r));
  CHECK(f.size() == monomials_of_degree({2, 1}, r).size());
  CHECK(multidegree_of(f, r) == MultiDegree{2, 1});
  for (const Term& t : f.terms()) {
    CHECK(t.coeff != 0);
    CHECK(abs(t.coeff) <= 100);
  }
  try {
    random_homogeneous({-1, 0}, a, 100, r);
    FAIL("expected EmptyDegree");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyDegree);
  }
}

TEST_CASE("seeded random stays within bounds") {
  SeededRandom rng(0);
  for (int i = 0; i < 1000; ++i) {
    const auto v = rng.nonzero(3);
    CHECK(v != 0);
    CHECK(v >= -3);
    CHECK(v <= 3);
  }
}

TEST_CASE("integer linear algebra") {
  const IntMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  auto [h, u] = unimodular_row_echelon(m);
  CHECK(multiply(u, m) == h);
  CHECK(std::abs(determinant(u)) == 1);
  CHECK(determinant(m) == 2 * (6 * -16 - 12 * -4) - 4 * (-6 * -16 - 12 * 10) + 4 * (-6 * -4 - 6 * 10));
  CHECK(hermite_normal_form({{2, 0}, {0, 3}, {2, 3}}) == IntMatrix{{2, 0}, {0, 3}});
  CHECK(rank(to_rational(IntMatrix{{1, 2}, {2, 4}})) == 1);

  const auto x = solve(to_rational(IntMatrix{{1, 1}, {1, -1}}), {3, 1}, 2);
  REQUIRE(x);
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 1);
  CHECK_FALSE(solve(to_rational(IntMatrix{{1, 1}, {1, 1}}), {1, 2}, 2));
}

TEST_CASE("exact LP") {
  // minimize y0 + y1 s.t. y0 + 2 y1 >= 2, 3 y0 + y1 >= 3
  const auto y = lp_minimize({1, 1}, to_rational(IntMatrix{{1, 2}, {3, 1}}), {2, 3});
  REQUIRE(y);
  CHECK((*y)[0] == Rational(4, 5));
  CHECK((*y)[1] == Rational(3, 5));
  CHECK_FALSE(lp_minimize({1}, to_rational(IntMatrix{{1}, {-1}}), {1, 0}));
  // Free variables may go negative.
  const auto z = lp_minimize({1}, to_rational(IntMatrix{{1}}), {-4});
  REQUIRE(z);
  CHECK((*z)[0] == -4);
}
