#pragma once

// Fans used across the tests, with gradings in the coordinates the worked
// examples use.

#include <optional>
#include <string>
#include <vector>

#include "toricsegre/toric.hpp"

namespace fixtures {

using namespace toricsegre;

struct NamedFan {
  std::string name;
  Fan fan;
  std::optional<std::vector<std::string>> names;
  std::optional<IntMatrix> degrees;

  ToricVariety variety() const { return ToricVariety(fan, names, degrees); }
};

inline NamedFan p1() { return {"P1", Fan{{{1}, {-1}}, {{0}, {1}}}, std::nullopt, std::nullopt}; }

inline NamedFan p2() {
  return {"P2", Fan{{{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}}, std::vector<std::string>{"x0", "x1", "x2"},
          std::nullopt};
}

inline NamedFan p1xp1() {
  return {"P1xP1", Fan{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}},
          std::vector<std::string>{"x0", "x1", "y0", "y1"}, IntMatrix{{1, 1, 0, 0}, {0, 0, 1, 1}}};
}

/// F_e with variables x0, x1, y0, y1 on rays (1,0), (-1,e), (0,-1), (0,1).
/// In the grading below the fibre F = D_x0 has degree (1,0) and the negative
/// section E = D_y1 has degree (0,1), so degree (a,b) is the class aF + bE.
inline NamedFan hirzebruch(int e) {
  return {"F" + std::to_string(e), Fan{{{1, 0}, {-1, e}, {0, -1}, {0, 1}}, {{0, 3}, {1, 3}, {1, 2}, {0, 2}}},
          std::vector<std::string>{"x0", "x1", "y0", "y1"}, IntMatrix{{1, 1, e, 0}, {0, 0, 1, 1}}};
}

inline NamedFan p1cubed() {
  Fan f{{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}, {}};
  for (std::size_t a : {0, 1})
    for (std::size_t b : {2, 3})
      for (std::size_t c : {4, 5}) f.max_cones.push_back({a, b, c});
  return {"P1xP1xP1", f, std::vector<std::string>{"x0", "x1", "y0", "y1", "z0", "z1"},
          IntMatrix{{1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1}}};
}

/// P^2 x P^1 with the ray order and degree matrix of the 3-fold example.
inline NamedFan threefold() {
  return {"P2xP1", Fan{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, 0}, {0, 0, -1}},
                       {{0, 1, 2}, {1, 2, 3}, {0, 2, 3}, {0, 1, 4}, {1, 3, 4}, {0, 3, 4}}},
          std::vector<std::string>{"x0", "x1", "x2", "x3", "x4"}, IntMatrix{{1, 1, 0, 1, 0}, {0, 0, 1, 0, 1}}};
}

inline std::vector<NamedFan> library() {
  return {p2(), p1(), p1xp1(), hirzebruch(0), hirzebruch(1), hirzebruch(2), hirzebruch(3), p1cubed(), threefold()};
}

inline Ideal ideal(const ToricVariety& x, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(x.parse(g));
  return Ideal(x.ring(), ps);
}

}  // namespace fixtures
