#pragma once

// Everything derived from a validated fan: Cox ring, irrelevant ideal, Chow
// ring and wall curves.

#include <cctype>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toricsegre/chow.hpp"
#include "toricsegre/cones.hpp"
#include "toricsegre/fan.hpp"
#include "toricsegre/parse.hpp"
#include "toricsegre/ring.hpp"

namespace toricsegre {

class ToricVariety {
 public:
  /// Validates the fan; `names` defaults to z0..z{r-1}, `degrees` to the
  /// canonical grading (a supplied matrix must be a cokernel map).
  ToricVariety(Fan fan, std::optional<std::vector<std::string>> names = std::nullopt,
               std::optional<IntMatrix> degrees = std::nullopt)
      : fan_((validate_smooth_complete(fan), std::move(fan))),
        grading_(degrees ? (validate_grading(fan_, *degrees), *degrees) : canonical_grading(fan_)),
        heft_(find_heft(grading_)),
        ring_(make_names(fan_, std::move(names)), grading_, heft_),
        irrelevant_(irrelevant_ideal(fan_, ring_)),
        chow_(fan_, divisor_labels(ring_.names())),
        walls_(wall_curves(fan_, grading_)) {}

  const Fan& fan() const { return fan_; }
  std::size_t dim() const { return fan_.dim(); }
  std::size_t nrays() const { return fan_.nrays(); }
  const IntMatrix& grading() const { return grading_; }
  const IntVector& heft() const { return heft_; }
  const RingContext& ring() const { return ring_; }
  const Ideal& irrelevant() const { return irrelevant_; }
  const ChowRing& chow() const { return chow_; }
  const std::vector<WallCurve>& walls() const { return walls_; }

  /// Degree [D_i] of the i-th variable.
  MultiDegree variable_degree(std::size_t i) const {
    MultiDegree d;
    for (const auto& row : grading_) d.push_back(row[i]);
    return d;
  }

  ChowClass pic_to_chow(const MultiDegree& delta) const { return chow_.pic_to_chow(delta, grading_); }
  bool is_nef(const MultiDegree& delta) const { return toricsegre::is_nef(delta, walls_); }
  MultiDegree find_ample() const { return toricsegre::find_ample(walls_, heft_); }
  MultiDegree find_alpha(const std::vector<MultiDegree>& degrees) const {
    return toricsegre::find_alpha(degrees, walls_, heft_);
  }

  Polynomial parse(const std::string& text) const { return parse_polynomial(text, ring_.names()); }

 private:
  static std::vector<std::string> divisor_labels(const std::vector<std::string>& names) {
    std::vector<std::string> out;
    for (const std::string& n : names) out.push_back("D_" + n);
    return out;
  }

  static std::vector<std::string> make_names(const Fan& fan, std::optional<std::vector<std::string>> names) {
    if (!names) {
      std::vector<std::string> out;
      for (std::size_t i = 0; i < fan.nrays(); ++i) out.push_back("z" + std::to_string(i));
      return out;
    }
    if (names->size() != fan.nrays())
      fail(ErrorCode::InvalidInput, "expected " + std::to_string(fan.nrays()) + " variable names, got " +
                                        std::to_string(names->size()));
    for (std::size_t i = 0; i < names->size(); ++i) {
      const std::string& n = (*names)[i];
      bool ok = !n.empty() && (std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_');
      for (char c : n) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
      if (!ok) fail(ErrorCode::InvalidInput, "invalid variable name '" + n + "'");
      for (std::size_t j = 0; j < i; ++j)
        if ((*names)[j] == n) fail(ErrorCode::InvalidInput, "variable name '" + n + "' is repeated");
    }
    return std::move(*names);
  }

  Fan fan_;
  IntMatrix grading_;
  IntVector heft_;
  RingContext ring_;
  Ideal irrelevant_;
  ChowRing chow_;
  std::vector<WallCurve> walls_;
};

}  // namespace toricsegre
