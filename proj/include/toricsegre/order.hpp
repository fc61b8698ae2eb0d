#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "toricsegre/linalg.hpp"
#include "toricsegre/monomial.hpp"

namespace toricsegre {

/// Block term order. Blocks are compared in sequence; inside a block the
/// weighted degree decides first, then reverse lexicographic order over the
/// block's variable sequence (the last listed variable is the cheapest).
class MonomialOrder {
 public:
  struct Block {
    std::vector<std::size_t> vars;
    std::vector<std::int64_t> weights;
  };

  MonomialOrder() = default;
  explicit MonomialOrder(std::vector<Block> blocks, std::size_t nvars) : blocks_(std::move(blocks)), nvars_(nvars) {
    all_weights_.assign(nvars_, 0);
    for (const Block& b : blocks_)
      for (std::size_t i = 0; i < b.vars.size(); ++i) all_weights_[b.vars[i]] = b.weights[i];
  }

  /// Weighted degrevlex with x_0 > x_1 > ... > x_{n-1}.
  static MonomialOrder degrevlex(const IntVector& weights) {
    std::vector<std::size_t> seq(weights.size());
    std::iota(seq.begin(), seq.end(), 0);
    return degrevlex(weights, seq);
  }

  /// Weighted degrevlex over an explicit variable precedence (first = largest).
  static MonomialOrder degrevlex(const IntVector& weights, const std::vector<std::size_t>& sequence) {
    Block b;
    b.vars = sequence;
    for (std::size_t v : sequence) b.weights.push_back(weights[v]);
    return MonomialOrder({b}, weights.size());
  }

  /// Degrevlex with `var` moved to the cheapest position.
  static MonomialOrder degrevlex_last(const IntVector& weights, std::size_t var) {
    std::vector<std::size_t> seq;
    for (std::size_t i = 0; i < weights.size(); ++i)
      if (i != var) seq.push_back(i);
    seq.push_back(var);
    return degrevlex(weights, seq);
  }

  /// Elimination order: the listed variables form a block above all others.
  static MonomialOrder elimination(const IntVector& weights, const std::vector<std::size_t>& eliminated) {
    std::vector<bool> in(weights.size(), false);
    for (std::size_t v : eliminated) in[v] = true;
    Block hi, lo;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      Block& b = in[i] ? hi : lo;
      b.vars.push_back(i);
      b.weights.push_back(weights[i]);
    }
    std::vector<Block> blocks;
    if (!hi.vars.empty()) blocks.push_back(std::move(hi));
    if (!lo.vars.empty()) blocks.push_back(std::move(lo));
    return MonomialOrder(std::move(blocks), weights.size());
  }

  std::size_t nvars() const { return nvars_; }
  const std::vector<Block>& blocks() const { return blocks_; }

  /// Sum of weights over all variables; used as the sugar degree.
  std::int64_t weight(const Monomial& m) const {
    std::int64_t w = 0;
    for (std::size_t i = 0; i < nvars_; ++i) w += all_weights_[i] * m[i];
    return w;
  }

  /// Negative, zero, positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const {
    for (const Block& blk : blocks_) {
      std::int64_t wa = 0, wb = 0;
      for (std::size_t i = 0; i < blk.vars.size(); ++i) {
        wa += blk.weights[i] * a[blk.vars[i]];
        wb += blk.weights[i] * b[blk.vars[i]];
      }
      if (wa != wb) return wa < wb ? -1 : 1;
      for (std::size_t i = blk.vars.size(); i-- > 0;) {
        const int ea = a[blk.vars[i]], eb = b[blk.vars[i]];
        if (ea != eb) return ea < eb ? 1 : -1;
      }
    }
    return 0;
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string describe() const {
    std::string s = blocks_.size() > 1 ? "block" : "degrevlex";
    for (const Block& b : blocks_) {
      s += "[";
      for (std::size_t i = 0; i < b.vars.size(); ++i)
        s += (i ? "," : "") + std::to_string(b.vars[i]) + ":" + std::to_string(b.weights[i]);
      s += "]";
    }
    return s;
  }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) { return a.describe() == b.describe(); }

 private:
  std::vector<Block> blocks_;
  std::size_t nvars_ = 0;
  IntVector all_weights_;
};

}  // namespace toricsegre
