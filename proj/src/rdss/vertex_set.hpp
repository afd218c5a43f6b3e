#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "rdss/common.hpp"

namespace rdss {

/// Subset of the vertex range 0..n-1, stored as a word-packed bitmask.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet from_mask(std::size_t universe, Mask m) {
    VertexSet s(universe);
    if (!s.words_.empty()) s.words_[0] = m;
    return s;
  }

  std::size_t universe() const { return universe_; }

  void insert(Vertex v) { words_[v / 64] |= bit(v % 64); }
  void erase(Vertex v) { words_[v / 64] &= ~bit(v % 64); }
  bool contains(Vertex v) const { return v < universe_ && (words_[v / 64] >> (v % 64)) & 1U; }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Low 64 vertices as a mask; only meaningful for universes of at most 64 vertices.
  Mask mask() const { return words_.empty() ? 0 : words_[0]; }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    for (std::size_t w = 0; w < words_.size(); ++w)
      for (Mask m = words_[w]; m; m &= m - 1) out.push_back(static_cast<Vertex>(w * 64 + lowest_bit(m)));
    return out;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
  std::size_t universe_ = 0;
  std::vector<Mask> words_;
};

}  // namespace rdss
