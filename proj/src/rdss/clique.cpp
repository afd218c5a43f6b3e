#include "rdss/clique.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rdss {

BitGraph::BitGraph(std::size_t n) : n_(n), words_((n + 63) / 64), rows_(n * words_, 0) {}

void BitGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) return;
  rows_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  rows_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

std::size_t BitGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += __builtin_popcountll(row(v)[w]);
  return d;
}

BitGraph BitGraph::complement() const {
  BitGraph c(n_);
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) c.add_edge(u, v);
  return c;
}

namespace {

// Search runs on a relabeled copy so that vertex order = colouring order.
class CliqueSolver {
public:
  CliqueSolver(const BitGraph& g, const CliqueSearch& s) : src_(g), search_(s), n_(g.size()), words_(g.words()) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::vector<std::size_t> deg(n_);
    for (std::size_t v = 0; v < n_; ++v) deg[v] = g.degree(v);
    std::stable_sort(order_.begin(), order_.end(), [&](auto a, auto b) { return deg[a] > deg[b]; });
    pos_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) pos_[order_[i]] = i;
    adj_.assign(n_ * words_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (g.adjacent(order_[i], order_[j])) adj_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
  }

  std::vector<std::size_t> run() {
    best_ = search_.initial;
    std::vector<std::uint64_t> p(words_, 0);
    for (std::size_t i = 0; i < n_; ++i) p[i / 64] |= std::uint64_t{1} << (i % 64);
    current_.clear();
    for (auto f : search_.forced) {
      std::size_t i = pos_.at(f);
      if (!test(p, i)) throw std::invalid_argument("forced vertices do not form a clique");
      current_.push_back(i);
      intersect(p, i);
    }
    if (best_.size() < search_.stop_at) {
      if (none(p)) {
        if (current_.size() > best_.size()) record();
      } else {
        expand(p, 0);
      }
    }
    return best_;
  }

private:
  bool test(const std::vector<std::uint64_t>& s, std::size_t i) const { return (s[i / 64] >> (i % 64)) & 1U; }
  bool none(const std::vector<std::uint64_t>& s) const {
    return std::all_of(s.begin(), s.end(), [](auto w) { return w == 0; });
  }
  void intersect(std::vector<std::uint64_t>& s, std::size_t i) const {
    for (std::size_t w = 0; w < words_; ++w) s[w] &= adj_[i * words_ + w];
  }
  void record() {
    best_.clear();
    for (auto i : current_) best_.push_back(order_[i]);
    std::sort(best_.begin(), best_.end());
    if (best_.size() >= search_.stop_at) done_ = true;
  }

  void expand(std::vector<std::uint64_t>& p, std::size_t depth) {
    if (done_) return;
    if (++nodes_ > search_.node_limit)
      throw CapExceeded("clique search exceeded " + std::to_string(search_.node_limit) + " nodes");
    // greedy sequential colouring of p
    std::vector<std::size_t> verts;
    std::vector<std::size_t> colors;
    std::vector<std::uint64_t> uncolored = p;
    std::vector<std::uint64_t> avail(words_);
    std::size_t color = 0;
    while (!none(uncolored)) {
      ++color;
      avail = uncolored;
      for (std::size_t w = 0; w < words_; ++w) {
        while (avail[w]) {
          std::size_t i = w * 64 + __builtin_ctzll(avail[w]);
          avail[w] &= avail[w] - 1;
          uncolored[w] &= ~(std::uint64_t{1} << (i % 64));
          for (std::size_t x = w; x < words_; ++x) avail[x] &= ~adj_[i * words_ + x];
          verts.push_back(i);
          colors.push_back(color);
        }
      }
    }
    std::vector<std::uint64_t> next(words_);
    for (std::size_t k = verts.size(); k-- > 0;) {
      if (current_.size() + colors[k] <= best_.size()) return;
      std::size_t i = verts[k];
      current_.push_back(i);
      for (std::size_t w = 0; w < words_; ++w) next[w] = p[w] & adj_[i * words_ + w];
      if (none(next)) {
        if (current_.size() > best_.size()) record();
      } else {
        auto copy = next;
        expand(copy, depth + 1);
      }
      current_.pop_back();
      if (done_) return;
      p[i / 64] &= ~(std::uint64_t{1} << (i % 64));
    }
  }

  const BitGraph& src_;
  const CliqueSearch& search_;
  std::size_t n_, words_;
  std::vector<std::size_t> order_, pos_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::size_t> current_, best_;
  bool done_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::vector<std::size_t> max_clique(const BitGraph& g, const CliqueSearch& search) {
  for (std::size_t a = 0; a < search.initial.size(); ++a)
    for (std::size_t b = a + 1; b < search.initial.size(); ++b)
      if (!g.adjacent(search.initial[a], search.initial[b]))
        throw std::invalid_argument("initial incumbent is not a clique");
  return CliqueSolver(g, search).run();
}

}  // namespace rdss
