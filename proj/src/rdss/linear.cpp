#include "rdss/linear.hpp"

#include <set>

#include "rdss/combinatorics.hpp"

namespace rdss {

bool fits(const Graph& g, const FieldMatrix& a) {
  const std::size_t n = g.vertex_count();
  if (a.rows() != n || a.cols() != n) return false;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j) {
      if (a.at(i, j) >= a.field()) return false;
      if (i == j && a.at(i, j) == 0) return false;
      if (i != j && a.at(i, j) != 0 && !g.has_edge(i, j)) return false;
    }
  return true;
}

namespace {

void require_prime(unsigned q) {
  if (!is_prime(q)) throw InvalidArgument("linear codes need a prime alphabet, got q=" + std::to_string(q));
}

// Echelon basis kept in reduced form so that a span has a unique key.
struct Span {
  FieldMatrix basis;
  std::vector<Symbol> key() const {
    std::vector<Symbol> k;
    for (std::size_t r = 0; r < basis.rows(); ++r) k.insert(k.end(), basis.row(r).begin(), basis.row(r).end());
    return k;
  }
};

bool in_span(const FieldMatrix& reduced, std::vector<Symbol> v, unsigned q) {
  for (std::size_t r = 0; r < reduced.rows(); ++r) {
    auto row = reduced.row(r);
    std::size_t pivot = 0;
    while (row[pivot] == 0) ++pivot;
    Symbol f = v[pivot];
    if (!f) continue;
    for (std::size_t c = 0; c < v.size(); ++c) v[c] = static_cast<Symbol>((v[c] + std::uint64_t{q - f} * row[c]) % q);
  }
  for (Symbol s : v)
    if (s) return false;
  return true;
}

class MinrankSearch {
public:
  MinrankSearch(const Graph& g, unsigned q, std::size_t lower) : g_(g), q_(q), n_(g.vertex_count()), lower_(lower) {
    for (Vertex i = 0; i < n_; ++i) {
      const auto& nb = g.neighbors(i);
      std::size_t count = 1;
      for (std::size_t k = 0; k < nb.size(); ++k) count *= q;
      std::vector<std::vector<Symbol>> opts;
      for (std::size_t code = 0; code < count; ++code) {
        std::vector<Symbol> row(n_, 0);
        row[i] = 1;
        std::size_t c = code;
        for (std::size_t k = nb.size(); k-- > 0;) {
          row[nb[k]] = static_cast<Symbol>(c % q);
          c /= q;
        }
        opts.push_back(std::move(row));
      }
      options_.push_back(std::move(opts));
    }
    best_ = n_ + 1;
  }

  MinrankResult run() {
    FieldMatrix empty(0, n_, q_);
    chosen_.clear();
    dfs(0, empty);
    FieldMatrix w(n_, n_, q_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) w.at(i, j) = best_rows_[i][j];
    return {best_, w, 0};
  }

private:
  void dfs(std::size_t i, const FieldMatrix& span) {
    if (best_ <= lower_) return;
    const std::size_t r = span.rows();
    if (r >= best_) return;
    if (i == n_) {
      best_ = r;
      best_rows_ = chosen_;
      return;
    }
    auto key = std::make_pair(i, Span{span}.key());
    if (!visited_.insert(key).second) return;
    // A row inside the current span never loses: any completion of a larger span
    // spans at least as much from the smaller one.
    for (const auto& opt : options_[i])
      if (in_span(span, opt, q_)) {
        chosen_.push_back(opt);
        dfs(i + 1, span);
        chosen_.pop_back();
        return;
      }
    if (r + 1 >= best_) return;
    std::set<std::vector<Symbol>> seen;
    for (const auto& opt : options_[i]) {
      if (in_span(span, opt, q_)) continue;
      FieldMatrix next = span;
      next.append_row(opt);
      row_reduce(next);
      if (!seen.insert(Span{next}.key()).second) continue;
      chosen_.push_back(opt);
      dfs(i + 1, next);
      chosen_.pop_back();
      if (best_ <= lower_ || r + 1 >= best_) return;
    }
  }

  const Graph& g_;
  unsigned q_;
  std::size_t n_;
  std::size_t lower_;
  std::vector<std::vector<std::vector<Symbol>>> options_;
  std::vector<std::vector<Symbol>> chosen_, best_rows_;
  std::set<std::pair<std::size_t, std::vector<Symbol>>> visited_;
  std::size_t best_;
};

}  // namespace

MinrankResult minrank(const Graph& g, unsigned q, const Limits& limits) {
  require_prime(q);
  const std::size_t n = g.vertex_count();
  std::uint64_t free_entries = 0;
  for (Vertex i = 0; i < n; ++i) free_entries += g.degree(i);
  std::uint64_t space = checked_pow(q, free_entries, limits.minrank_cap);
  if (space > limits.minrank_cap)
    throw CapExceeded("minrank search over q^" + std::to_string(free_entries) + " fitting matrices exceeds cap " +
                      std::to_string(limits.minrank_cap) + "; identity gives minrank <= " + std::to_string(n));
  // rank of a fitting matrix is at least the size of any independent (or induced acyclic) set
  std::size_t lower = n == 0 ? 0 : 1;
  if (n <= limits.subset_cap && n <= 62)
    lower = static_cast<std::size_t>(popcount(g.directed() ? max_acyclic_mask(g, limits)
                                                          : max_independent_mask(g, g.all_mask())));
  auto result = MinrankSearch(g, q, lower).run();
  result.search_space = space;
  return result;
}

Code linear_rdss_from_fit(const Graph& g, const FieldMatrix& a, const Limits& limits) {
  if (!fits(g, a)) throw InvalidArgument("matrix does not fit the graph");
  const unsigned q = a.field();
  require_prime(q);
  auto basis = null_space(a);
  const std::size_t n = g.vertex_count();
  Space coeffs(q, basis.rows(), limits.state_cap);
  std::vector<Word> words;
  for (std::uint64_t x = 0; x < coeffs.size(); ++x) {
    auto c = coeffs.word(x);
    Word w(n, 0);
    for (std::size_t r = 0; r < basis.rows(); ++r)
      for (std::size_t j = 0; j < n; ++j) w[j] = static_cast<Symbol>((w[j] + std::uint64_t{c[r]} * basis.at(r, j)) % q);
    words.push_back(std::move(w));
  }
  return Code(q, n, std::move(words));
}

bool is_linear(const Code& c) {
  const unsigned q = c.alphabet();
  if (!c.contains(Word(c.length(), 0))) return false;
  for (const auto& a : c.words()) {
    for (unsigned s = 2; s < q; ++s) {
      Word t(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) t[i] = static_cast<Symbol>(std::uint64_t{a[i]} * s % q);
      if (!c.contains(t)) return false;
    }
    for (const auto& b : c.words()) {
      Word t(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) t[i] = (a[i] + b[i]) % q;
      if (!c.contains(t)) return false;
    }
  }
  return true;
}

std::vector<Symbol> LinearIndexCode::encode(std::span<const Symbol> y) const {
  std::vector<Symbol> s(parity.rows(), 0);
  for (std::size_t r = 0; r < parity.rows(); ++r) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < parity.cols(); ++j) acc += std::uint64_t{parity.at(r, j)} * y[j];
    s[r] = static_cast<Symbol>(acc % q);
  }
  return s;
}

Symbol LinearIndexCode::decode(Vertex i, std::span<const Symbol> syndrome, std::span<const Symbol> side) const {
  const auto& d = decoders[i];
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < syndrome.size(); ++k) acc += std::uint64_t{d.syndrome_coeffs[k]} * syndrome[k];
  for (std::size_t k = 0; k < side.size(); ++k) acc += std::uint64_t{d.side_coeffs[k]} * side[k];
  return static_cast<Symbol>(acc % q);
}

LinearIndexCode syndrome_index_code(const Graph& g, const Code& c) {
  const unsigned q = c.alphabet();
  require_prime(q);
  if (c.length() != g.vertex_count()) throw InvalidArgument("code length does not match the graph");
  if (!is_linear(c)) throw InvalidArgument("code is not linear over F_q");
  const std::size_t n = c.length();
  FieldMatrix gen(0, n, q);
  for (const auto& w : c.words()) gen.append_row(w);
  row_reduce(gen);
  FieldMatrix basis(0, n, q);
  for (std::size_t r = 0; r < gen.rows(); ++r) {
    bool zero = true;
    for (Symbol s : gen.row(r)) zero = zero && s == 0;
    if (!zero) basis.append_row(gen.row(r));
  }
  LinearIndexCode out;
  out.q = q;
  if (basis.rows() == 0) {
    out.parity = FieldMatrix(n, n, q);
    for (std::size_t i = 0; i < n; ++i) out.parity.at(i, i) = 1;
  } else {
    out.parity = null_space(basis);
  }
  const std::size_t l = out.parity.rows();
  for (Vertex i = 0; i < n; ++i) {
    const auto& nb = g.neighbors(i);
    // columns: parity rows then unit vectors of the neighbors; solve M^T x = e_i
    FieldMatrix m(n, l + nb.size(), q);
    for (std::size_t r = 0; r < l; ++r)
      for (std::size_t j = 0; j < n; ++j) m.at(j, r) = out.parity.at(r, j);
    for (std::size_t k = 0; k < nb.size(); ++k) m.at(nb[k], l + k) = 1;
    std::vector<Symbol> target(n, 0);
    target[i] = 1;
    auto x = solve(m, target);
    if (!x) throw InvalidArgument("code is not an RDSS code: vertex " + std::to_string(i) + " is not linearly recoverable");
    LinearIndexCode::Decoder d;
    d.syndrome_coeffs.assign(x->begin(), x->begin() + static_cast<long>(l));
    d.side_coeffs.assign(x->begin() + static_cast<long>(l), x->end());
    out.decoders.push_back(std::move(d));
  }
  return out;
}

bool check_round_trip(const Graph& g, const LinearIndexCode& code, const Limits& limits) {
  Space space(code.q, g.vertex_count(), limits.state_cap);
  for (std::uint64_t x = 0; x < space.size(); ++x) {
    auto y = space.word(x);
    auto s = code.encode(y);
    for (Vertex i = 0; i < g.vertex_count(); ++i)
      if (code.decode(i, s, side_information(g, i, y)) != y[i]) return false;
  }
  return true;
}

}  // namespace rdss
