#include "rdss/code.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "rdss/clique.hpp"
#include "rdss/combinatorics.hpp"

namespace rdss {

Space::Space(unsigned q, std::size_t n) : q_(q), n_(n) {
  if (q < 2) throw InvalidArgument("alphabet size must be at least 2");
  auto limit = ~std::uint64_t{0} - 1;
  size_ = checked_pow(q, n, limit);
  if (size_ > limit) size_ = 0;
}

Space::Space(unsigned q, std::size_t n, std::uint64_t cap) : Space(q, n) {
  if (size_ == 0 || size_ > cap)
    throw CapExceeded(std::to_string(q) + "^" + std::to_string(n) + " strings exceeds the state cap of " +
                      std::to_string(cap));
}

std::uint64_t Space::index(std::span<const Symbol> w) const {
  std::uint64_t r = 0;
  for (Symbol s : w) r = r * q_ + s;
  return r;
}

Word Space::word(std::uint64_t index) const {
  Word w(n_);
  for (std::size_t i = n_; i-- > 0;) {
    w[i] = static_cast<Symbol>(index % q_);
    index /= q_;
  }
  return w;
}

std::uint64_t Space::add(std::uint64_t a, std::uint64_t b) const {
  if (q_ == 2) return a ^ b;
  std::uint64_t r = 0, place = 1;
  for (std::size_t i = 0; i < n_; ++i) {
    r += ((a % q_ + b % q_) % q_) * place;
    a /= q_;
    b /= q_;
    place *= q_;
  }
  return r;
}

std::uint64_t Space::sub(std::uint64_t a, std::uint64_t b) const {
  if (q_ == 2) return a ^ b;
  std::uint64_t r = 0, place = 1;
  for (std::size_t i = 0; i < n_; ++i) {
    r += ((a % q_ + q_ - b % q_) % q_) * place;
    a /= q_;
    b /= q_;
    place *= q_;
  }
  return r;
}

Mask Space::diff_support(std::uint64_t a, std::uint64_t b) const {
  Mask m = 0;
  for (std::size_t i = n_; i-- > 0;) {
    if (a % q_ != b % q_) m |= bit(static_cast<unsigned>(i));
    a /= q_;
    b /= q_;
  }
  return m;
}

Code::Code(unsigned q, std::size_t n, std::vector<Word> words) : q_(q), n_(n), words_(std::move(words)) {
  if (q < 2) throw InvalidArgument("alphabet size must be at least 2");
  if (words_.empty()) throw InvalidArgument("a code needs at least one codeword");
  for (const auto& w : words_) {
    if (w.size() != n) throw InvalidArgument("codeword length differs from code length");
    for (Symbol s : w)
      if (s >= q) throw InvalidArgument("symbol " + std::to_string(s) + " outside alphabet");
  }
  std::sort(words_.begin(), words_.end());
  if (std::adjacent_find(words_.begin(), words_.end()) != words_.end())
    throw InvalidArgument("duplicate codeword");
}

bool Code::contains(const Word& w) const { return std::binary_search(words_.begin(), words_.end(), w); }

double Code::dimension() const { return std::log(static_cast<double>(words_.size())) / std::log(static_cast<double>(q_)); }

double Code::dimension_bits() const { return std::log2(static_cast<double>(words_.size())); }

std::string format_word(const Word& w, unsigned q) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (q <= 10) {
      s.push_back(static_cast<char>('0' + w[i]));
    } else {
      if (i) s.push_back(',');
      s += std::to_string(w[i]);
    }
  }
  return s;
}

Word parse_word(std::string_view tok, unsigned q, std::size_t n, std::size_t line) {
  Word w;
  if (q <= 10) {
    for (char c : tok) {
      if (c < '0' || c > '9') throw ParseError(line, "codeword contains non-digit '" + std::string(1, c) + "'");
      w.push_back(static_cast<Symbol>(c - '0'));
    }
  } else {
    std::size_t pos = 0;
    while (pos <= tok.size()) {
      auto comma = tok.find(',', pos);
      if (comma == std::string_view::npos) comma = tok.size();
      auto part = tok.substr(pos, comma - pos);
      Symbol v = 0;
      auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
      if (part.empty() || ec != std::errc() || p != part.data() + part.size())
        throw ParseError(line, "bad symbol '" + std::string(part) + "'");
      w.push_back(v);
      pos = comma + 1;
    }
  }
  if (w.size() != n)
    throw ParseError(line, "codeword has length " + std::to_string(w.size()) + ", expected " + std::to_string(n));
  for (Symbol s : w)
    if (s >= q) throw ParseError(line, "symbol " + std::to_string(s) + " not below q=" + std::to_string(q));
  return w;
}

Code parse_code(std::string_view text) {
  std::size_t line_no = 0, pos = 0;
  bool header = false;
  std::size_t n = 0, count = 0;
  unsigned q = 0;
  std::vector<Word> words;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string line(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    std::istringstream is(line);
    std::vector<std::string> tok;
    for (std::string t; is >> t;) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (!header) {
      if (tok.size() != 5 || tok[0] != "c" || tok[1] != "rdss")
        throw ParseError(line_no, "expected header 'c rdss <n> <q> <count>'");
      try {
        n = std::stoul(tok[2]);
        q = static_cast<unsigned>(std::stoul(tok[3]));
        count = std::stoul(tok[4]);
      } catch (const std::exception&) {
        throw ParseError(line_no, "header fields must be non-negative integers");
      }
      if (q < 2) throw ParseError(line_no, "q must be at least 2");
      if (n == 0) throw ParseError(line_no, "code length must be positive");
      if (count == 0) throw ParseError(line_no, "a code needs at least one codeword");
      header = true;
      continue;
    }
    if (tok.size() != 1) throw ParseError(line_no, "expected one codeword per line");
    if (words.size() == count) throw ParseError(line_no, "more codewords than declared");
    words.push_back(parse_word(tok[0], q, n, line_no));
  }
  if (!header) throw ParseError(0, "missing header");
  if (words.size() != count)
    throw ParseError(0, "header declares " + std::to_string(count) + " codewords, found " + std::to_string(words.size()));
  try {
    return Code(q, n, std::move(words));
  } catch (const InvalidArgument& e) {
    throw ParseError(0, e.what());
  }
}

std::string serialize_code(const Code& c) {
  std::ostringstream os;
  os << "c rdss " << c.length() << ' ' << c.alphabet() << ' ' << c.size() << '\n';
  for (const auto& w : c.words()) os << format_word(w, c.alphabet()) << '\n';
  return os.str();
}

bool confusable(const Graph& g, const Word& x, const Word& y) {
  if (x.size() != g.vertex_count() || y.size() != g.vertex_count())
    throw InvalidArgument("word length does not match the graph");
  for (Vertex i = 0; i < g.vertex_count(); ++i) {
    if (x[i] == y[i]) continue;
    bool agree = std::all_of(g.neighbors(i).begin(), g.neighbors(i).end(), [&](Vertex j) { return x[j] == y[j]; });
    if (agree) return true;
  }
  return false;
}

std::vector<bool> confusable_supports(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 30) throw CapExceeded("support enumeration needs at most 30 vertices");
  std::vector<bool> bad(std::size_t{1} << n, false);
  for (Mask t = 1; t < (Mask{1} << n); ++t)
    for (Mask m = t; m; m &= m - 1)
      if (!(g.neighbor_mask(lowest_bit(m)) & t)) {
        bad[t] = true;
        break;
      }
  return bad;
}

std::optional<Symbol> RecoveryTables::recover(Vertex i, const Word& side) const {
  auto it = tables_[i].find(side);
  if (it == tables_[i].end()) return std::nullopt;
  return it->second;
}

Word side_information(const Graph& g, Vertex i, std::span<const Symbol> w) {
  Word s;
  s.reserve(g.neighbors(i).size());
  for (Vertex j : g.neighbors(i)) s.push_back(w[j]);
  return s;
}

RdssCheck verify_rdss(const Graph& g, const Code& c) {
  if (c.length() != g.vertex_count()) throw InvalidArgument("code length does not match the graph");
  RdssCheck result;
  result.tables = RecoveryTables(g.vertex_count());
  bool conflict = false;
  for (Vertex i = 0; i < g.vertex_count() && !conflict; ++i) {
    std::map<Word, Symbol> table;
    for (const auto& w : c.words()) {
      auto [it, fresh] = table.emplace(side_information(g, i, w), w[i]);
      if (!fresh && it->second != w[i]) {
        conflict = true;
        break;
      }
    }
    for (auto& [k, v] : table) result.tables.set(i, k, v);
  }
  if (!conflict) {
    result.ok = true;
    return result;
  }
  result.tables = RecoveryTables{};
  const auto& ws = c.words();
  for (std::size_t a = 0; a < ws.size(); ++a)
    for (std::size_t b = a + 1; b < ws.size(); ++b)
      for (Vertex i = 0; i < g.vertex_count(); ++i) {
        if (ws[a][i] == ws[b][i]) continue;
        const auto& nb = g.neighbors(i);
        if (std::all_of(nb.begin(), nb.end(), [&](Vertex j) { return ws[a][j] == ws[b][j]; })) {
          result.witness = Confusion{ws[a], ws[b], i};
          return result;
        }
      }
  throw Error("internal: recovery table conflict without a confusable pair");
}

Code max_rdss_code(const Graph& g, unsigned q, std::size_t min_distance, const Limits& limits) {
  Space space(q, g.vertex_count(), std::min(limits.state_cap, limits.clique_cap));
  const std::size_t n = g.vertex_count();
  const auto bad = confusable_supports(g);
  const auto total = static_cast<std::size_t>(space.size());

  // Differences that may not occur inside a code: confusable supports, and
  // (when a distance is requested) every nonzero difference of weight < d.
  std::vector<std::uint64_t> forbidden;
  for (std::uint64_t x = 1; x < total; ++x) {
    Mask supp = space.diff_support(x, 0);
    if (bad[supp] || static_cast<std::size_t>(popcount(supp)) < min_distance) forbidden.push_back(x);
  }
  // Independent sets of the confusion graph are cliques of its complement.
  BitGraph comp(total);
  {
    BitGraph conf(total);
    for (std::uint64_t a = 0; a < total; ++a)
      for (auto d : forbidden) {
        auto b = space.add(a, d);
        if (b > a) conf.add_edge(a, b);
      }
    comp = conf.complement();
  }

  // Lexicographic greedy code as the starting incumbent.
  std::vector<std::size_t> greedy;
  for (std::size_t a = 0; a < total; ++a)
    if (std::all_of(greedy.begin(), greedy.end(), [&](std::size_t b) { return comp.adjacent(a, b); }))
      greedy.push_back(a);

  CliqueSearch search;
  search.initial = greedy;
  search.forced = {0};  // the confusion graph is a Cayley graph
  search.node_limit = limits.search_cap;
  if (!g.directed() && n <= limits.subset_cap) {
    auto vc = min_vertex_cover(g, SolveMode::exact, limits).size();
    search.stop_at = static_cast<std::size_t>(checked_pow(q, vc, total));
  } else if (g.directed() && n <= limits.subset_cap) {
    auto fvs = min_fvs(g, limits).size();
    search.stop_at = static_cast<std::size_t>(checked_pow(q, fvs, total));
  }
  auto clique = max_clique(comp, search);
  std::vector<Word> words;
  for (auto idx : clique) words.push_back(space.word(idx));
  return Code(q, n, std::move(words));
}

CapacityResult capacity_exact(const Graph& g, unsigned q, const Limits& limits) {
  Code c = max_rdss_code(g, q, 1, limits);
  double dim = c.dimension();
  double bits = c.dimension_bits();
  return {std::move(c), dim, bits};
}

QSetSize q_set_size(const Graph& g, unsigned q, const Limits& limits) {
  Space space(q, g.vertex_count(), limits.state_cap);
  const auto bad = confusable_supports(g);
  std::uint64_t count = 0;
  for (Mask t = 1; t < bad.size(); ++t)
    if (bad[t]) count += checked_pow(q - 1, static_cast<std::uint64_t>(popcount(t)), space.size());
  double turan = static_cast<double>(g.vertex_count()) -
                 std::log(static_cast<double>(count) + 1.0) / std::log(static_cast<double>(q));
  return {count, turan};
}

DegreeBound degree_distribution_bound(const Graph& g, unsigned q, std::optional<double> turan) {
  const double qd = q;
  double sum = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) sum += std::pow(qd, -static_cast<double>(g.degree(v) + 1));
  DegreeBound b;
  b.value = -std::log((qd - 1) * sum) / std::log(qd);
  b.consistent = true;
  if (!(b.value > 0)) {
    b.consistent = false;
    b.note = "not positive";
  } else if (turan && b.value > *turan + 1e-12) {
    b.consistent = false;
    b.note = "exceeds the Turan bound";
  } else if (!turan) {
    b.consistent = false;
    b.note = "Turan bound unavailable for comparison";
  }
  if (!g.isolated_vertices().empty()) b.note += b.note.empty() ? "isolated vertex present" : "; isolated vertex present";
  return b;
}

std::size_t hamming_distance(const Word& a, const Word& b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

MinDistance min_distance(const Code& c) {
  if (c.size() < 2) return {c.length() + 1, true};
  std::size_t best = c.length();
  const auto& ws = c.words();
  for (std::size_t a = 0; a < ws.size(); ++a)
    for (std::size_t b = a + 1; b < ws.size(); ++b) best = std::min(best, hamming_distance(ws[a], ws[b]));
  return {best, false};
}

Code translate(const Code& c, const Word& shift) {
  if (shift.size() != c.length()) throw InvalidArgument("translation vector length mismatch");
  std::vector<Word> out;
  out.reserve(c.size());
  for (const auto& w : c.words()) {
    Word t(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) t[i] = (w[i] + shift[i] % c.alphabet()) % c.alphabet();
    out.push_back(std::move(t));
  }
  return Code(c.alphabet(), c.length(), std::move(out));
}

}  // namespace rdss
