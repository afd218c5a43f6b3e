#include "rdss/constructions.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>

#include "rdss/text.hpp"

namespace rdss {

Code replication_code(std::size_t n, unsigned q, const std::vector<std::vector<Vertex>>& groups,
                      const Limits& limits) {
  Space messages(q, groups.size(), limits.state_cap);
  std::vector<Word> words;
  for (std::uint64_t m = 0; m < messages.size(); ++m) {
    auto msg = messages.word(m);
    Word w(n, 0);
    for (std::size_t k = 0; k < groups.size(); ++k)
      for (Vertex v : groups[k]) w[v] = msg[k];
    words.push_back(std::move(w));
  }
  return Code(q, n, std::move(words));
}

Code matching_code(const Graph& g, unsigned q, const Limits& limits) {
  if (g.directed()) throw InvalidArgument("matching construction needs an undirected graph");
  std::vector<std::vector<Vertex>> groups;
  for (auto [u, v] : max_matching(g).edges) groups.push_back({u, v});
  return replication_code(g.vertex_count(), q, groups, limits);
}

Code cycle_replication_code(const Graph& g, unsigned q, const Limits& limits) {
  if (!g.directed()) throw InvalidArgument("cycle construction needs a directed graph");
  auto cycles = max_vertex_disjoint_cycles(g, limits);
  return replication_code(g.vertex_count(), q, {cycles.begin(), cycles.end()}, limits);
}

Code clique_partition_code(const Graph& g, unsigned q, SolveMode mode, const Limits& limits) {
  if (g.directed()) throw InvalidArgument("clique construction needs an undirected graph");
  auto parts = clique_partition(g, mode, limits);
  std::vector<std::vector<Vertex>> cliques;
  std::size_t free = 0;
  for (const auto& p : parts) {
    cliques.push_back(p.members());
    free += cliques.back().size() - 1;
  }
  Space messages(q, free, limits.state_cap);
  std::vector<Word> words;
  for (std::uint64_t m = 0; m < messages.size(); ++m) {
    auto msg = messages.word(m);
    Word w(g.vertex_count(), 0);
    std::size_t k = 0;
    for (const auto& c : cliques) {
      std::uint64_t sum = 0;
      for (std::size_t j = 0; j + 1 < c.size(); ++j) {
        w[c[j]] = msg[k++];
        sum += w[c[j]];
      }
      w[c.back()] = static_cast<Symbol>((q - sum % q) % q);
    }
    words.push_back(std::move(w));
  }
  return Code(q, g.vertex_count(), std::move(words));
}

namespace {

LinearProgram packing_lp(std::size_t n, const CycleList& cycles) {
  LinearProgram lp;
  lp.c.assign(cycles.size(), 1);
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Rational> row(cycles.size(), 0);
    bool used = false;
    for (std::size_t c = 0; c < cycles.size(); ++c)
      if (std::find(cycles[c].begin(), cycles[c].end(), v) != cycles[c].end()) {
        row[c] = 1;
        used = true;
      }
    if (used) lp.add(std::move(row), Relation::le, 1);
  }
  return lp;
}

Rational solved(const LpSolution& s) {
  if (s.status != LpStatus::optimal) throw Error("cycle packing linear program did not reach an optimum");
  return s.value;
}

// Progressive filling: raise the common level t of the unfrozen weights as far as
// possible while keeping the total at K, then freeze the weights that cannot go higher.
std::vector<Rational> fair_weights(const LinearProgram& base, const Rational& k) {
  const std::size_t m = base.c.size();
  std::vector<std::optional<Rational>> frozen(m);
  std::size_t remaining = m;
  auto constrained = [&](const Rational& level, std::size_t extra_cols) {
    LinearProgram lp;
    for (std::size_t r = 0; r < base.a.size(); ++r) {
      auto row = base.a[r];
      row.resize(m + extra_cols, 0);
      lp.add(std::move(row), base.rel[r], base.b[r]);
    }
    std::vector<Rational> total(m + extra_cols, 0);
    for (std::size_t c = 0; c < m; ++c) total[c] = 1;
    lp.add(std::move(total), Relation::eq, k);
    for (std::size_t c = 0; c < m; ++c) {
      std::vector<Rational> row(m + extra_cols, 0);
      row[c] = 1;
      if (frozen[c]) {
        lp.add(std::move(row), Relation::eq, *frozen[c]);
      } else if (extra_cols) {
        row[m] = -1;  // phi_c - t >= 0
        lp.add(std::move(row), Relation::ge, 0);
      } else if (level > 0) {
        lp.add(std::move(row), Relation::ge, level);
      }
    }
    lp.c.assign(m + extra_cols, 0);
    return lp;
  };
  while (remaining) {
    auto lp = constrained(0, 1);
    lp.c[m] = 1;
    Rational level = solved(solve_lp(lp));
    std::size_t froze = 0;
    for (std::size_t c = 0; c < m; ++c) {
      if (frozen[c]) continue;
      auto probe = constrained(level, 0);
      probe.c[c] = 1;
      if (solved(solve_lp(probe)) == level) {
        frozen[c] = level;
        ++froze;
      }
    }
    if (!froze) throw Error("fair cycle weights did not converge");
    remaining -= froze;
  }
  std::vector<Rational> out;
  for (auto& f : frozen) out.push_back(*f);
  return out;
}

}  // namespace

Rational fractional_cycle_packing_value(const Graph& g, const Limits& limits) {
  if (!g.directed()) throw InvalidArgument("cycle packing needs a directed graph");
  auto cycles = enumerate_cycles(g, limits);
  if (cycles.empty()) return 0;
  return solved(solve_lp(packing_lp(g.vertex_count(), cycles)));
}

CyclePacking fractional_cycle_packing(const Graph& g, const Limits& limits, std::size_t fair_limit) {
  if (!g.directed()) throw InvalidArgument("cycle packing needs a directed graph");
  auto cycles = enumerate_cycles(g, limits);
  CyclePacking out;
  out.enumerated = cycles.size();
  out.value = 0;
  if (cycles.empty()) return out;
  auto lp = packing_lp(g.vertex_count(), cycles);
  auto sol = solve_lp(lp);
  out.value = solved(sol);
  std::vector<Rational> weights = sol.x;
  if (cycles.size() <= fair_limit) {
    weights = fair_weights(lp, out.value);
    out.balanced = true;
  }
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    if (weights[c] == 0) continue;
    out.cycles.push_back(cycles[c]);
    out.weights.push_back(weights[c]);
    BigInt den = boost::multiprecision::denominator(weights[c]);
    out.denominator = out.denominator / boost::multiprecision::gcd(out.denominator, den) * den;
  }
  for (const auto& w : out.weights) out.multiplicities.push_back(boost::multiprecision::numerator(Rational(w * out.denominator)));
  return out;
}

std::vector<Rational> vertex_loads(std::size_t n, const CyclePacking& p) {
  std::vector<Rational> load(n, 0);
  for (std::size_t c = 0; c < p.cycles.size(); ++c)
    for (Vertex v : p.cycles[c]) load[v] += p.weights[c];
  return load;
}

VectorCode::VectorCode(const Graph& g, const CyclePacking& packing, unsigned q)
    : g_(&g), packing_(packing), q_(q), stored_(g.vertex_count()) {
  if (packing.denominator > 1u << 20) throw CapExceeded("vector code sub-length p is too large to materialize");
  p_ = packing.denominator.convert_to<std::uint64_t>();
  for (const auto& load : vertex_loads(g.vertex_count(), packing))
    if (load > 1) throw InvalidArgument("cycle packing violates a vertex load constraint");
  for (std::size_t c = 0; c < packing.cycles.size(); ++c) {
    const auto& cyc = packing.cycles[c];
    for (std::size_t k = 0; k < cyc.size(); ++k)
      if (!g.has_edge(cyc[k], cyc[(k + 1) % cyc.size()])) throw InvalidArgument("packing cycle is not a cycle of the graph");
    auto count = packing.multiplicities[c].convert_to<std::uint64_t>();
    for (std::uint64_t j = 0; j < count; ++j) {
      for (Vertex v : cyc) stored_[v].push_back(owner_.size());
      owner_.push_back(c);
    }
  }
}

std::size_t VectorCode::max_load() const {
  std::size_t best = 0;
  for (const auto& s : stored_) best = std::max(best, s.size());
  return best;
}

std::vector<std::vector<Symbol>> VectorCode::encode(const std::vector<Symbol>& message) const {
  if (message.size() != owner_.size()) throw InvalidArgument("message length does not match the vector code");
  std::vector<std::vector<Symbol>> out(stored_.size());
  for (std::size_t v = 0; v < stored_.size(); ++v)
    for (std::size_t k : stored_[v]) out[v].push_back(message[k]);
  return out;
}

std::vector<Symbol> VectorCode::repair(Vertex v, const std::vector<std::vector<Symbol>>& contents) const {
  std::vector<Symbol> out;
  for (std::size_t k : stored_[v]) {
    const auto& cyc = packing_.cycles[owner_[k]];
    auto pos = std::find(cyc.begin(), cyc.end(), v) - cyc.begin();
    Vertex next = cyc[(static_cast<std::size_t>(pos) + 1) % cyc.size()];
    if (!g_->has_edge(v, next)) throw Error("repair source is not an out-neighbor");
    const auto& held = stored_[next];
    auto at = std::lower_bound(held.begin(), held.end(), k) - held.begin();
    out.push_back(contents[next][static_cast<std::size_t>(at)]);
  }
  return out;
}

bool check_vector_repair(const VectorCode& code, std::size_t n, std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Symbol> symbol(0, code.alphabet() - 1);
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<Symbol> msg(code.message_length());
    for (auto& s : msg) s = symbol(rng);
    auto contents = code.encode(msg);
    for (Vertex v = 0; v < n; ++v) {
      auto damaged = contents;
      damaged[v].assign(damaged[v].size(), 0);
      if (code.repair(v, damaged) != contents[v]) return false;
    }
  }
  return true;
}

std::string serialize_vector_code(const VectorCode& code, std::size_t n) {
  const auto& p = code.packing();
  std::ostringstream out;
  out << "v rdss " << n << ' ' << code.alphabet() << ' ' << p.denominator << ' '
      << boost::multiprecision::numerator(p.value) << ' ' << boost::multiprecision::denominator(p.value) << '\n';
  for (std::size_t c = 0; c < p.cycles.size(); ++c) {
    out << "cyc " << p.multiplicities[c];
    for (Vertex v : p.cycles[c]) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

VectorCodeFile parse_vector_code(std::string_view text) {
  VectorCodeFile f;
  bool header = false;
  Rational declared = 0;
  auto number = [](const std::string& t, std::size_t line) {
    try {
      std::size_t used = 0;
      auto v = std::stoull(t, &used);
      if (used != t.size() || t[0] == '-') throw std::invalid_argument(t);
      return v;
    } catch (const std::exception&) {
      throw ParseError(line, "expected a non-negative integer, got '" + t + "'");
    }
  };
  for_each_token_line(text, [&](std::size_t line, const std::vector<std::string>& tok) {
    if (!header) {
      if (tok.size() != 7 || tok[0] != "v" || tok[1] != "rdss")
        throw ParseError(line, "expected header 'v rdss <n> <q> <p> <K-num> <K-den>'");
      f.n = number(tok[2], line);
      f.q = static_cast<unsigned>(number(tok[3], line));
      f.packing.denominator = number(tok[4], line);
      auto den = number(tok[6], line);
      if (f.q < 2) throw ParseError(line, "q must be at least 2");
      if (f.packing.denominator == 0 || den == 0) throw ParseError(line, "denominators must be positive");
      declared = Rational(BigInt(number(tok[5], line)), BigInt(den));
      header = true;
      return;
    }
    if (tok.size() < 4 || tok[0] != "cyc") throw ParseError(line, "expected 'cyc <n(C)> <v0> <v1> ...'");
    BigInt mult = number(tok[1], line);
    Cycle cyc;
    for (std::size_t i = 2; i < tok.size(); ++i) {
      auto v = number(tok[i], line);
      if (v >= f.n) throw ParseError(line, "vertex " + tok[i] + " out of range");
      cyc.push_back(static_cast<Vertex>(v));
    }
    f.packing.cycles.push_back(std::move(cyc));
    f.packing.multiplicities.push_back(mult);
    f.packing.weights.push_back(Rational(mult, f.packing.denominator));
    f.packing.value += f.packing.weights.back();
  });
  if (!header) throw ParseError(0, "missing header");
  if (f.packing.value != declared) throw ParseError(0, "declared K does not match the cycle weights");
  f.packing.enumerated = f.packing.cycles.size();
  return f;
}

}  // namespace rdss
