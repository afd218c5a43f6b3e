#include "rdss/duality.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <thread>

#include "rdss/text.hpp"

namespace rdss {

PointSet points(const Space& space, const std::vector<Word>& words) {
  PointSet out;
  for (const auto& w : words) out.push_back(space.index(w));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PointSet points(const Space& space, const Code& c) { return points(space, c.words()); }

Rational q_uncovered(const Space& space, const PointSet& f) {
  return Rational(1) - Rational(BigInt(f.size()), BigInt(space.size()));
}

Word CoveringFamily::combine(std::uint64_t label) const {
  Word x(n, 0);
  for (std::size_t i = 0; i < generators.size(); ++i)
    if ((label >> i) & 1U)
      for (std::size_t j = 0; j < n; ++j) x[j] = (x[j] + generators[i][j]) % q;
  return x;
}

namespace {

struct Candidate {
  std::uint64_t gain = 0;
  std::uint64_t z = 0;
};

// Best shift in [lo, hi): most new points, smallest z on ties.
Candidate best_shift(const Space& space, const std::vector<std::uint64_t>& members, const std::vector<bool>& in,
                     std::uint64_t lo, std::uint64_t hi) {
  Candidate best{0, lo};
  bool any = false;
  for (std::uint64_t z = lo; z < hi; ++z) {
    std::uint64_t gain = 0;
    for (auto x : members)
      if (!in[space.add(x, z)]) ++gain;
    if (!any || gain > best.gain) {
      best = {gain, z};
      any = true;
    }
  }
  return best;
}

}  // namespace

CoveringFamily greedy_covering(const Code& c, const Limits& limits) {
  Space space(c.alphabet(), c.length(), limits.state_cap);
  CoveringFamily fam;
  fam.q = c.alphabet();
  fam.n = c.length();
  fam.span = {0};
  const std::uint64_t total = space.size();
  std::vector<bool> in(total, false);
  std::vector<std::uint64_t> members = points(space, c);
  for (auto x : members) in[x] = true;
  fam.uncovered.push_back(q_uncovered(space, members));
  const unsigned workers = std::max(1U, limits.threads);
  while (members.size() < total) {
    std::vector<Candidate> found(workers);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      std::uint64_t lo = std::min(total, w * chunk), hi = std::min(total, lo + chunk);
      if (lo == hi) {
        found[w] = {0, total};
        continue;
      }
      if (workers == 1) found[w] = best_shift(space, members, in, lo, hi);
      else pool.emplace_back([&, w, lo, hi] { found[w] = best_shift(space, members, in, lo, hi); });
    }
    for (auto& t : pool) t.join();
    Candidate best = found[0];
    for (const auto& f : found)
      if (f.gain > best.gain || (f.gain == best.gain && f.z < best.z)) best = f;
    if (best.gain == 0) throw Error("greedy covering stalled");
    const auto before = members.size();
    for (std::size_t k = 0; k < before; ++k) {
      auto y = space.add(members[k], best.z);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
    fam.generators.push_back(space.word(best.z));
    const auto half = fam.span.size();
    for (std::size_t a = 0; a < half; ++a) fam.span.push_back(space.add(fam.span[a], best.z));
    fam.uncovered.push_back(q_uncovered(space, {members.begin(), members.end()}));
  }
  PointSet d(fam.span.begin(), fam.span.end());
  std::sort(d.begin(), d.end());
  fam.distinct = static_cast<std::size_t>(std::unique(d.begin(), d.end()) - d.begin());
  return fam;
}

long covering_generator_bound(unsigned q, std::size_t n, std::uint64_t code_size) {
  const double lnq = std::log(static_cast<double>(q));
  const double size = static_cast<double>(code_size);
  double v = static_cast<double>(n) * lnq / std::log(2.0) - std::log2(size) +
             std::log2(std::min(static_cast<double>(n) * lnq, 1 + std::log(size)));
  return static_cast<long>(std::ceil(v - 1e-12));
}

bool covers(const Space& space, const PointSet& c, const CoveringFamily& family) {
  std::vector<bool> hit(space.size(), false);
  for (auto x : family.span)
    for (auto y : c) hit[space.add(y, x)] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::string serialize_covering(const CoveringFamily& family) {
  std::ostringstream out;
  out << "g " << family.generators.size() << '\n';
  for (const auto& w : family.generators) out << format_word(w, family.q) << '\n';
  return out.str();
}

std::vector<Word> parse_covering(std::string_view text, unsigned q, std::size_t n) {
  std::vector<Word> out;
  std::optional<std::size_t> count;
  for_each_token_line(text, [&](std::size_t line, const std::vector<std::string>& tok) {
    if (!count) {
      if (tok.size() != 2 || tok[0] != "g") throw ParseError(line, "expected header 'g <count>'");
      try {
        count = std::stoul(tok[1]);
      } catch (const std::exception&) {
        throw ParseError(line, "generator count must be a non-negative integer");
      }
      return;
    }
    if (tok.size() != 1) throw ParseError(line, "expected one generator per line");
    if (out.size() == *count) throw ParseError(line, "more generators than declared");
    out.push_back(parse_word(tok[0], q, n, line));
  });
  if (!count) throw ParseError(0, "missing header");
  if (out.size() != *count) throw ParseError(0, "generator count does not match the header");
  return out;
}

double index_length_bound(unsigned q, std::size_t n, std::uint64_t code_size) {
  const double lnq = std::log(static_cast<double>(q));
  const double size = static_cast<double>(code_size);
  return static_cast<double>(n) - std::log(size) / lnq +
         std::log(std::min(static_cast<double>(n) * lnq, 1 + std::log(size))) / lnq;
}

bool within_index_bound(unsigned q, std::size_t n, std::uint64_t code_size, std::uint64_t label_count) {
  const long double lnq = std::log(static_cast<long double>(q));
  const long double lhs = static_cast<long double>(label_count) * static_cast<long double>(code_size);
  const long double rhs = std::pow(static_cast<long double>(q), static_cast<long double>(n)) *
                          std::min(static_cast<long double>(n) * lnq, 1 + std::log(static_cast<long double>(code_size)));
  return lhs <= rhs * (1 + 1e-12L);
}

IndexCode index_from_rdss(const Graph& g, const Code& c, const CoveringFamily& family, const Limits& limits) {
  if (c.length() != g.vertex_count() || family.n != c.length() || family.q != c.alphabet())
    throw InvalidArgument("code, covering and graph disagree on length or alphabet");
  auto check = verify_rdss(g, c);
  if (!check) throw InvalidArgument("code is not an RDSS code on this graph");

  struct State {
    Space space;
    std::vector<bool> in_code;
    std::vector<std::uint64_t> labels;  // smallest coefficient integer per distinct span point
    CoveringFamily family;
    RecoveryTables tables;
    const Graph* g;
  };
  auto st = std::make_shared<State>(State{Space(c.alphabet(), c.length(), limits.state_cap), {}, {}, family,
                                          std::move(check.tables), &g});
  st->in_code.assign(st->space.size(), false);
  for (auto x : points(st->space, c)) st->in_code[x] = true;
  std::vector<std::uint64_t> seen;
  for (std::uint64_t a = 0; a < family.span.size(); ++a) {
    if (std::find(seen.begin(), seen.end(), family.span[a]) != seen.end()) continue;
    seen.push_back(family.span[a]);
    st->labels.push_back(a);
  }

  IndexCode out;
  out.q = c.alphabet();
  out.n = c.length();
  out.label_count = st->labels.size();
  out.length = std::log(static_cast<double>(out.label_count)) / std::log(static_cast<double>(out.q));
  // labels go out as their binary coefficient vectors, packed into q-ary symbols
  out.transmitted = static_cast<std::size_t>(
      std::ceil(static_cast<double>(family.size()) * std::log(2.0) / std::log(static_cast<double>(out.q)) - 1e-12));
  out.encode = [st](const Word& y) -> std::uint64_t {
    auto idx = st->space.index(y);
    for (auto a : st->labels)
      if (st->in_code[st->space.sub(idx, st->family.span[a])]) return a;
    throw Error("word is not covered by the translates");
  };
  out.decode = [st](Vertex j, std::uint64_t label, const Word& side) -> Symbol {
    const unsigned q = st->family.q;
    Word shift = st->family.combine(label);
    const auto& nb = st->g->neighbors(j);
    Word local(side.size());
    for (std::size_t k = 0; k < side.size(); ++k) local[k] = (side[k] + q - shift[nb[k]]) % q;
    auto v = st->tables.recover(j, local);
    if (!v) throw Error("side information does not match the translated code");
    return (*v + shift[j]) % q;
  };
  return out;
}

IndexCode index_from_linear(const LinearIndexCode& code, std::size_t n) {
  auto lin = std::make_shared<LinearIndexCode>(code);
  auto syndromes = std::make_shared<Space>(code.q, code.length());
  IndexCode out;
  out.q = code.q;
  out.n = n;
  out.label_count = syndromes->size();
  out.length = static_cast<double>(code.length());
  out.transmitted = code.length();
  out.encode = [lin, syndromes](const Word& y) { return syndromes->index(lin->encode(y)); };
  out.decode = [lin, syndromes](Vertex i, std::uint64_t label, const Word& side) {
    return lin->decode(i, syndromes->word(label), side);
  };
  return out;
}

bool check_index_code(const Graph& g, const IndexCode& code, const Limits& limits) {
  Space space(code.q, code.n, limits.state_cap);
  for (std::uint64_t x = 0; x < space.size(); ++x) {
    auto y = space.word(x);
    auto label = code.encode(y);
    for (Vertex i = 0; i < code.n; ++i)
      if (code.decode(i, label, side_information(g, i, y)) != y[i]) return false;
  }
  return true;
}

Code rdss_from_index(const Graph& g, const IndexCode& code, const Limits& limits) {
  if (code.n != g.vertex_count()) throw InvalidArgument("index code length does not match the graph");
  Space space(code.q, code.n, limits.state_cap);
  std::map<std::uint64_t, std::vector<Word>> fibers;
  for (std::uint64_t x = 0; x < space.size(); ++x) {
    auto y = space.word(x);
    fibers[code.encode(y)].push_back(std::move(y));
  }
  const std::vector<Word>* best = nullptr;
  for (const auto& [label, words] : fibers)
    if (!best || words.size() > best->size()) best = &words;
  return Code(code.q, code.n, *best);
}

bool bassalygo_elias_check(const Space& space, const PointSet& c, const PointSet& b) {
  std::vector<bool> in_b(space.size(), false);
  for (auto y : b) in_b[y] = true;
  std::uint64_t sum = 0;
  for (std::uint64_t x = 0; x < space.size(); ++x)
    for (auto y : c)
      if (in_b[space.add(y, x)]) ++sum;
  return sum == static_cast<std::uint64_t>(c.size()) * b.size();
}

bool q_recursion_check(const Space& space, const PointSet& f) {
  std::vector<bool> in(space.size(), false);
  for (auto y : f) in[y] = true;
  Rational total = 0;
  for (std::uint64_t x = 0; x < space.size(); ++x) {
    std::uint64_t fresh = 0;
    for (auto y : f)
      if (!in[space.add(y, x)]) ++fresh;
    total += Rational(1) - Rational(BigInt(f.size() + fresh), BigInt(space.size()));
  }
  Rational q = q_uncovered(space, f);
  return total / BigInt(space.size()) == q * q;
}

}  // namespace rdss
