#include "rdss/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace rdss {

Graph::Graph(std::size_t n, std::vector<Edge> edges, bool directed)
    : n_(n), directed_(directed), out_(n), in_(n) {
  std::set<Edge> seen;
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    if (!directed && u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw InvalidArgument("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    edges_.emplace_back(u, v);
    out_[u].push_back(v);
    in_[v].push_back(u);
    if (!directed) {
      out_[v].push_back(u);
      in_[u].push_back(v);
    }
  }
  for (auto& l : out_) std::sort(l.begin(), l.end());
  for (auto& l : in_) std::sort(l.begin(), l.end());
  if (n_ <= 64) {
    masks_.assign(n_, 0);
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex u : out_[v]) masks_[v] |= bit(u);
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& l = out_[u];
  return std::binary_search(l.begin(), l.end(), v);
}

Mask Graph::neighbor_mask(Vertex v) const {
  if (!fits_mask()) throw CapExceeded("bitmask queries need at most 64 vertices");
  return masks_[v];
}

std::vector<Vertex> Graph::isolated_vertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n_; ++v)
    if (out_[v].empty()) out.push_back(v);
  return out;
}

Graph Graph::induced(const std::vector<Vertex>& keep) const {
  std::vector<long> relabel(n_, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) relabel[keep[i]] = static_cast<long>(i);
  std::vector<Edge> e;
  for (auto [u, v] : edges_)
    if (relabel[u] >= 0 && relabel[v] >= 0)
      e.emplace_back(static_cast<Vertex>(relabel[u]), static_cast<Vertex>(relabel[v]));
  return Graph(keep.size(), std::move(e), directed_);
}

Graph Graph::as_directed() const {
  if (directed_) return *this;
  std::vector<Edge> e;
  for (auto [u, v] : edges_) {
    e.emplace_back(u, v);
    e.emplace_back(v, u);
  }
  return Graph(n_, std::move(e), true);
}

Graph Graph::disjoint_union(const Graph& other) const {
  if (other.directed_ != directed_) throw InvalidArgument("cannot join directed and undirected graphs");
  auto e = edges_;
  auto shift = static_cast<Vertex>(n_);
  for (auto [u, v] : other.edges_) e.emplace_back(u + shift, v + shift);
  return Graph(n_ + other.n_, std::move(e), directed_);
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line, const char* what) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(line, std::string("expected non-negative integer for ") + what + ", got '" +
                               std::string(tok) + "'");
  return v;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0, m = 0;
  bool directed = false;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    auto tok = split_ws(line);
    if (tok.empty() || tok[0].front() == '#') continue;
    if (!have_header) {
      if (tok.size() != 5 || tok[0] != "p" || tok[1] != "rdss")
        throw ParseError(line_no, "expected header 'p rdss <n> <m> <u|d>'");
      n = parse_uint(tok[2], line_no, "vertex count");
      m = parse_uint(tok[3], line_no, "edge count");
      if (tok[4] == "u")
        directed = false;
      else if (tok[4] == "d")
        directed = true;
      else
        throw ParseError(line_no, "graph kind must be 'u' or 'd'");
      if (n > (std::uint64_t{1} << 31)) throw ParseError(line_no, "vertex count too large");
      have_header = true;
      continue;
    }
    if (tok.size() != 3 || tok[0] != "e") throw ParseError(line_no, "expected edge line 'e <u> <v>'");
    auto u = parse_uint(tok[1], line_no, "edge endpoint");
    auto v = parse_uint(tok[2], line_no, "edge endpoint");
    if (u >= n || v >= n) throw ParseError(line_no, "vertex index out of range");
    if (u == v) throw ParseError(line_no, "self-loop");
    Edge e{static_cast<Vertex>(u), static_cast<Vertex>(v)};
    Edge key = e;
    if (!directed && key.first > key.second) std::swap(key.first, key.second);
    if (!seen.insert(key).second) throw ParseError(line_no, "duplicate edge");
    if (edges.size() == m) throw ParseError(line_no, "more edges than declared in header");
    edges.push_back(e);
  }
  if (!have_header) throw ParseError(0, "missing header");
  if (edges.size() != m)
    throw ParseError(0, "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return Graph(n, std::move(edges), directed);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream os;
  os << "p rdss " << g.vertex_count() << ' ' << g.edge_count() << ' ' << (g.directed() ? 'd' : 'u') << '\n';
  for (auto [u, v] : g.edges()) os << "e " << u << ' ' << v << '\n';
  return os.str();
}

VertexSet neighborhood(const Graph& g, Vertex v) {
  if (v >= g.vertex_count()) throw InvalidArgument("vertex out of range");
  VertexSet s(g.vertex_count());
  for (Vertex u : g.neighbors(v)) s.insert(u);
  return s;
}

VertexSet neighborhood_of_set(const Graph& g, const VertexSet& u) {
  VertexSet s(g.vertex_count());
  for (Vertex v : u.members())
    for (Vertex w : g.neighbors(v)) s.insert(w);
  s -= u;
  return s;
}

Mask neighborhood_mask(const Graph& g, Mask u) {
  Mask s = 0;
  for (Mask m = u; m; m &= m - 1) s |= g.neighbor_mask(static_cast<Vertex>(lowest_bit(m)));
  return s & ~u;
}

namespace graphs {

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e), false);
}

Graph cycle(std::size_t n, bool directed) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph(n, std::move(e), directed);
}

Graph complete(std::size_t n, bool directed) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = directed ? 0 : i + 1; j < n; ++j)
      if (i != j) e.emplace_back(i, j);
  return Graph(n, std::move(e), directed);
}

Graph edgeless(std::size_t n, bool directed) { return Graph(n, {}, directed); }

}  // namespace graphs

}  // namespace rdss
