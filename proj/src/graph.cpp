#include "symlap/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>

#include "symlap/error.hpp"

namespace symlap {

namespace {

std::string pair_str(Vertex i, Vertex j) {
  return "{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw RangeError("graph needs at least one vertex, got n=" + std::to_string(n_));
  adjacency_.assign(static_cast<std::size_t>(n_) * n_, 0);
  degrees_.assign(static_cast<std::size_t>(n_), 0);
  for (auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_)
      throw RangeError("edge " + pair_str(e.u, e.v) + " has an index outside [0," +
                       std::to_string(n_) + ")");
    if (e.u == e.v) throw ParseError("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    auto& cell = adjacency_[static_cast<std::size_t>(e.u) * n_ + e.v];
    if (cell) throw ParseError("duplicate edge " + pair_str(e.u, e.v));
    cell = 1;
    adjacency_[static_cast<std::size_t>(e.v) * n_ + e.u] = 1;
    ++degrees_[static_cast<std::size_t>(e.u)];
    ++degrees_[static_cast<std::size_t>(e.v)];
  }
  std::sort(edges_.begin(), edges_.end());
}

Graph Graph::from_bitmask(int n, Bitmask mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j, ++bit)
      if ((mask >> bit) & 1U) edges.push_back({i, j});
  if (bit < 64 && (mask >> bit) != 0)
    throw RangeError("bitmask has bits beyond the " + std::to_string(bit) + " vertex pairs of n=" +
                     std::to_string(n));
  return Graph(n, std::move(edges));
}

int Graph::min_degree() const noexcept { return *std::min_element(degrees_.begin(), degrees_.end()); }

bool Graph::has_edge(Vertex i, Vertex j) const noexcept {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) return false;
  return adjacency_[static_cast<std::size_t>(i) * n_ + j] != 0;
}

std::vector<Vertex> Graph::neighbors(Vertex i) const {
  std::vector<Vertex> out;
  for (Vertex j = 0; j < n_; ++j)
    if (has_edge(i, j)) out.push_back(j);
  return out;
}

Bitmask Graph::bitmask() const {
  if (n_ > 11) throw RangeError("bitmask encoding supports n <= 11");
  Bitmask mask = 0;
  for (const auto& e : edges_) mask |= Bitmask{1} << pair_bit(n_, e.u, e.v);
  return mask;
}

int pair_bit(int n, Vertex i, Vertex j) {
  if (i > j) std::swap(i, j);
  // rows 0..i-1 contribute (n-1) + (n-2) + ... + (n-i) bits
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

Graph from_edge_list(std::string_view text) {
  std::vector<std::vector<long>> rows;
  std::size_t line_no = 0;
  std::vector<std::size_t> line_numbers;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;

    std::vector<long> fields;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      if (i == line.size()) break;
      long value = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
      if (ec != std::errc() ||
          (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r'))
        throw ParseError("line " + std::to_string(line_no) + ": expected integers, got '" +
                         std::string(line) + "'");
      fields.push_back(value);
      i = static_cast<std::size_t>(ptr - line.data());
    }
    if (fields.empty()) continue;
    if (fields.size() != 2)
      throw ParseError("line " + std::to_string(line_no) + ": expected two integers, got " +
                       std::to_string(fields.size()));
    rows.push_back(std::move(fields));
    line_numbers.push_back(line_no);
  }
  if (rows.empty()) throw ParseError("empty edge list");

  const long n = rows[0][0];
  const long m = rows[0][1];
  if (n < 1) throw ParseError("header: vertex count must be >= 1, got " + std::to_string(n));
  if (m < 0) throw ParseError("header: edge count must be >= 0, got " + std::to_string(m));
  if (static_cast<long>(rows.size()) - 1 != m)
    throw ParseError("header announces " + std::to_string(m) + " edges but " +
                     std::to_string(rows.size() - 1) + " edge lines follow");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const long i = rows[k][0];
    const long j = rows[k][1];
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw RangeError("line " + std::to_string(line_numbers[k]) + ": vertex index out of range [0," +
                       std::to_string(n) + ")");
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Family parse_family(std::string_view name) {
  if (name == "complete") return Family::complete;
  if (name == "complete_bipartite") return Family::complete_bipartite;
  if (name == "star") return Family::star;
  if (name == "cycle") return Family::cycle;
  throw ParseError("unknown graph family '" + std::string(name) + "'");
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::star: return "star";
    case Family::cycle: return "cycle";
  }
  return "?";
}

Graph complete(int n) {
  if (n < 2) throw RangeError("complete graph needs n >= 2, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1)
    throw RangeError("complete bipartite graph needs both parts >= 1, got " + std::to_string(a) +
                     "," + std::to_string(b));
  std::vector<Edge> edges;
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = a; j < a + b; ++j) edges.push_back({i, j});
  return Graph(a + b, std::move(edges));
}

Graph star(int n) {
  if (n < 2) throw RangeError("star graph needs n >= 2, got " + std::to_string(n));
  return complete_bipartite(1, n - 1);
}

Graph cycle(int n) {
  if (n < 3) throw RangeError("cycle needs n >= 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges));
}

Graph generate(Family family, int a, int b) {
  switch (family) {
    case Family::complete: return complete(a);
    case Family::complete_bipartite: return complete_bipartite(a, b);
    case Family::star: return star(a);
    case Family::cycle: return cycle(a);
  }
  throw RangeError("unknown family");
}

bool is_connected(const Graph& g) {
  const int n = g.n();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::deque<Vertex> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w = 0; w < n; ++w) {
      if (!seen[static_cast<std::size_t>(w)] && g.has_edge(v, w)) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  return reached == n;
}

bool is_bipartite(const Graph& g) {
  const int n = g.n();
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  for (Vertex s = 0; s < n; ++s) {
    if (colour[static_cast<std::size_t>(s)] >= 0) continue;
    colour[static_cast<std::size_t>(s)] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        auto& cw = colour[static_cast<std::size_t>(w)];
        if (cw < 0) {
          cw = 1 - colour[static_cast<std::size_t>(v)];
          queue.push_back(w);
        } else if (cw == colour[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_connected_mask(int n, Bitmask mask) {
  // Row bitsets; n <= 11 keeps each row inside 16 bits.
  std::uint32_t rows[16] = {};
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if ((mask >> bit) & 1U) {
        rows[i] |= 1U << j;
        rows[j] |= 1U << i;
      }
  const std::uint32_t all = (1U << n) - 1U;
  std::uint32_t reached = 1U;
  std::uint32_t frontier = 1U;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < n; ++v)
      if ((frontier >> v) & 1U) next |= rows[v];
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == all;
}

Bitmask mask_space(int n) {
  if (n < kMinEnumerate || n > kMaxEnumerate)
    throw RangeError("enumeration supports 2 <= n <= 7, got n=" + std::to_string(n));
  return Bitmask{1} << (n * (n - 1) / 2);
}

void for_each_connected(int n, Bitmask lo, Bitmask hi,
                        const std::function<void(const Graph&)>& visit) {
  const Bitmask space = mask_space(n);
  hi = std::min(hi, space);
  for (Bitmask mask = lo; mask < hi; ++mask)
    if (is_connected_mask(n, mask)) visit(Graph::from_bitmask(n, mask));
}

void for_each_connected(int n, const std::function<void(const Graph&)>& visit) {
  for_each_connected(n, 0, mask_space(n), visit);
}

std::vector<Graph> enumerate_connected(int n) {
  std::vector<Graph> out;
  for_each_connected(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace symlap
