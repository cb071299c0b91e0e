#include "gossip_age/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "gossip_age/error.hpp"

namespace gossip_age {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : order_(n) {
  if (n == 0) throw std::invalid_argument("graph must have at least one vertex");
  edges_.reserve(edges.size());
  for (auto e : edges) {
    if (e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge endpoint outside 1.." + std::to_string(n));
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u + 1));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw std::invalid_argument("duplicate edge " + std::to_string(dup->u + 1) + "-" +
                                std::to_string(dup->v + 1));
  }

  offsets_.assign(n + 1, 0);
  for (auto e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (auto e : edges_) {
    adjacency_[cursor[e.u]++] = e.v;
    adjacency_[cursor[e.v]++] = e.u;
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]));
  }

  if (n <= 64) {
    masks_.assign(n, 0);
    for (auto e : edges_) {
      masks_[e.u] |= std::uint64_t{1} << e.v;
      masks_[e.v] |= std::uint64_t{1} << e.u;
    }
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= order_ || v >= order_) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  std::vector<Edge> edges(edges_.begin(), edges_.end());
  edges.push_back({u, v});
  return Graph(order_, edges);
}

std::string Graph::fingerprint() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int k = 0; k < 8; ++k) {
      h ^= (x >> (8 * k)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(order_);
  for (auto e : edges_) {
    mix(e.u);
    mix(e.v);
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
  return "n" + std::to_string(order_) + "-m" + std::to_string(edges_.size()) + "-" + hex;
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph empty_graph(std::size_t n) { return Graph(n, {}); }

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) edges.push_back({u, static_cast<Vertex>((u + 1) % n)});
  return Graph(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
  return Graph(n, edges);
}

Graph complete_bipartite(std::size_t left, std::size_t right) {
  std::vector<Edge> edges;
  edges.reserve(left * right);
  for (Vertex u = 0; u < left; ++u)
    for (Vertex v = 0; v < right; ++v) edges.push_back({u, static_cast<Vertex>(left + v)});
  return Graph(left + right, edges);
}

Graph from_labeled_edges(std::size_t n,
                         std::span<const std::pair<std::uint64_t, std::uint64_t>> edges) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 1 || b < 1 || a > n || b > n) {
      throw std::invalid_argument("edge " + std::to_string(a) + "-" + std::to_string(b) +
                                  " outside 1.." + std::to_string(n));
    }
    out.push_back({static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1)});
  }
  return Graph(n, out);
}

Graph build_named(Topology kind, const TopologyParams& params) {
  const std::size_t n = params.n;
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  switch (kind) {
    case Topology::complete:
      return complete_graph(n);
    case Topology::empty:
      return empty_graph(n);
    case Topology::cycle:
      return cycle_graph(n);
    case Topology::path:
      return path_graph(n);
    case Topology::star:
      return complete_bipartite(1, n - 1);
    case Topology::complete_bipartite:
      if (params.left > n) {
        throw std::invalid_argument("complete_bipartite: L + R must equal n");
      }
      return complete_bipartite(params.left, n - params.left);
  }
  throw std::invalid_argument("unknown topology");
}

Topology parse_topology(const std::string& name) {
  if (name == "complete") return Topology::complete;
  if (name == "empty") return Topology::empty;
  if (name == "cycle") return Topology::cycle;
  if (name == "path") return Topology::path;
  if (name == "star") return Topology::star;
  if (name == "complete_bipartite" || name == "bipartite") return Topology::complete_bipartite;
  throw std::invalid_argument("unknown topology '" + name + "'");
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  auto next_line = [&](const char* what) {
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) return;
    }
    throw ParseError(std::string("edge list: missing ") + what);
  };

  next_line("header");
  std::istringstream header(line);
  long long n = 0;
  long long m = 0;
  if (!(header >> n >> m) || n < 1 || m < 0) {
    throw ParseError("edge list: header must be 'n m' with n >= 1, m >= 0");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long k = 0; k < m; ++k) {
    next_line("edge line");
    std::istringstream row(line);
    long long u = 0;
    long long v = 0;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) {
      throw ParseError("edge list: line " + std::to_string(k + 2) + " must be 'u v'");
    }
    if (u == v) throw ParseError("edge list: self-loop at vertex " + std::to_string(u));
    if (u < 1 || v > n || u > v) {
      throw ParseError("edge list: line " + std::to_string(k + 2) +
                       " needs 1 <= u < v <= " + std::to_string(n));
    }
    edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
  }
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      throw ParseError("edge list: more edge lines than the header's m");
    }
  }
  try {
    return Graph(static_cast<std::size_t>(n), edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
}

}  // namespace gossip_age
