#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "distapx/graph.hpp"

namespace distapx {

namespace {

bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line)) throw std::runtime_error("graph file: missing header");
  std::istringstream header(line);
  long long n = 0, m = 0;
  int directed = 0, weighted = 0;
  if (!(header >> n >> m >> directed >> weighted) || n <= 0 || m < 0 ||
      (directed != 0 && directed != 1) || (weighted != 0 && weighted != 1)) {
    throw std::runtime_error("graph file: malformed header '" + line + "'");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_data_line(in, line)) {
      throw std::runtime_error("graph file: expected " + std::to_string(m) + " edges, got " +
                               std::to_string(i));
    }
    std::istringstream row(line);
    long long u = 0, v = 0, w = 1;
    if (!(row >> u >> v)) throw std::runtime_error("graph file: malformed edge '" + line + "'");
    if (!(row >> w)) w = 1;
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::runtime_error("graph file: node id out of range in '" + line + "'");
    }
    edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), w});
  }
  try {
    return Graph(static_cast<NodeId>(n), GraphKind{directed == 1, weighted == 1}, edges);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("graph file: ") + e.what());
  }
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.node_count() << ' ' << g.edge_count() << ' ' << (g.directed() ? 1 : 0) << ' '
      << (g.weighted() ? 1 : 0) << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v;
    if (g.weighted()) out << ' ' << e.w;
    out << '\n';
  }
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file " + path);
  write_graph(out, g);
}

}  // namespace distapx
