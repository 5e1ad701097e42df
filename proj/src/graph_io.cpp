#include "hamlab/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hamlab {

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

[[noreturn]] void fail(std::size_t lineno, const std::string& what) {
  throw std::runtime_error("edge list line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = strip_comment(line);
    if (blank(body)) continue;
    std::istringstream fields(body);
    long long a = 0;
    long long b = 0;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra)) fail(lineno, "expected two integers");
    if (!have_header) {
      if (a < 0 || b < 0) fail(lineno, "negative header value");
      n = a;
      m = b;
      have_header = true;
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (a < 0 || b < 0 || a >= n || b >= n) fail(lineno, "vertex out of range");
    if (a == b) fail(lineno, "self-loop");
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (!have_header) throw std::runtime_error("edge list: missing 'n m' header");
  if (static_cast<long long>(edges.size()) != m) {
    throw std::runtime_error("edge list: header declares " + std::to_string(m) +
                             " edges, found " + std::to_string(edges.size()));
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_edge_list(out, g);
}

std::vector<Vertex> read_vertex_sequence(std::istream& in) {
  std::vector<Vertex> out;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(strip_comment(line));
    long long v = 0;
    while (fields >> v) out.push_back(static_cast<Vertex>(v));
    if (!fields.eof()) throw std::runtime_error("vertex sequence: non-integer token");
  }
  return out;
}

std::vector<Vertex> read_vertex_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_vertex_sequence(in);
}

}  // namespace hamlab
