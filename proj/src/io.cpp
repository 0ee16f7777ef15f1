#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "hyperlag/hypercore.hpp"

namespace hyperlag {

namespace {

/// Next line with comments stripped that still has content; false at EOF.
bool next_content_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

std::vector<long long> parse_ints(const std::string& line, int line_no) {
  std::istringstream is(line);
  std::vector<long long> values;
  std::string token;
  while (is >> token) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw ParseError(line_no, "expected an integer, got '" + token + "'");
    }
    if (used != token.size()) throw ParseError(line_no, "expected an integer, got '" + token + "'");
    values.push_back(v);
  }
  return values;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

UniformHypergraph read_hypergraph(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_content_line(in, line, line_no)) throw ParseError(line_no, "missing header 'r n m'");
  const auto header = parse_ints(line, line_no);
  if (header.size() != 3) throw ParseError(line_no, "header must be 'r n m'");
  const long long r = header[0], n = header[1], m = header[2];
  if (r < 2) throw ParseError(line_no, "arity r must be >= 2");
  if (n < 0 || m < 0) throw ParseError(line_no, "n and m must be non-negative");

  std::vector<Edge> edges;
  std::set<Edge> seen;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long k = 0; k < m; ++k) {
    if (!next_content_line(in, line, line_no)) {
      throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " + std::to_string(k));
    }
    const auto values = parse_ints(line, line_no);
    if (static_cast<long long>(values.size()) != r) {
      throw ParseError(line_no, "edge has " + std::to_string(values.size()) + " vertices, expected " + std::to_string(r));
    }
    Edge e;
    for (long long v : values) {
      if (v < 1 || v > n) throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
      e.push_back(static_cast<Vertex>(v));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw ParseError(line_no, "edge repeats a vertex");
    if (!seen.insert(e).second) throw ParseError(line_no, "duplicate edge");
    edges.push_back(std::move(e));
  }
  if (next_content_line(in, line, line_no)) throw ParseError(line_no, "trailing content after the declared edges");
  return UniformHypergraph(static_cast<int>(r), static_cast<int>(n), std::move(edges));
}

UniformHypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const UniformHypergraph& g) {
  out << g.arity() << ' ' << g.order() << ' ' << g.edge_count() << '\n';
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto edge = g.edge(e);
    for (std::size_t k = 0; k < edge.size(); ++k) out << (k ? " " : "") << edge[k];
    out << '\n';
  }
}

void write_hypergraph_file(const std::string& path, const UniformHypergraph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_hypergraph(out, g);
}

}  // namespace hyperlag
