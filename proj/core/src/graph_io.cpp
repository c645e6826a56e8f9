#include "distnum/graph_io.hpp"

#include <cctype>
#include <sstream>

#include "distnum/errors.hpp"

namespace distnum {

namespace {

std::string strip_whitespace(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

class BitReader {
public:
  explicit BitReader(const std::string& data, std::size_t pos)
      : data_(data), pos_(pos) {}

  bool next() {
    if (bit_ == 0) {
      if (pos_ >= data_.size())
        throw precondition_error("graph6: truncated adjacency bits");
      int c = static_cast<unsigned char>(data_[pos_++]);
      if (c < 63 || c > 126)
        throw precondition_error("graph6: byte out of printable range");
      word_ = unsigned(c - 63);
      bit_ = 6;
    }
    --bit_;
    return (word_ >> bit_) & 1u;
  }

  std::size_t pos() const { return pos_; }
  bool mid_word() const { return bit_ != 0; }

private:
  const std::string& data_;
  std::size_t pos_;
  unsigned word_ = 0;
  unsigned bit_ = 0;
};

}  // namespace

Graph parse_graph6(const std::string& text) {
  std::string s = strip_whitespace(text);
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  if (s.empty()) throw precondition_error("graph6: empty input");

  std::size_t pos = 0;
  std::size_t n = 0;
  int c0 = static_cast<unsigned char>(s[pos]);
  if (c0 == '~') {
    if (s.size() >= 2 && s[1] == '~')
      throw precondition_error("graph6: graphs with more than 258047 vertices unsupported");
    if (s.size() < 4) throw precondition_error("graph6: malformed size header");
    n = 0;
    for (int i = 1; i <= 3; ++i) {
      int c = static_cast<unsigned char>(s[pos + i]);
      if (c < 63 || c > 126) throw precondition_error("graph6: malformed size header");
      n = (n << 6) | std::size_t(c - 63);
    }
    pos += 4;
  } else {
    if (c0 < 63 || c0 > 126) throw precondition_error("graph6: malformed size header");
    n = std::size_t(c0 - 63);
    pos += 1;
  }

  Graph g(n);
  BitReader bits(s, pos);
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u)
      if (bits.next()) g.add_edge(u, v);

  // Trailing padding bits of the last word must be zero, and there must be
  // no extra bytes.
  if (bits.mid_word()) {
    BitReader rest = bits;
    while (rest.mid_word())
      if (rest.next()) throw precondition_error("graph6: nonzero padding bits");
  }
  if (bits.pos() != s.size()) throw precondition_error("graph6: trailing bytes");
  return g;
}

std::string write_graph6(const Graph& g) {
  std::size_t n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out += char(n + 63);
  } else if (n <= 258047) {
    out += '~';
    out += char(((n >> 12) & 63) + 63);
    out += char(((n >> 6) & 63) + 63);
    out += char((n & 63) + 63);
  } else {
    throw precondition_error("graph6: graph too large to encode");
  }

  unsigned word = 0, nbits = 0;
  auto push_bit = [&](bool b) {
    word = (word << 1) | unsigned(b);
    if (++nbits == 6) {
      out += char(word + 63);
      word = 0;
      nbits = 0;
    }
  };
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) push_bit(g.adjacent(u, v));
  if (nbits > 0) out += char((word << (6 - nbits)) + 63);
  return out;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  while (std::getline(in, header)) {
    if (!strip_whitespace(header).empty()) break;
  }
  std::istringstream head(header);
  long long n = -1, m = -1;
  if (!(head >> n >> m) || n < 0 || m < 0)
    throw precondition_error("edge list: malformed header, expected \"n m\"");
  std::string extra;
  if (head >> extra)
    throw precondition_error("edge list: malformed header, expected \"n m\"");

  Graph g(std::size_t(n));
  long long edges_seen = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (strip_whitespace(line).empty()) continue;
    std::istringstream ls(line);
    long long u = -1, v = -1;
    if (!(ls >> u >> v))
      throw precondition_error("edge list: malformed edge line \"" + line + "\"");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw precondition_error("edge list: edge endpoint out of range");
    if (u == v) throw precondition_error("edge list: self-loop not allowed");
    g.add_edge(Vertex(u), Vertex(v));
    ++edges_seen;
  }
  if (edges_seen != m)
    throw precondition_error("edge list: header claims " + std::to_string(m) +
                             " edges, found " + std::to_string(edges_seen));
  return g;
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  auto es = g.edges();
  out << g.vertex_count() << ' ' << es.size() << '\n';
  for (const auto& [u, v] : es) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph(const std::string& text, GraphFormat fmt) {
  switch (fmt) {
    case GraphFormat::graph6:
      return parse_graph6(text);
    case GraphFormat::edge_list:
      return parse_edge_list(text);
    case GraphFormat::auto_detect: {
      // An edge-list header is two integers; anything else is graph6.
      std::istringstream in(text);
      long long a, b;
      if (in >> a >> b) return parse_edge_list(text);
      return parse_graph6(text);
    }
  }
  throw precondition_error("unknown graph format");
}

}  // namespace distnum
