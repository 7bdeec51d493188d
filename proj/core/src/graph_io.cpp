#include "circis/graph_io.hpp"

#include <sstream>

#include "circis/error.hpp"

namespace circis {

namespace {

i64 parse_i64(const std::string& s) {
  try {
    std::size_t pos = 0;
    i64 v = std::stoll(s, &pos);
    if (pos != s.size()) throw Error(Errc::parse_error, "trailing junk in number '" + s + "'");
    return v;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(Errc::parse_error, "bad number '" + s + "'");
  }
}

}  // namespace

std::string format_circulant(const Circulant& g) {
  std::ostringstream os;
  os << g.n << ":";
  bool first = true;
  for (i64 d : g.distances.values()) {
    if (!first) os << ",";
    os << d;
    first = false;
  }
  return os.str();
}

Circulant parse_circulant(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(Errc::parse_error, "missing ':' in '" + text + "'");
  i64 n = parse_i64(text.substr(0, colon));
  std::vector<i64> ds;
  std::string rest = text.substr(colon + 1);
  if (!rest.empty()) {
    std::istringstream is(rest);
    std::string tok;
    while (std::getline(is, tok, ',')) ds.push_back(parse_i64(tok));
  }
  return make_circulant(n, ds);
}

std::string to_graph6(const SimpleGraph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back((char)(n + 63));
  } else if (n <= 258047) {
    out.push_back((char)126);
    out.push_back((char)(((n >> 12) & 63) + 63));
    out.push_back((char)(((n >> 6) & 63) + 63));
    out.push_back((char)((n & 63) + 63));
  } else {
    throw Error(Errc::out_of_range, "graph6 order cap 258047");
  }
  int bits = 0, acc = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back((char)(acc + 63));
        bits = 0;
        acc = 0;
      }
    }
  if (bits > 0) out.push_back((char)((acc << (6 - bits)) + 63));
  return out;
}

SimpleGraph from_graph6(const std::string& text) {
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size()) throw Error(Errc::parse_error, "graph6 string truncated");
    int c = (unsigned char)text[pos++];
    if (c < 63 || c > 126) throw Error(Errc::parse_error, "graph6 byte out of range");
    return c - 63;
  };
  int n;
  int c0 = next();
  if (c0 < 63) {
    n = c0;
  } else {
    n = (next() << 12) | (next() << 6) | next();
  }
  SimpleGraph g(n);
  int bits = 0, acc = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (bits == 0) {
        acc = next();
        bits = 6;
      }
      if (acc & (1 << (bits - 1))) g.add_edge(i, j);
      --bits;
    }
  if (pos != text.size()) throw Error(Errc::parse_error, "graph6 trailing bytes");
  return g;
}

std::string to_edge_list(const SimpleGraph& g) {
  std::ostringstream os;
  auto es = g.edges();
  os << g.order() << " " << es.size() << "\n";
  for (auto [u, v] : es) os << u << " " << v << "\n";
  return os.str();
}

SimpleGraph from_edge_list(const std::string& text) {
  std::istringstream is(text);
  long long n, m;
  if (!(is >> n >> m)) throw Error(Errc::parse_error, "edge list missing header");
  if (n < 0) throw Error(Errc::parse_error, "negative order");
  SimpleGraph g((int)n);
  for (long long e = 0; e < m; ++e) {
    long long u, v;
    if (!(is >> u >> v)) throw Error(Errc::parse_error, "edge list truncated");
    g.add_edge((int)u, (int)v);
  }
  long long extra;
  if (is >> extra) throw Error(Errc::parse_error, "edge list trailing data");
  return g;
}

}  // namespace circis
