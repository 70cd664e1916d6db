#include "majcol/edge_list.hpp"

#include <charconv>
#include <set>
#include <vector>

namespace majcol {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool to_u64(std::string_view s, std::uint64_t& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

AnyGraph parse_edge_list(std::string_view text) {
  bool have_header = false;
  bool directed = true;
  std::uint64_t n = 0, m = 0;
  std::vector<Arc> arcs;
  std::set<Arc> seen;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    auto tok = split_ws(line);
    if (tok.empty() || tok[0].front() == '#') continue;
    if (!have_header) {
      if (tok.size() != 3 || (tok[0] != "digraph" && tok[0] != "graph") || !to_u64(tok[1], n) ||
          !to_u64(tok[2], m))
        throw ParseError("malformed header", lineno);
      if (n > 0xffffffffULL) throw ParseError("vertex count too large", lineno);
      directed = tok[0] == "digraph";
      have_header = true;
      continue;
    }
    std::uint64_t u = 0, v = 0;
    if (tok.size() != 2 || !to_u64(tok[0], u) || !to_u64(tok[1], v))
      throw ParseError("malformed edge line", lineno);
    if (u >= n || v >= n) throw ParseError("vertex id out of range", lineno);
    if (u == v) throw ParseError("self-loop", lineno);
    Arc a{static_cast<Vertex>(u), static_cast<Vertex>(v)};
    Arc key = directed ? a : Arc{std::min(a.first, a.second), std::max(a.first, a.second)};
    if (!seen.insert(key).second)
      throw ParseError(directed ? "duplicate arc" : "duplicate edge", lineno);
    arcs.push_back(a);
  }
  if (!have_header) throw ParseError("missing header", lineno + 1);
  if (arcs.size() != m)
    throw ParseError("expected " + std::to_string(m) + " edges, found " +
                         std::to_string(arcs.size()),
                     lineno);
  if (directed) return Digraph(n, std::move(arcs));
  return Graph(n, std::move(arcs));
}

Digraph parse_digraph(std::string_view text) {
  auto g = parse_edge_list(text);
  if (auto* d = std::get_if<Digraph>(&g)) return std::move(*d);
  throw ParseError("expected a digraph header", 1);
}

Graph parse_graph(std::string_view text) {
  auto g = parse_edge_list(text);
  if (auto* u = std::get_if<Graph>(&g)) return std::move(*u);
  throw ParseError("expected a graph header", 1);
}

namespace {
std::string serialize(const char* kind, std::size_t n, const std::vector<Arc>& arcs) {
  std::string s = std::string(kind) + " " + std::to_string(n) + " " + std::to_string(arcs.size());
  s.reserve(s.size() + arcs.size() * 14);
  for (const auto& [u, v] : arcs) {
    s += '\n';
    s += std::to_string(u);
    s += ' ';
    s += std::to_string(v);
  }
  s += '\n';
  return s;
}
}  // namespace

std::string serialize_edge_list(const Digraph& d) { return serialize("digraph", d.n(), d.arcs()); }
std::string serialize_edge_list(const Graph& g) { return serialize("graph", g.n(), g.edges()); }

}  // namespace majcol
