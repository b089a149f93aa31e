#include <algorithm>
#include <charconv>
#include <string>

#include "turanpack/errors.hpp"
#include "turanpack/graph.hpp"

namespace turanpack {

namespace {

constexpr char kGraph6Header[] = ">>graph6<<";

bool is_graph6_byte(char c) { return c >= 63 && c <= 126; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' ||
                        s.front() == '\n'))
    s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder)
    throw PreconditionError("graph6 encoding supports at most " +
                            std::to_string(kGraph6MaxOrder) + " vertices");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  // Upper triangle, column by column: x(0,1) x(0,2) x(1,2) x(0,3) ...
  int chunk = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

Graph from_graph6(std::string_view bytes) {
  if (bytes.starts_with(kGraph6Header)) bytes.remove_prefix(sizeof(kGraph6Header) - 1);
  if (bytes.empty()) throw ParseError("graph6: empty input");
  for (std::size_t i = 0; i < bytes.size(); ++i)
    if (!is_graph6_byte(bytes[i]))
      throw ParseError("graph6: malformed byte at offset " + std::to_string(i));

  std::size_t pos = 0;
  long long n = 0;
  if (bytes[0] != 126) {
    n = bytes[0] - 63;
    pos = 1;
  } else if (bytes.size() >= 2 && bytes[1] == 126) {
    throw ParseError("graph6: orders above " + std::to_string(kGraph6MaxOrder) +
                     " are not supported");
  } else {
    if (bytes.size() < 4) throw ParseError("graph6: truncated order header");
    n = (static_cast<long long>(bytes[1] - 63) << 12) | ((bytes[2] - 63) << 6) |
        (bytes[3] - 63);
    if (n < 63) throw ParseError("graph6: non-canonical order header");
    pos = 4;
  }

  const long long bits = n * (n - 1) / 2;
  const long long need = (bits + 5) / 6;
  const long long have = static_cast<long long>(bytes.size() - pos);
  if (have < need) throw ParseError("graph6: truncated adjacency data");
  if (have > need) throw ParseError("graph6: trailing garbage after adjacency data");

  GraphBuilder b(static_cast<int>(n));
  long long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = bytes[pos + static_cast<std::size_t>(k / 6)] - 63;
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = bytes.back() - 63;
    const int pad = static_cast<int>(6 - bits % 6);
    if (last & ((1 << pad) - 1)) throw ParseError("graph6: bit set beyond the triangle");
  }
  return std::move(b).build();
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph from_edge_list_text(std::string_view text) {
  int declared = -1;
  int max_endpoint = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    long long vals[3];
    int count = 0;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    while (p < end) {
      while (p < end && (*p == ' ' || *p == '\t' || *p == ',')) ++p;
      if (p == end) break;
      if (count == 3) throw ParseError("edge list line " + std::to_string(line_no) + ": too many fields");
      auto [next, ec] = std::from_chars(p, end, vals[count]);
      if (ec != std::errc{} || (next < end && *next != ' ' && *next != '\t' && *next != ','))
        throw ParseError("edge list line " + std::to_string(line_no) + ": expected integers");
      ++count;
      p = next;
    }
    if (count == 1) {
      if (declared >= 0 || !edges.empty())
        throw ParseError("edge list line " + std::to_string(line_no) +
                         ": vertex count must appear once, before any edge");
      if (vals[0] < 0 || vals[0] > (1LL << 30))
        throw ParseError("edge list: vertex count out of range");
      declared = static_cast<int>(vals[0]);
    } else if (count == 2) {
      if (vals[0] < 0 || vals[1] < 0 || vals[0] > (1LL << 30) || vals[1] > (1LL << 30))
        throw ParseError("edge list line " + std::to_string(line_no) + ": negative or huge vertex");
      edges.emplace_back(static_cast<Vertex>(vals[0]), static_cast<Vertex>(vals[1]));
      max_endpoint = std::max<int>(max_endpoint, static_cast<int>(std::max(vals[0], vals[1])));
    } else {
      throw ParseError("edge list line " + std::to_string(line_no) + ": expected \"u v\"");
    }
  }
  const int n = declared >= 0 ? declared : max_endpoint + 1;
  try {
    return Graph::from_edges(n, edges);
  } catch (const ParseError&) {
    throw;
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

Graph parse_graph_auto(std::string_view text) {
  std::string_view rest = text;
  while (!rest.empty()) {
    auto nl = rest.find('\n');
    std::string_view line = trim(rest.substr(0, nl));
    rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
    if (line.empty()) continue;
    std::string_view body = line;
    if (body.starts_with(kGraph6Header)) body.remove_prefix(sizeof(kGraph6Header) - 1);
    if (!body.empty() && std::all_of(body.begin(), body.end(), is_graph6_byte)) {
      if (!trim(rest).empty()) throw ParseError("graph6: expected a single graph");
      return from_graph6(line);
    }
    break;
  }
  return from_edge_list_text(text);
}

}  // namespace turanpack
