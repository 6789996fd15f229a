#include "cyclechain/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "cyclechain/errors.hpp"

namespace cyclechain {

namespace {

bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

int parse_int_token(std::istringstream& in, const char* what, int line_no) {
  long long x;
  if (!(in >> x)) throw input_error(std::string("expected ") + what, line_no);
  if (x < -1000000 || x > 1000000) throw input_error(std::string(what) + " out of range", line_no);
  return static_cast<int>(x);
}

void require_line_end(std::istringstream& in, int line_no) {
  std::string rest;
  if (in >> rest) throw input_error("trailing data: " + rest, line_no);
}

std::string chop(const std::string& line) {
  std::size_t end = line.size();
  while (end > 0 && (line[end - 1] == '\r' || line[end - 1] == '\n' || line[end - 1] == ' ' ||
                     line[end - 1] == '\t'))
    --end;
  return line.substr(0, end);
}

}  // namespace

Graph parse_edge_list(const std::string& text, std::string label) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    std::istringstream row(line);
    if (n < 0) {
      n = parse_int_token(row, "vertex count", line_no);
      m = parse_int_token(row, "edge count", line_no);
      require_line_end(row, line_no);
      if (n < 0 || n > Graph::max_vertices) throw input_error("vertex count out of range", line_no);
      if (m < 0) throw input_error("edge count out of range", line_no);
      continue;
    }
    if (static_cast<int>(edges.size()) == m) throw input_error("more edge lines than declared", line_no);
    int u = parse_int_token(row, "endpoint", line_no);
    int v = parse_int_token(row, "endpoint", line_no);
    require_line_end(row, line_no);
    if (u < 0 || u >= n || v < 0 || v >= n) throw input_error("endpoint out of range", line_no);
    if (u == v) throw input_error("self-loop", line_no);
    edges.emplace_back(u, v);
  }
  if (n < 0) throw input_error("empty edge list input");
  if (static_cast<int>(edges.size()) != m)
    throw input_error("declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return Graph::from_edges(n, edges, std::move(label));
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph6(const std::string& line, std::string label) {
  std::string s = chop(line);
  if (s.empty()) throw input_error("empty graph6 line");
  std::size_t pos = 0;
  long long n;
  if (s[0] == '~') {
    if (s.size() >= 2 && s[1] == '~') throw input_error("graph6 vertex count exceeds 64");
    if (s.size() < 4) throw input_error("truncated graph6 long-form vertex count");
    n = 0;
    for (pos = 1; pos <= 3; ++pos) {
      int b = static_cast<unsigned char>(s[pos]) - 63;
      if (b < 0 || b > 63) throw input_error("invalid graph6 byte");
      n = (n << 6) | b;
    }
  } else {
    int b = static_cast<unsigned char>(s[0]) - 63;
    if (b < 0 || b > 62) throw input_error("invalid graph6 byte");
    n = b;
    pos = 1;
  }
  if (n > Graph::max_vertices) throw input_error("graph6 vertex count exceeds 64: " + std::to_string(n));
  int nv = static_cast<int>(n);
  long long bits = static_cast<long long>(nv) * (nv - 1) / 2;
  long long bytes = (bits + 5) / 6;
  if (static_cast<long long>(s.size()) - static_cast<long long>(pos) < bytes)
    throw input_error("truncated graph6 edge data");
  if (static_cast<long long>(s.size()) - static_cast<long long>(pos) > bytes)
    throw input_error("trailing data after graph6 edge bits");
  std::vector<std::pair<int, int>> edges;
  long long bit = 0;
  for (int j = 1; j < nv; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int b = static_cast<unsigned char>(s[pos + static_cast<std::size_t>(bit / 6)]) - 63;
      if (b < 0 || b > 63) throw input_error("invalid graph6 byte");
      if ((b >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  for (long long pad = bit; pad < bytes * 6; ++pad) {
    int b = static_cast<unsigned char>(s[pos + static_cast<std::size_t>(pad / 6)]) - 63;
    if (b < 0 || b > 63) throw input_error("invalid graph6 byte");
    if ((b >> (5 - pad % 6)) & 1) throw input_error("nonzero graph6 padding bits");
  }
  return Graph::from_edges(nv, edges, std::move(label));
}

std::string to_graph6(const Graph& g) {
  int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

namespace {

std::string basename_no_ext(const std::string& path) {
  std::size_t slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  std::size_t dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

}  // namespace

std::vector<Graph> read_graph_file(const std::string& path) {
  std::size_t dot = path.find_last_of('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot);
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  std::string base = basename_no_ext(path);
  if (ext == ".g6") {
    std::vector<std::string> lines;
    std::string line;
    int line_no = 0;
    std::vector<int> line_nos;
    while (std::getline(in, line)) {
      ++line_no;
      if (chop(line).empty()) continue;
      lines.push_back(line);
      line_nos.push_back(line_no);
    }
    std::vector<Graph> out;
    for (std::size_t k = 0; k < lines.size(); ++k) {
      std::string label = lines.size() == 1 ? base : base + "#" + std::to_string(k + 1);
      try {
        out.push_back(parse_graph6(lines[k], std::move(label)));
      } catch (const input_error& e) {
        throw input_error(e.what() + std::string(" (") + path + " line " + std::to_string(line_nos[k]) + ")");
      }
    }
    if (out.empty()) throw input_error("no graphs in file: " + path);
    return out;
  }
  if (ext == ".txt") {
    std::stringstream buf;
    buf << in.rdbuf();
    return {parse_edge_list(buf.str(), base)};
  }
  throw input_error("unsupported file extension (expected .g6 or .txt): " + path);
}

}  // namespace cyclechain
