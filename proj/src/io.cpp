#include "linres/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "linres/error.hpp"

namespace linres {

namespace {

struct RawEdge {
  std::vector<std::string> labels;
  int line;
};

[[noreturn]] void fail(int line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long> as_integer(const std::string& token) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

int parse_count(const std::string& token, int line, const char* what) {
  auto value = as_integer(token);
  if (!value || *value < 0 || *value > 1'000'000) fail(line, std::string("bad ") + what + " '" + token + "'");
  return static_cast<int>(*value);
}

}  // namespace

ParsedInput parse_input(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int header_line = 0;
  int n = -1;
  int m = 2;
  std::vector<RawEdge> raw;

  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (n < 0) {
      header_line = line_no;
      if (tokens.size() == 2 && tokens[0] == "n") {
        n = parse_count(tokens[1], line_no, "vertex count");
      } else if (tokens.size() == 4 && tokens[0] == "n" && tokens[2] == "m") {
        n = parse_count(tokens[1], line_no, "vertex count");
        m = parse_count(tokens[3], line_no, "uniformity");
      } else {
        fail(line_no, "expected header 'n <count>' or 'n <count> m <uniformity>'");
      }
      continue;
    }
    if (static_cast<int>(tokens.size()) != m) {
      fail(line_no, "expected " + std::to_string(m) + " vertex labels, found " + std::to_string(tokens.size()));
    }
    raw.push_back({std::move(tokens), line_no});
  }
  if (n < 0) fail(line_no + 1, "missing header");
  if (m < 1) fail(header_line, "uniformity " + std::to_string(m) + " must be positive");
  if (m > n && !raw.empty()) {
    fail(raw.front().line, "an edge of size " + std::to_string(m) + " needs at least that many vertices");
  }

  std::set<std::string> distinct;
  bool identity = true;
  for (const auto& e : raw) {
    for (const auto& label : e.labels) {
      distinct.insert(label);
      auto v = as_integer(label);
      if (!v || *v < 1 || *v > n || std::to_string(*v) != label) identity = false;
    }
  }

  ParsedInput out{UniformHypergraph(n, m, {}), {}, !identity};
  std::map<std::string, Vertex> index;
  if (identity) {
    for (int v = 1; v <= n; ++v) {
      out.labels.push_back(std::to_string(v));
      index[out.labels.back()] = v;
    }
  } else {
    if (static_cast<int>(distinct.size()) > n) {
      fail(header_line, "edges use " + std::to_string(distinct.size()) + " distinct labels but n = " +
                            std::to_string(n));
    }
    std::vector<std::string> ordered(distinct.begin(), distinct.end());
    bool numeric = std::all_of(ordered.begin(), ordered.end(), [](const auto& s) { return as_integer(s).has_value(); });
    if (numeric) {
      std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return *as_integer(a) < *as_integer(b); });
    }
    for (const auto& label : ordered) {
      out.labels.push_back(label);
      index[label] = static_cast<Vertex>(out.labels.size());
    }
    while (static_cast<int>(out.labels.size()) < n) out.labels.push_back("_" + std::to_string(out.labels.size() + 1));
  }

  std::map<VertexList, int> seen;
  std::vector<VertexList> edges;
  for (const auto& e : raw) {
    VertexList edge;
    for (const auto& label : e.labels) edge.push_back(index.at(label));
    std::sort(edge.begin(), edge.end());
    if (std::adjacent_find(edge.begin(), edge.end()) != edge.end()) fail(e.line, "edge repeats a vertex");
    auto [it, inserted] = seen.emplace(edge, e.line);
    if (!inserted) fail(e.line, "duplicate edge (first given on line " + std::to_string(it->second) + ")");
    edges.push_back(std::move(edge));
  }
  out.hypergraph = UniformHypergraph(n, m, std::move(edges));
  return out;
}

ParsedInput read_input_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_input(buffer.str());
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.n() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string format_hypergraph(const UniformHypergraph& h) {
  std::ostringstream out;
  out << "n " << h.n() << " m " << h.m() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t k = 0; k < e.size(); ++k) out << (k ? " " : "") << e[k];
    out << '\n';
  }
  return out.str();
}

}  // namespace linres
