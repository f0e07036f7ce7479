#include "dpcover/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace dpcover {

namespace {

// Strips full-line comments and surrounding whitespace; empty result means
// the line carries nothing.
std::string clean_line(const std::string& raw) {
  std::string line = raw;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::size_t begin = line.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  if (line[begin] == '#') return "";
  std::size_t end = line.find_last_not_of(" \t");
  return line.substr(begin, end - begin + 1);
}

int parse_int(const std::string& token, int line_number) {
  int value = 0;
  const char* first = token.data();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError(line_number, "expected an integer, got '" + token + "'");
  return value;
}

std::vector<std::string> split_ws(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string token;
  while (is >> token) out.push_back(token);
  return out;
}

// "v: rest" split; the colon may touch the id.
std::pair<int, std::string> split_keyed_line(const std::string& line,
                                             int line_number) {
  const std::size_t colon = line.find(':');
  if (colon == std::string::npos)
    throw ParseError(line_number, "expected 'id: ...', got '" + line + "'");
  const std::string key = clean_line(line.substr(0, colon));
  if (key.empty() || split_ws(key).size() != 1)
    throw ParseError(line_number, "expected a single id before ':'");
  return {parse_int(key, line_number), line.substr(colon + 1)};
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  Graph g;
  std::string raw;
  int line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    const std::string line = clean_line(raw);
    if (line.empty()) continue;
    const auto tokens = split_ws(line);
    if (tokens.size() != 2)
      throw ParseError(line_number, "expected two vertex ids per edge line");
    const int u = parse_int(tokens[0], line_number);
    const int v = parse_int(tokens[1], line_number);
    if (u == v) throw ParseError(line_number, "self-loop at vertex " +
                                                  std::to_string(u));
    g.add_edge(u, v);
  }
  return g;
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file: " + path);
  return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream os;
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Cover parse_cover(std::istream& in, const Graph& host) {
  std::vector<std::pair<int, std::string>> lines;
  std::string raw;
  int line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    const std::string line = clean_line(raw);
    if (!line.empty()) lines.emplace_back(line_number, line);
  }
  std::size_t pos = 0;
  if (pos >= lines.size() || lines[pos].second != "lists")
    throw ParseError(pos < lines.size() ? lines[pos].first : line_number,
                     "cover file must start with a 'lists' section");
  ++pos;

  ListAssignment lists;
  while (pos < lines.size() && lines[pos].second != "matchings" &&
         lines[pos].second != "diagonal") {
    const auto& [number, line] = lines[pos];
    const auto [v, rest] = split_keyed_line(line, number);
    if (!host.has_vertex(v))
      throw ParseError(number, "vertex " + std::to_string(v) +
                                   " is not a host vertex");
    if (lists.lists.count(v))
      throw ParseError(number, "duplicate list for vertex " +
                                   std::to_string(v));
    std::vector<Color> colors;
    for (const auto& token : split_ws(rest))
      colors.push_back(parse_int(token, number));
    if (colors.empty())
      throw ParseError(number, "empty list at vertex " + std::to_string(v));
    for (std::size_t i = 1; i < colors.size(); ++i)
      if (colors[i - 1] >= colors[i])
        throw ParseError(number, "list at vertex " + std::to_string(v) +
                                     " must be strictly increasing");
    lists.lists[v] = std::move(colors);
    ++pos;
  }
  for (Vertex v : host.vertices())
    if (!lists.lists.count(v))
      throw ParseError(line_number,
                       "missing list for vertex " + std::to_string(v));

  if (pos >= lines.size())
    throw ParseError(line_number,
                     "expected a 'matchings' section or 'diagonal'");
  if (lines[pos].second == "diagonal") {
    if (pos + 1 != lines.size())
      throw ParseError(lines[pos + 1].first, "content after 'diagonal'");
    return diagonal_cover(host, lists);
  }
  ++pos;

  Cover h(host, lists);
  std::set<std::pair<Vertex, Vertex>> seen;
  for (; pos < lines.size(); ++pos) {
    const auto& [number, line] = lines[pos];
    const std::size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError(number, "expected 'u v: pairs', got '" + line + "'");
    const auto ids = split_ws(line.substr(0, colon));
    if (ids.size() != 2)
      throw ParseError(number, "expected two vertex ids before ':'");
    const int u = parse_int(ids[0], number);
    const int v = parse_int(ids[1], number);
    if (u >= v)
      throw ParseError(number, "matching lines must have u < v");
    if (!host.has_edge(u, v))
      throw ParseError(number, "no host edge " + std::to_string(u) + " " +
                                   std::to_string(v));
    if (!seen.insert({u, v}).second)
      throw ParseError(number, "duplicate matching line for edge " +
                                   std::to_string(u) + " " +
                                   std::to_string(v));
    std::vector<ColorPair> pairs;
    std::string chunk;
    std::istringstream rest(line.substr(colon + 1));
    while (std::getline(rest, chunk, ',')) {
      const std::string body = clean_line(chunk);
      if (body.empty())
        throw ParseError(number, "empty matched pair");
      const std::size_t arrow = body.find("->");
      if (arrow == std::string::npos)
        throw ParseError(number, "expected 'i->j', got '" + body + "'");
      const std::string left = clean_line(body.substr(0, arrow));
      const std::string right = clean_line(body.substr(arrow + 2));
      if (split_ws(left).size() != 1 || split_ws(right).size() != 1)
        throw ParseError(number, "expected 'i->j', got '" + body + "'");
      pairs.emplace_back(parse_int(left, number), parse_int(right, number));
    }
    try {
      h.set_matching(u, v, pairs);
    } catch (const Error& e) {
      throw ParseError(number, e.what());
    }
  }
  return h;
}

Cover load_cover_file(const std::string& path, const Graph& host) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open cover file: " + path);
  return parse_cover(in, host);
}

std::string format_cover(const Cover& h) {
  std::ostringstream os;
  os << "lists\n";
  for (const auto& [v, colors] : h.lists().lists) {
    os << v << ':';
    for (Color c : colors) os << ' ' << c;
    os << '\n';
  }
  os << "matchings\n";
  for (const auto& [edge, pairs] : h.matchings()) {
    if (pairs.empty()) continue;
    os << edge.first << ' ' << edge.second << ':';
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      os << (i ? ", " : " ") << pairs[i].first << "->" << pairs[i].second;
    }
    os << '\n';
  }
  return os.str();
}

CapacityMatrix parse_capacities(std::istream& in, const Graph& host) {
  CapacityMatrix fm;
  fm.colors = 0;
  std::string raw;
  int line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    const std::string line = clean_line(raw);
    if (line.empty()) continue;
    const auto [v, rest] = split_keyed_line(line, line_number);
    if (!host.has_vertex(v))
      throw ParseError(line_number, "vertex " + std::to_string(v) +
                                        " is not a host vertex");
    if (fm.rows.count(v))
      throw ParseError(line_number, "duplicate capacity row for vertex " +
                                        std::to_string(v));
    std::vector<int> row;
    for (const auto& token : split_ws(rest)) {
      const int value = parse_int(token, line_number);
      if (value < 0)
        throw ParseError(line_number, "negative capacity at vertex " +
                                          std::to_string(v));
      row.push_back(value);
    }
    if (row.empty())
      throw ParseError(line_number, "empty capacity row at vertex " +
                                        std::to_string(v));
    if (fm.colors == 0) fm.colors = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != fm.colors)
      throw ParseError(line_number, "capacity rows must share one length");
    fm.rows[v] = std::move(row);
  }
  for (Vertex v : host.vertices())
    if (!fm.rows.count(v))
      throw ParseError(line_number,
                       "missing capacity row for vertex " + std::to_string(v));
  if (fm.rows.empty())
    throw ParseError(line_number, "capacity file is empty");
  return fm;
}

CapacityMatrix load_capacities_file(const std::string& path,
                                    const Graph& host) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open capacity file: " + path);
  return parse_capacities(in, host);
}

std::string format_capacities(const CapacityMatrix& fm) {
  std::ostringstream os;
  for (const auto& [v, row] : fm.rows) {
    os << v << ':';
    for (int value : row) os << ' ' << value;
    os << '\n';
  }
  return os.str();
}

RepresentativeSet parse_representative_set(std::istream& in) {
  RepresentativeSet r;
  std::string raw;
  int line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    const std::string line = clean_line(raw);
    if (line.empty()) continue;
    const auto [v, rest] = split_keyed_line(line, line_number);
    const auto tokens = split_ws(rest);
    if (tokens.size() != 1)
      throw ParseError(line_number, "expected one color after ':'");
    if (r.picks.count(v))
      throw ParseError(line_number,
                       "duplicate pick for vertex " + std::to_string(v));
    r.picks[v] = parse_int(tokens[0], line_number);
  }
  return r;
}

std::string format_representative_set(const RepresentativeSet& r) {
  std::ostringstream os;
  for (const auto& [v, c] : r.picks) os << v << ": " << c << '\n';
  return os.str();
}

std::string format_outcome(const SolveOutcome& o) {
  std::ostringstream os;
  if (o.status == SolveOutcome::Status::Found) {
    os << "found\n";
    os << format_representative_set(o.solution);
    for (Vertex v : o.certificate.order) os << "peel " << v << '\n';
  } else {
    os << "infeasible\n";
    if (!o.certificate.witness.empty()) {
      os << "witness";
      for (Vertex v : o.certificate.witness) os << ' ' << v;
      os << '\n';
    }
  }
  return os.str();
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char byte : data) {
    hash ^= byte;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::uint64_t cover_hash(const Cover& h) { return fnv1a64(format_cover(h)); }

}  // namespace dpcover
