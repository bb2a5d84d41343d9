#include "tgx/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace tgx {

namespace {

bool skippable(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

// Whitespace-separated tokens; every one must be an ASCII decimal integer.
std::vector<long long> parse_ints(const std::string& line, int lineno) {
  std::istringstream in(line);
  std::vector<long long> out;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      long long value = std::stoll(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(value);
    } catch (const std::exception&) {
      throw ParseError(lineno, "invalid integer '" + token + "'");
    }
  }
  return out;
}

struct LineReader {
  std::istream& in;
  int lineno = 0;

  // Next non-comment, non-blank line; false at end of input.
  bool next(std::string& line) {
    while (std::getline(in, line)) {
      ++lineno;
      if (!skippable(line)) return true;
    }
    return false;
  }
};

void check_vertex_range(long long v, long long n, int lineno) {
  if (v < 0 || v >= n)
    throw ParseError(lineno, "vertex " + std::to_string(v) + " outside [0," +
                                 std::to_string(n - 1) + "]");
}

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open file: " + path);
  return in;
}

}  // namespace

LoadedGraph read_tg1(std::istream& in) {
  LineReader reader{in};
  std::string line;
  if (!reader.next(line)) throw ParseError(reader.lineno, "missing TG1 header");

  std::istringstream header(line);
  std::string tag;
  header >> tag;
  if (tag != "TG1") throw ParseError(reader.lineno, "expected TG1 header");
  auto fields = parse_ints(line.substr(line.find(tag) + tag.size()), reader.lineno);
  if (fields.size() != 3)
    throw ParseError(reader.lineno, "expected 'TG1 <n> <T> <directed>'");
  const long long n = fields[0], lifetime = fields[1], directed = fields[2];
  if (n < 1) throw ParseError(reader.lineno, "vertex count must be >= 1");
  if (lifetime < 1) throw ParseError(reader.lineno, "lifetime must be >= 1");
  if (lifetime > 10'000'000) throw ParseError(reader.lineno, "lifetime too large");
  if (directed != 0 && directed != 1)
    throw ParseError(reader.lineno, "directed flag must be 0 or 1");

  std::vector<std::vector<Edge>> snapshots(static_cast<std::size_t>(lifetime));
  while (reader.next(line)) {
    auto ints = parse_ints(line, reader.lineno);
    if (ints.size() != 3)
      throw ParseError(reader.lineno, "expected '<t> <u> <v>'");
    const long long t = ints[0];
    if (t < 1 || t > lifetime)
      throw ParseError(reader.lineno, "timestep " + std::to_string(t) +
                                          " outside [1," +
                                          std::to_string(lifetime) + "]");
    check_vertex_range(ints[1], n, reader.lineno);
    check_vertex_range(ints[2], n, reader.lineno);
    snapshots[static_cast<std::size_t>(t - 1)].push_back(
        {static_cast<Vertex>(ints[1]), static_cast<Vertex>(ints[2])});
  }

  LoadedGraph loaded{TemporalGraph(static_cast<Vertex>(n), directed == 1,
                                   std::move(snapshots), {.allow_self_loops = true}),
                     {}};
  for (int t = 1; t <= loaded.graph.lifetime(); ++t)
    if (loaded.graph.snapshot(t).empty())
      loaded.warnings.push_back("timestep " + std::to_string(t) +
                                " has no active edges");
  return loaded;
}

LoadedGraph load_tg1(const std::string& path) {
  auto in = open_file(path);
  return read_tg1(in);
}

void write_tg1(std::ostream& out, const TemporalGraph& g) {
  out << "TG1 " << g.num_vertices() << ' ' << g.lifetime() << ' '
      << (g.directed() ? 1 : 0) << '\n';
  for (int t = 1; t <= g.lifetime(); ++t)
    for (Edge e : g.snapshot(t))
      out << t << ' ' << e.u << ' ' << e.v << '\n';
}

std::string to_tg1(const TemporalGraph& g) {
  std::ostringstream out;
  write_tg1(out, g);
  return out.str();
}

TemporalWalk read_tw1(std::istream& in) {
  LineReader reader{in};
  std::string line;
  if (!reader.next(line)) throw ParseError(reader.lineno, "missing TW1 header");

  std::istringstream header(line);
  std::string tag;
  header >> tag;
  if (tag != "TW1") throw ParseError(reader.lineno, "expected TW1 header");
  auto fields = parse_ints(line.substr(line.find(tag) + tag.size()), reader.lineno);
  if (fields.size() != 1)
    throw ParseError(reader.lineno, "expected 'TW1 <start-vertex>'");
  if (fields[0] < 0)
    throw ParseError(reader.lineno, "start vertex must be >= 0");

  TemporalWalk walk{static_cast<Vertex>(fields[0]), {}};
  while (reader.next(line)) {
    auto ints = parse_ints(line, reader.lineno);
    if (ints.size() != 3)
      throw ParseError(reader.lineno, "expected '<t> <u> <v>'");
    if (ints[0] < 1) throw ParseError(reader.lineno, "timestep must be >= 1");
    if (ints[1] < 0 || ints[2] < 0)
      throw ParseError(reader.lineno, "vertices must be >= 0");
    walk.steps.push_back({{static_cast<Vertex>(ints[1]), static_cast<Vertex>(ints[2])},
                          static_cast<int>(ints[0])});
  }
  return walk;
}

TemporalWalk load_tw1(const std::string& path) {
  auto in = open_file(path);
  return read_tw1(in);
}

void write_tw1(std::ostream& out, const TemporalWalk& walk) {
  out << "TW1 " << walk.start << '\n';
  for (const TemporalStep& s : walk.steps)
    out << s.time << ' ' << s.edge.u << ' ' << s.edge.v << '\n';
}

std::string to_tw1(const TemporalWalk& walk) {
  std::ostringstream out;
  write_tw1(out, walk);
  return out.str();
}

RouteFile read_rt1(std::istream& in) {
  LineReader reader{in};
  std::string line;
  if (!reader.next(line)) throw ParseError(reader.lineno, "missing RT1 header");

  std::istringstream header(line);
  std::string tag;
  header >> tag;
  if (tag != "RT1") throw ParseError(reader.lineno, "expected RT1 header");
  auto fields = parse_ints(line.substr(line.find(tag) + tag.size()), reader.lineno);
  if (fields.size() != 2)
    throw ParseError(reader.lineno, "expected 'RT1 <n> <num-routes>'");
  if (fields[0] < 1) throw ParseError(reader.lineno, "vertex count must be >= 1");
  if (fields[1] < 1) throw ParseError(reader.lineno, "route count must be >= 1");

  RouteFile file;
  file.n = static_cast<Vertex>(fields[0]);
  const long long declared_routes = fields[1];

  Route current;
  long long declared_period = 0;
  int route_header_line = 0;
  bool open = false;

  auto finalize = [&]() {
    if (!open) return;
    if (current.walk.steps.empty())
      throw ParseError(route_header_line, "route has no steps");
    if (current.period() != declared_period)
      throw ParseError(route_header_line,
                       "declared period " + std::to_string(declared_period) +
                           " does not match final offset " +
                           std::to_string(current.period()));
    if (!current.walk.is_chained())
      throw ParseError(route_header_line, "route steps do not chain");
    file.routes.push_back(std::move(current));
    current = Route{};
    open = false;
  };

  while (reader.next(line)) {
    std::istringstream first(line);
    std::string word;
    first >> word;
    if (word == "ROUTE") {
      finalize();
      auto ints = parse_ints(line.substr(line.find(word) + word.size()), reader.lineno);
      if (ints.size() != 1) throw ParseError(reader.lineno, "expected 'ROUTE <L>'");
      if (ints[0] < 1) throw ParseError(reader.lineno, "route period must be >= 1");
      declared_period = ints[0];
      route_header_line = reader.lineno;
      open = true;
      continue;
    }
    if (!open) throw ParseError(reader.lineno, "step line before any ROUTE line");
    auto ints = parse_ints(line, reader.lineno);
    if (ints.size() != 3)
      throw ParseError(reader.lineno, "expected '<offset> <u> <v>'");
    const long long offset = ints[0];
    if (offset < 1 || offset > declared_period)
      throw ParseError(reader.lineno, "offset outside [1," +
                                          std::to_string(declared_period) + "]");
    if (!current.walk.steps.empty() && offset <= current.walk.steps.back().time)
      throw ParseError(reader.lineno, "offsets must be strictly increasing");
    check_vertex_range(ints[1], file.n, reader.lineno);
    check_vertex_range(ints[2], file.n, reader.lineno);
    Edge e{static_cast<Vertex>(ints[1]), static_cast<Vertex>(ints[2])};
    if (current.walk.steps.empty()) current.walk.start = e.u;
    current.walk.steps.push_back({e, static_cast<int>(offset)});
  }
  finalize();
  if (static_cast<long long>(file.routes.size()) != declared_routes)
    throw ParseError(reader.lineno,
                     "header declares " + std::to_string(declared_routes) +
                         " routes, file has " + std::to_string(file.routes.size()));
  return file;
}

RouteFile load_rt1(const std::string& path) {
  auto in = open_file(path);
  return read_rt1(in);
}

void write_rt1(std::ostream& out, const RouteFile& file) {
  out << "RT1 " << file.n << ' ' << file.routes.size() << '\n';
  for (const Route& route : file.routes) {
    out << "ROUTE " << route.period() << '\n';
    for (const TemporalStep& s : route.walk.steps)
      out << s.time << ' ' << s.edge.u << ' ' << s.edge.v << '\n';
  }
}

std::string to_rt1(const RouteFile& file) {
  std::ostringstream out;
  write_rt1(out, file);
  return out.str();
}

}  // namespace tgx
