#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tgx/instance_classes.hpp"
#include "tgx/temporal_graph.hpp"
#include "tgx/walk.hpp"

namespace tgx {

struct ParseError : Error {
  ParseError(int line_number, const std::string& message)
      : Error("line " + std::to_string(line_number) + ": " + message),
        line(line_number) {}
  int line;
};

struct LoadedGraph {
  TemporalGraph graph;
  std::vector<std::string> warnings;  // e.g. timesteps with no active edge
};

// TG1: header "TG1 <n> <T> <directed:0|1>", then one "<t> <u> <v>" line per
// activation in any order. '#' starts a comment line; blank lines ignored.
LoadedGraph read_tg1(std::istream& in);
LoadedGraph load_tg1(const std::string& path);
void write_tg1(std::ostream& out, const TemporalGraph& g);  // sorted by (t,u,v)
std::string to_tg1(const TemporalGraph& g);

// TW1: header "TW1 <start>", then "<t> <u> <v>" lines in step order.
TemporalWalk read_tw1(std::istream& in);
TemporalWalk load_tw1(const std::string& path);
void write_tw1(std::ostream& out, const TemporalWalk& walk);
std::string to_tw1(const TemporalWalk& walk);

struct RouteFile {
  Vertex n{};
  std::vector<Route> routes;
};

// RT1: header "RT1 <n> <num-routes>", then per route a "ROUTE <L>" line
// followed by "<offset> <u> <v>" step lines with strictly increasing offsets;
// L must equal the final offset.
RouteFile read_rt1(std::istream& in);
RouteFile load_rt1(const std::string& path);
void write_rt1(std::ostream& out, const RouteFile& file);
std::string to_rt1(const RouteFile& file);

}  // namespace tgx
