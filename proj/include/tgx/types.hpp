#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tgx {

using Vertex = std::int32_t;

// Oriented vertex pair. Undirected containers store the canonical form
// (smaller endpoint first); walks keep the traversal orientation.
struct Edge {
  Vertex u{};
  Vertex v{};

  friend auto operator<=>(const Edge&, const Edge&) = default;

  [[nodiscard]] Edge reversed() const { return {v, u}; }
  [[nodiscard]] Edge canonical() const { return u <= v ? *this : Edge{v, u}; }
  [[nodiscard]] bool is_loop() const { return u == v; }
};

// Packs an edge into a single map key. Vertices are non-negative and well
// below 2^32, so the two halves never collide.
inline std::uint64_t edge_key(Edge e) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.u)) << 32) |
         static_cast<std::uint32_t>(e.v);
}

inline std::string to_string(Edge e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

// Base class for all domain failures raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tgx
