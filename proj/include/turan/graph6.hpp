#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "turan/graph.hpp"

namespace turan {

struct Graph6Error : std::runtime_error {
  std::size_t offset;  // byte position of the offending character
  Graph6Error(const std::string& msg, std::size_t off)
      : std::runtime_error(msg + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

// Standard graph6 encoding (nauty formats.txt), orders 0..64.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view s);

}  // namespace turan
