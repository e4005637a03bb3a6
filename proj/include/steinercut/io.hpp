#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "steinercut/graph.hpp"

namespace stc {

// Extended DIMACS: "p steiner <n> <m>", edge lines "e <u> <v> <w>"
// (1-indexed, no self-loops, positive weights), terminal lines "t <v>".
// Comment lines start with 'c'.
Graph parse_dimacs(const std::string& text);
std::string emit_dimacs(const Graph& g);
Graph load_dimacs_file(const std::string& path);

// Deterministic splitmix64 stream; all generator randomness comes from
// here so a seed pins the instance bit-for-bit.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

private:
  std::uint64_t state_;
};

struct GenSpec {
  std::string family;  // dumbbell | clique | grid | random_gnm | planted_cut
  std::map<std::string, std::int64_t> params;
};

struct Generated {
  Graph graph;
  std::optional<Weight> known_lambda;
};

Generated generate(const GenSpec& spec, std::uint64_t seed);

struct RunStats {
  std::int64_t flow_calls_individual = 0;
  std::int64_t flow_calls_batched_by_level = 0;
  std::vector<std::size_t> rounds_per_game;
  std::size_t recursion_depth = 0;
  std::int64_t wall_time_ms = 0;
  Weight result_value = 0;
};

}  // namespace stc
