#ifndef KRON_EDGE_LIST_HPP_
#define KRON_EDGE_LIST_HPP_

#include <iosfwd>
#include <string>

#include "kron/core_model.hpp"

namespace kron {

// Edge-list text format:
//
//   kron n=<n> alpha=<a> beta=<b> gamma=<g> loops=<0|1>
//   <u> <v>
//   ...
//
// Vertices are zero-padded binary strings of length n written most
// significant digit first, so lexicographic and numeric order agree. Each
// line has u <= v; a loop is written `v v`. Lines are sorted.
void write_edge_list(std::ostream& out, const SampledGraph& g);

// Throws FormatError on malformed input.
[[nodiscard]] SampledGraph read_edge_list(std::istream& in);

[[nodiscard]] std::string vertex_to_binary(Vertex v, unsigned n);
[[nodiscard]] Vertex vertex_from_binary(const std::string& text, unsigned n);

}  // namespace kron

#endif  // KRON_EDGE_LIST_HPP_
