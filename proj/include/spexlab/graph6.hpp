#ifndef SPEXLAB_GRAPH6_HPP
#define SPEXLAB_GRAPH6_HPP

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab {

/// Malformed graph6 input; offset is the byte position of the first bad byte.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, size_t offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

/// Encode in graph6: N(n) size prefix followed by the upper triangle,
/// column by column, six bits per byte, each byte offset by 63.
std::string encode_graph6(const Graph& g);

/// Decode one graph6 record (trailing newline tolerated).
Graph decode_graph6(std::string_view record);

/// Read all records of a newline-delimited graph6 stream. Blank lines and
/// a leading ">>graph6<<" header are skipped. Malformed records are counted
/// in bad_records (if given) and otherwise ignored.
std::vector<Graph> read_graph6_stream(std::istream& in, size_t* bad_records = nullptr);

}  // namespace spexlab

#endif  // SPEXLAB_GRAPH6_HPP
