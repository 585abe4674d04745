#ifndef RAMSEYPACK_IO_HPP
#define RAMSEYPACK_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ramseypack/pattern.hpp"

namespace ramseypack {

/// Parse failure with position information. `where` is "line" or
/// "line:column" within the stream being read.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& where, const std::string& what)
        : std::runtime_error(where + ": " + what) {}
};

// graph6: canonical bit-exact encoding (McKay). Handles all three size
// headers (1, 4 and 8 bytes). Reading accepts an optional ">>graph6<<"
// prefix and ignores a trailing newline.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& line);

// Plain text edge list: "n m" then m lines "u v", 0-based.
std::string to_edge_list(const Graph& g);
Graph graph_from_stream(std::istream& in); // edge list
Graph read_graph_file(const std::string& path); // auto-detects graph6 / edge list

// Colour pattern container:
//   pattern <n> <r>
//   layer 1 <m1>
//   u v
//   ...
//   layer r <mr>
//   ...
std::string to_container(const ColourPattern& p);
ColourPattern pattern_from_stream(std::istream& in);
ColourPattern read_pattern_file(const std::string& path);

void write_file(const std::string& path, const std::string& content);

} // namespace ramseypack

#endif
