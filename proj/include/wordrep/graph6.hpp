// SPDX-License-Identifier: Apache-2.0
//
// graph6 text encoding (short form only, n <= 62).

#ifndef WORDREP_GRAPH6_HPP
#define WORDREP_GRAPH6_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wordrep/graph.hpp"

namespace wordrep {

inline constexpr int kGraph6MaxOrder = 62;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Decodes one graph6 line. A trailing newline / carriage return is
/// tolerated; the optional ">>graph6<<" header is not.
Graph parse_graph6(std::string_view text);

std::string write_graph6(const Graph& g);

}  // namespace wordrep

#endif  // WORDREP_GRAPH6_HPP
