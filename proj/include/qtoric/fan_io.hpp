// Plain-text serialization of fans with named support functions.
//
//   # comment
//   dim 2
//   rays
//   1 0
//   0 1
//   -1 -1
//   cones          (1-based ray indices, one maximal cone per line)
//   1 2
//   2 3
//   3 1
//   pl ample 1 1 1
//
// Values are exact integers / rationals (p/q); no floating point.
#pragma once

#include <string>
#include <utility>

#include "qtoric/pl.hpp"

namespace qtoric {

struct FanDocument {
  Fan fan;
  std::vector<std::pair<std::string, PLFunction>> pl_functions;

  const PLFunction* find_pl(const std::string& name) const;
};

// Errors: ParseError (with the line number) for malformed input; construction errors
// from make_fan for well-formed input describing a bad fan.
FanDocument parse_fan_document(const std::string& text, const Exec& exec = {});
FanDocument load_fan_file(const std::string& path, const Exec& exec = {});

std::string write_fan_document(const FanDocument& doc);

}  // namespace qtoric
