#pragma once

#include <stdexcept>
#include <string>

namespace burstcodes {

// Malformed textual input or a string that is not in the image of an
// encoder (bad marker framing, out-of-range serialized residue, ...).
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// No reconstruction consistent with the received word and the declared
// code parameters exists.
class DecodeFailure : public std::runtime_error {
 public:
  explicit DecodeFailure(const std::string& what) : std::runtime_error(what) {}
};

// Two distinct reconstructions verified. This cannot happen for a code
// instance whose balls are disjoint, so it indicates a broken instance
// (or a bug) and is deliberately loud.
class AmbiguityError : public std::logic_error {
 public:
  explicit AmbiguityError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace burstcodes
