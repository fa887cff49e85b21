#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rvd {

/// Malformed textual input (graph6 records, edge lists, coloring strings).
/// `offset()` is the zero-based byte position of the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// An operation was called outside its mathematical domain
/// (x == y, disconnected input where connectivity is required, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The exact solver refused a graph larger than its configured cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::size_t n, std::size_t cap)
      : std::runtime_error("graph order " + std::to_string(n) +
                           " exceeds exact-search cap " + std::to_string(cap)),
        n_(n),
        cap_(cap) {}

  std::size_t order() const noexcept { return n_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t n_;
  std::size_t cap_;
};

}  // namespace rvd
