#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace preproj {

// Bad input: unknown Dynkin type, malformed braid word, out-of-range index.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A size guard tripped (group enumeration, oracle algebra size).
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::size_t partial_count)
      : std::runtime_error(what), partial_count_(partial_count) {}

  std::size_t partial_count() const { return partial_count_; }

 private:
  std::size_t partial_count_;
};

// A computed object violated a structural invariant.
class InvariantFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace preproj
