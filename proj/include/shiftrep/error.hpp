#ifndef SHIFTREP_ERROR_HPP_
#define SHIFTREP_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shiftrep {

// Invalid family parameters or malformed arguments. The CLI maps this to a
// usage error.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Inputs that are well-formed but exceed a configured size limit.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Graph6, JSON or word text that cannot be parsed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at offset " + std::to_string(offset) +
                           ")"),
        offset_(offset) {}

  [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace shiftrep

#endif  // SHIFTREP_ERROR_HPP_
