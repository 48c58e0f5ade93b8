#pragma once

#include <stdexcept>
#include <string>

namespace polybraid {

enum class errc {
  invalid_argument,  // precondition on a value (bad n, k, index, ...)
  mode_mismatch,     // semigroup word where a group word is required, or mixed
  arity_mismatch,    // wrong number of entries / matrices / indices
  shape_mismatch,    // shift class or arity disagreement between matrices
  parse_error,       // malformed text input
  limit_exceeded,    // enumeration guard or configured bound
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace polybraid
