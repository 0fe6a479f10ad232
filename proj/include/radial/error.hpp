#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace radial {

enum class ErrorKind {
  kInvalidEdge,
  kDuplicateEdge,
  kOutOfBounds,
  kDetachedEdge,
  kUnknownNode,
  kConfig,
  kSaturation,
  kDegenerateGraph,
  kNotReached,
  kParse,
  kNoData,
  kIo,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace radial
