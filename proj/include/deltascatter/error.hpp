#pragma once

#include <stdexcept>
#include <string>

namespace deltascatter {

enum class ErrorKind {
  kDomain,           // non-physical input (E <= 0, k <= 0, non-finite values)
  kOrdering,         // positions not strictly increasing / below minimum gap
  kSingular,         // dense linear system numerically singular
  kDegenerate,       // transfer matrix with |m22| ~ 0
  kPole,             // closed form evaluated at a pole
  kInvalidArgument,  // malformed request (sizes, ranges, counts)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace deltascatter
