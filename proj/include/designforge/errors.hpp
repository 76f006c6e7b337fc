#pragma once

#include <stdexcept>
#include <string>

namespace designforge {

/// Broad failure categories; the CLI maps these onto process exit codes.
enum class ErrorKind {
  Input,     // malformed input, bad parameters
  Budget,    // a configured cap was exceeded
  Internal,  // a computed structure contradicts an invariant that must hold
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define DESIGNFORGE_DEFINE_ERROR(Name, Kind)                  \
  class Name : public Error {                                 \
   public:                                                    \
    explicit Name(const std::string& what)                    \
        : Error(ErrorKind::Kind, #Name ": " + what) {}        \
  };

DESIGNFORGE_DEFINE_ERROR(InvalidPermutation, Input)
DESIGNFORGE_DEFINE_ERROR(InvalidGenerators, Input)
DESIGNFORGE_DEFINE_ERROR(InvalidArgument, Input)
DESIGNFORGE_DEFINE_ERROR(InvalidField, Input)
DESIGNFORGE_DEFINE_ERROR(DivisionByZero, Input)
DESIGNFORGE_DEFINE_ERROR(ParseError, Input)
DESIGNFORGE_DEFINE_ERROR(NotASubgroupElement, Input)
DESIGNFORGE_DEFINE_ERROR(NotFound, Input)
DESIGNFORGE_DEFINE_ERROR(NonUniformBlockSize, Input)
DESIGNFORGE_DEFINE_ERROR(NonUniformReplication, Input)
DESIGNFORGE_DEFINE_ERROR(OrbitOverflow, Budget)
DESIGNFORGE_DEFINE_ERROR(BudgetExceeded, Budget)
DESIGNFORGE_DEFINE_ERROR(PartitionViolation, Internal)
DESIGNFORGE_DEFINE_ERROR(InternalInconsistency, Internal)

#undef DESIGNFORGE_DEFINE_ERROR

}  // namespace designforge
