#pragma once

#include <stdexcept>
#include <string>

namespace bifree {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define BIFREE_DEFINE_ERROR(Name)                                                     \
  class Name : public Error {                                                         \
   public:                                                                            \
    explicit Name(const std::string& what) : Error(std::string(#Name ": ") + what) {} \
  }

BIFREE_DEFINE_ERROR(ParseError);
BIFREE_DEFINE_ERROR(ZeroConstantTerm);
BIFREE_DEFINE_ERROR(NotInvertible);
BIFREE_DEFINE_ERROR(NonzeroConstantSubstitution);
BIFREE_DEFINE_ERROR(OrderTooSmall);
BIFREE_DEFINE_ERROR(BadNormalization);
BIFREE_DEFINE_ERROR(BoxMismatch);
BIFREE_DEFINE_ERROR(FactorMismatch);
BIFREE_DEFINE_ERROR(TruncationUnsound);
BIFREE_DEFINE_ERROR(CapExceeded);
BIFREE_DEFINE_ERROR(UnsupportedIndexSets);
BIFREE_DEFINE_ERROR(NotRank1);

#undef BIFREE_DEFINE_ERROR

}  // namespace bifree
