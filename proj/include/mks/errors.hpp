#pragma once

#include <stdexcept>
#include <string>

namespace mks {

/// Base of every library error. `kind()` is a stable identifier used in
/// reports and by the CLI to pick an exit status.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what) : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define MKS_DEFINE_ERROR(Name)                                          \
  class Name : public Error {                                           \
   public:                                                              \
    explicit Name(const std::string& what) : Error(#Name, what) {}      \
  };

MKS_DEFINE_ERROR(DegenerateInput)
MKS_DEFINE_ERROR(NotSymmetric)
MKS_DEFINE_ERROR(OriginNotInterior)
MKS_DEFINE_ERROR(ZeroDirection)
MKS_DEFINE_ERROR(UnknownBody)
MKS_DEFINE_ERROR(LambdaTooSmall)
MKS_DEFINE_ERROR(PointNotOnSphere)
MKS_DEFINE_ERROR(CurveDegenerate)
MKS_DEFINE_ERROR(CollinearPoint)
MKS_DEFINE_ERROR(EmptyComplex)
MKS_DEFINE_ERROR(ParseError)
MKS_DEFINE_ERROR(IoError)

#undef MKS_DEFINE_ERROR

}  // namespace mks
