#ifndef QSPEC_ERRORS_HPP
#define QSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qspec {

  // Root of every error raised by the library. Errors that "signal a bug"
  // (MirrorNormalization, NonIntegerEuler, ...) are thrown the same way as
  // input errors; callers that need a verdict instead of an exception go
  // through verify_instance().
  class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
  };

#define QSPEC_DEFINE_ERROR(Name)              \
  class Name : public Error {                 \
  public:                                     \
    using Error::Error;                       \
  }

  // exactmath
  QSPEC_DEFINE_ERROR(DivisionByZero);
  QSPEC_DEFINE_ERROR(ZeroConstantTerm);
  QSPEC_DEFINE_ERROR(OrderExceeded);

  // variety (InvalidInstance lives in variety.hpp, it carries a reason code)
  QSPEC_DEFINE_ERROR(NonIntegerEuler);
  QSPEC_DEFINE_ERROR(NegativePrimitiveDim);

  // gw
  QSPEC_DEFINE_ERROR(MirrorNormalization);
  QSPEC_DEFINE_ERROR(IndexRange);

  // spectrum
  QSPEC_DEFINE_ERROR(NotCaseThree);
  QSPEC_DEFINE_ERROR(ZeroPrimitiveDim);
  QSPEC_DEFINE_ERROR(LambdaMismatch);
  QSPEC_DEFINE_ERROR(CharPolyMismatch);

#undef QSPEC_DEFINE_ERROR

} // namespace qspec

#endif // QSPEC_ERRORS_HPP
