#ifndef PATHALG_ERROR_HPP
#define PATHALG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pathalg {

enum class ErrorCode {
  kParse,
  kCompositionMismatch,
  kZeroElement,
  kInhomogeneousInput,
  kNotAntichain,
  kMixedDegreeInput,
  kWrongDegreeProfile,
  kTruncatedRow,
  kIncompleteBasis,
  kInvalidArgument,
  kInternal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace pathalg

#endif
