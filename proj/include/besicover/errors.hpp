#ifndef BESICOVER_ERRORS_HPP
#define BESICOVER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace besicover {

enum class Errc {
  ParseError,
  NotUltrametric,
  CoverIncomplete,
  RadiusOutOfRange,
  BoundViolated,
  PreconditionViolated,
  UnknownCase,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message) : std::runtime_error(message), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace besicover

#endif
