#pragma once

#include <stdexcept>
#include <string>

namespace zonal {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid mathematical input: parameters out of range, t outside [-1,1], ...
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Requested geometric operation has no point model (Cayley plane) or the
// space/point combination is inconsistent.
class UnsupportedSpace : public Error {
 public:
  using Error::Error;
};

// A resource cap was exceeded: degree cap, lcm overflow, construction size.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Kernel specification rejected by validation.
class ValidationError : public Error {
 public:
  enum class Code { NegativeCoefficient, DuplicateIndex, NonSummable, BadSupport };

  ValidationError(Code code, long index, const std::string& what)
      : Error(what), code_(code), index_(index) {}

  Code code() const { return code_; }
  long index() const { return index_; }

 private:
  Code code_;
  long index_;
};

// Requested truncation target could not be certified within the degree cap.
class TruncationError : public Error {
 public:
  TruncationError(double best_bound, const std::string& what)
      : Error(what), best_bound_(best_bound) {}

  double best_bound() const { return best_bound_; }

 private:
  double best_bound_;
};

}  // namespace zonal
