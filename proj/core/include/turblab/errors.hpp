#pragma once

#include <stdexcept>
#include <string>

namespace turblab {

/// Base class for all turblab errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Precondition of an operation was violated (wrong domain, shape mismatch, ...).
class ContractError : public Error {
  public:
    using Error::Error;
};

/// A numeric parameter is outside its admissible range.
class ParamError : public Error {
  public:
    using Error::Error;
};

/// Requested time step violates the advective CFL limit.
class CflError : public Error {
  public:
    using Error::Error;
};

/// A solver had to give up (NaN state, exhausted shifting budget, singular system).
/// Carries the path of the last valid checkpoint when one was written.
class SolverAbort : public Error {
  public:
    explicit SolverAbort(const std::string& what, std::string checkpoint = {})
        : Error(what), last_checkpoint(std::move(checkpoint)) {}
    std::string last_checkpoint;
};

/// Run configuration is invalid (missing key, bad value).
class ConfigError : public Error {
  public:
    using Error::Error;
};

/// Checkpoint or CSV I/O failure.
class IoError : public Error {
  public:
    using Error::Error;
};

}  // namespace turblab
