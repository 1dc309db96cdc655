#pragma once

#include <stdexcept>
#include <string>

// Error taxonomy shared by every module in the library.  All conditions are
// reported by throwing; nothing in here is recoverable in-place, so the types
// carry a human-readable message and (where it matters) the offending value.

namespace ddelab {

// Base class so callers can catch any library error in one handler.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A quantity that must be strictly positive was zero or negative.
class NonPositiveError : public Error {
  public:
    NonPositiveError(const std::string& name, double value)
        : Error(name + " must be > 0, got " + std::to_string(value)) {}
};

// The delay is not an integer multiple of the step size (within relative
// tolerance 1e-9), so the delayed node would fall between grid points.
class MisalignedStepError : public Error {
  public:
    MisalignedStepError(double delay, double dt)
        : Error("delay " + std::to_string(delay) + " is not an integer multiple of dt " +
                std::to_string(dt)) {}
};

// The requested horizon does not even cover the history interval.
class HorizonTooShortError : public Error {
  public:
    HorizonTooShortError(double horizon, double delay)
        : Error("horizon " + std::to_string(horizon) + " is shorter than the delay " +
                std::to_string(delay)) {}
};

// Integration produced a non-finite value (overflow or NaN).  Carries the
// first grid time at which it happened.
class NonFiniteError : public Error {
  public:
    explicit NonFiniteError(double time)
        : Error("state became non-finite at t = " + std::to_string(time)), time_(time) {}
    double time() const noexcept { return time_; }

  private:
    double time_;
};

// A history lookup asked for a time beyond the last node written so far.
class FutureLookupError : public Error {
  public:
    FutureLookupError(double requested, double frontier)
        : Error("lookup at t = " + std::to_string(requested) +
                " is ahead of the trajectory frontier t = " + std::to_string(frontier)) {}
};

// An argument fell outside the mathematical domain of the routine.
class DomainViolationError : public Error {
  public:
    explicit DomainViolationError(const std::string& what) : Error(what) {}
};

// The record is too short (or too quiet) for the requested analysis.
class TooShortError : public Error {
  public:
    explicit TooShortError(const std::string& what) : Error(what) {}
};

// A root bracket whose endpoints do not straddle the sought transition.
class BracketInvalidError : public Error {
  public:
    explicit BracketInvalidError(const std::string& what) : Error(what) {}
};

// An economic scenario violating its own preconditions; the message names
// the offending field.
class ScenarioInvalidError : public Error {
  public:
    explicit ScenarioInvalidError(const std::string& what) : Error(what) {}
};

} // namespace ddelab
