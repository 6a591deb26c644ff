#pragma once

#include <stdexcept>
#include <string>

namespace etdkf {

// Base for everything this library throws on contract or numeric failure.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotPositiveDefinite : Error {
  explicit NotPositiveDefinite(const std::string& what = "matrix is not symmetric positive definite")
      : Error(what) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what = "operand dimensions do not match")
      : Error(what) {}
};

struct NegativeDelta : Error {
  explicit NegativeDelta(const std::string& what = "flattening weight delta must be >= 0")
      : Error(what) {}
};

struct WeightsNotConvex : Error {
  explicit WeightsNotConvex(const std::string& what = "fusion weights must be positive and sum to 1")
      : Error(what) {}
};

struct NonPositiveInput : Error {
  explicit NonPositiveInput(const std::string& what = "parameter must be strictly positive")
      : Error(what) {}
};

struct SensorCoincidesWithTarget : Error {
  explicit SensorCoincidesWithTarget(const std::string& what = "target is at the sensor position")
      : Error(what) {}
};

struct InnovationCovarianceNotPositive : Error {
  explicit InnovationCovarianceNotPositive(const std::string& what = "innovation covariance is not positive")
      : Error(what) {}
};

struct NonPositiveTau : Error {
  explicit NonPositiveTau(const std::string& what = "trigger threshold tau must be > 0") : Error(what) {}
};

struct CannotConnect : Error {
  explicit CannotConnect(const std::string& what = "could not build a strongly connected graph")
      : Error(what) {}
};

struct AsymmetricGraph : Error {
  explicit AsymmetricGraph(const std::string& what = "graph arcs are not symmetric") : Error(what) {}
};

struct UnknownSender : Error {
  explicit UnknownSender(const std::string& what = "message received from a non-neighbor") : Error(what) {}
};

struct OddSensorCount : Error {
  explicit OddSensorCount(const std::string& what = "sensor count must be even") : Error(what) {}
};

struct RateOutOfRange : Error {
  explicit RateOutOfRange(const std::string& what = "transmission rate must lie in (0, 1]") : Error(what) {}
};

struct CalibrationFailed : Error {
  explicit CalibrationFailed(const std::string& what = "rate calibration did not converge") : Error(what) {}
};

struct ConfigInvalid : Error {
  explicit ConfigInvalid(const std::string& what = "invalid configuration") : Error(what) {}
};

struct IoFailure : Error {
  explicit IoFailure(const std::string& what = "file I/O failed") : Error(what) {}
};

// Violated operation precondition (caller bug, not a numeric condition).
struct ContractViolation : Error {
  explicit ContractViolation(const std::string& what = "operation precondition violated") : Error(what) {}
};

}  // namespace etdkf
