#pragma once

#include <stdexcept>
#include <string>

namespace singmod {

class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Caller supplied parameters outside an operation's domain.
class InvalidArgument : public Error
{
  public:
    using Error::Error;
};

/// Inputs violate the hypotheses of the congruence (p | d, p not split).
class HypothesisViolation : public InvalidArgument
{
  public:
    using InvalidArgument::InvalidArgument;
};

/// An internal self-check failed. These always indicate a bug or an
/// inadequate precision model, never bad input.
class InternalCheckFailure : public Error
{
  public:
    using Error::Error;
};

class RoundingFailure : public InternalCheckFailure
{
  public:
    using InternalCheckFailure::InternalCheckFailure;
};

class PrecisionInfeasible : public InternalCheckFailure
{
  public:
    using InternalCheckFailure::InternalCheckFailure;
};

class ConsistencyFailure : public InternalCheckFailure
{
  public:
    using InternalCheckFailure::InternalCheckFailure;
};

class StrategyDisagreement : public InternalCheckFailure
{
  public:
    using InternalCheckFailure::InternalCheckFailure;
};

} // namespace singmod
