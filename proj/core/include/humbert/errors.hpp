#ifndef HUMBERT_ERRORS_HPP
#define HUMBERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace humbert {

// Base class for all evaluation failures raised by this library.
class EvalError : public std::runtime_error {
public:
    explicit EvalError(const std::string& msg) : std::runtime_error(msg) {}
};

// A validity condition of the chosen representation is violated.
class DomainError : public EvalError {
public:
    explicit DomainError(const std::string& msg) : EvalError(msg) {}
};

// The term or evaluation budget ran out before the tail bound was met.
class NoConvergence : public EvalError {
public:
    explicit NoConvergence(const std::string& msg) : EvalError(msg) {}
};

// An uncancelled Gamma pole (or a degenerate parameter combination).
class PoleError : public EvalError {
public:
    explicit PoleError(const std::string& msg) : EvalError(msg) {}
};

// A lower pFq parameter sits on a pole that no terminating upper
// parameter cancels.
class ParameterPole : public PoleError {
public:
    explicit ParameterPole(const std::string& msg) : PoleError(msg) {}
};

// Principal-branch argument restriction violated.
class BranchCutError : public DomainError {
public:
    explicit BranchCutError(const std::string& msg) : DomainError(msg) {}
};

// Endpoint exponent with nonpositive real part requested from a
// singular-endpoint quadrature rule.
class SingularEndpoint : public DomainError {
public:
    explicit SingularEndpoint(const std::string& msg) : DomainError(msg) {}
};

// Sampled decay along a contour or half-line too slow to truncate.
class SlowDecay : public EvalError {
public:
    explicit SlowDecay(const std::string& msg) : EvalError(msg) {}
};

// Sampled magnitudes contradict the declared decay class.
class DivergentTail : public EvalError {
public:
    explicit DivergentTail(const std::string& msg) : EvalError(msg) {}
};

// Every method's validity predicate failed at the requested point.
class NoApplicableMethod : public DomainError {
public:
    explicit NoApplicableMethod(const std::string& msg) : DomainError(msg) {}
};

// Truncation errors hit the reference precision before a decay slope
// could be measured; informational, the caller reports rather than fails.
class BelowNoiseFloor : public EvalError {
public:
    explicit BelowNoiseFloor(const std::string& msg) : EvalError(msg) {}
};

// No two methods share the supplied verification grid.
class EmptyOverlap : public DomainError {
public:
    explicit EmptyOverlap(const std::string& msg) : DomainError(msg) {}
};

} // namespace humbert

#endif
