#ifndef GWI_ERRORS_HPP
#define GWI_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gwi {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input files, flags or spacetime descriptions.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A mathematical precondition did not hold.
class MathError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public MathError {
public:
    using MathError::MathError;
};

/// q(eta) = 1 / g^{-1}(eta, eta) requested at a lightlike covector.
class NullDenominator : public MathError {
public:
    explicit NullDenominator(std::string what, std::vector<int> indices = {})
        : MathError(std::move(what)), indices_(std::move(indices))
    {
    }
    /// 1-based direction indices of the offending eta_{jk...}, empty if not applicable.
    [[nodiscard]] const std::vector<int>& indices() const { return indices_; }

private:
    std::vector<int> indices_;
};

class NotABasis : public MathError {
public:
    using MathError::MathError;
};

class SingularMetric : public MathError {
public:
    using MathError::MathError;
};

/// dphi_1..dphi_4 linearly dependent.
class NDViolation : public MathError {
public:
    using MathError::MathError;
};

class RankDeficient : public MathError {
public:
    using MathError::MathError;
};

/// Operation not available for the given spacetime preset.
class Unsupported : public MathError {
public:
    using MathError::MathError;
};

class IntegrationError : public MathError {
public:
    using MathError::MathError;
};

class Ambiguous : public MathError {
public:
    using MathError::MathError;
};

/// Query point lies in an exclusion set where the detection test is undecided.
class ExcludedPoint : public MathError {
public:
    using MathError::MathError;
};

}  // namespace gwi

#endif  // GWI_ERRORS_HPP
