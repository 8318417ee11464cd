#pragma once

#include <stdexcept>
#include <string>

namespace pzeta {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Requested accuracy cannot be delivered in working precision.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dirichlet series with a_1 = 0 has no convolution inverse.
class NonInvertibleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A nested radical hit a negative radicand. `level` counts from the
/// outermost square root (level 0).
class RadicandError : public DomainError {
public:
    RadicandError(int level, double radicand)
        : DomainError("negative radicand " + std::to_string(radicand) +
                      " at nesting level " + std::to_string(level)),
          level_(level),
          radicand_(radicand) {}

    int level() const noexcept { return level_; }
    double radicand() const noexcept { return radicand_; }

private:
    int level_;
    double radicand_;
};

}  // namespace pzeta
