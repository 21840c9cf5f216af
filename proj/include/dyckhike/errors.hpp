#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace dyckhike {

/// Error taxonomy. The CLI maps each category to an exit code:
/// parse errors 2, validation errors 3, math errors 4, anything else 5.
struct ParseError : std::runtime_error {
  std::size_t position;
  std::string expected;

  ParseError(const std::string& msg, std::size_t pos, std::string exp)
      : std::runtime_error(msg + " at position " + std::to_string(pos) +
                           (exp.empty() ? "" : " (expected " + exp + ")")),
        position(pos),
        expected(std::move(exp)) {}
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Wrong vacuum: the supplied state is not annihilated by the operator.
struct NotAVacuum : ValidationError {
  using ValidationError::ValidationError;
};

/// Path spec admits no words at all.
struct EmptySpec : ValidationError {
  using ValidationError::ValidationError;
};

/// Raising then lowering failed to act as a scalar on a ladder state.
struct NotProportional : MathError {
  using MathError::MathError;
};

/// Two radicals with incommensurable radicands had to be added.
struct IncompatibleRadicals : MathError {
  using MathError::MathError;
};

/// Ladder tower ends before the height a computation needs.
struct TowerExhausted : MathError {
  using MathError::MathError;
};

/// Too few ladder entries to fit the requested polynomial degree.
struct InsufficientTower : MathError {
  using MathError::MathError;
};

/// A ladder entry beyond the fitted points disagrees with the fit.
struct InterpolationMismatch : MathError {
  using MathError::MathError;
};

/// Linear system for a Pade denominator is rank deficient.
struct SingularSystem : MathError {
  int rank;
  int suggested_m;  // caller may retry with this smaller denominator degree

  SingularSystem(const std::string& msg, int rank_, int suggested)
      : MathError(msg), rank(rank_), suggested_m(suggested) {}
};

/// Pade denominator evaluates below the pole threshold.
struct NearPole : MathError {
  using MathError::MathError;
};

/// An oracle amplitude exceeded the truncation policy.
struct TruncationBreach : MathError {
  using MathError::MathError;
};

/// A vector could not be fully expressed in the ladder basis.
struct ResidualOutsideTower : MathError {
  using MathError::MathError;
};

}  // namespace dyckhike
