#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyinv {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid argument / contract violation (dimension mismatch, bad parameter).
class InvalidArgumentError : public Error {
public:
  explicit InvalidArgumentError(const std::string& what) : Error(what) {}
};

/// QR eigenvalue iteration failed to converge; `stuck_index` is the
/// subdiagonal position that would not deflate.
class EigenConvergenceError : public Error {
public:
  EigenConvergenceError(const std::string& what, std::size_t stuck_index)
      : Error(what), stuck_index(stuck_index) {}
  std::size_t stuck_index;
};

/// A small dense system was numerically singular (pivot below tolerance).
class SingularMatrixError : public Error {
public:
  explicit SingularMatrixError(const std::string& what) : Error(what) {}
};

/// Nonsymmetric Lanczos / BiCG breakdown (inner product collapsed).
class BreakdownError : public Error {
public:
  BreakdownError(const std::string& what, std::size_t iteration)
      : Error(what), iteration(iteration) {}
  std::size_t iteration;
};

/// ILU(0) hit a zero or tiny pivot at `row`.
class IluPivotError : public Error {
public:
  IluPivotError(const std::string& what, std::size_t row)
      : Error(what), row(row) {}
  std::size_t row;
};

/// File parsing / I/O failure.
class IoError : public Error {
public:
  explicit IoError(const std::string& what) : Error(what) {}
};

/// A solver failed in a way the caller must handle (non-convergence of a
/// required stage, deflation rank loss, ...).
class SolverError : public Error {
public:
  explicit SolverError(const std::string& what) : Error(what) {}
};

} // namespace polyinv
