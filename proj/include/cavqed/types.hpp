#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace cavqed {

using Complex = std::complex<double>;
using SparseCd = Eigen::SparseMatrix<Complex>;
using MatrixXcd = Eigen::MatrixXcd;
using VectorXcd = Eigen::VectorXcd;

constexpr Complex kI{0.0, 1.0};

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operator/space shape mismatch or invalid dimension.
struct DimensionError : Error {
    using Error::Error;
};

// Invalid model construction (non-Hermitian Hamiltonian, bad rates, ...).
struct ModelError : Error {
    using Error::Error;
};

// Linear-algebra failure in the steady-state or noise machinery.
struct SolverError : Error {
    using Error::Error;
};

// The Liouvillian kernel has dimension > 1.
struct NonUniqueSteadyStateError : SolverError {
    using SolverError::SolverError;
};

// Residual above the requested tolerance.
struct ConvergenceError : SolverError {
    using SolverError::SolverError;
};

// Two eigenvalues of the tilted generator are too close to separate.
struct BranchAmbiguityError : SolverError {
    using SolverError::SolverError;
};

// Q requested for a current whose mean is numerically zero.
struct NearZeroCurrentError : Error {
    using Error::Error;
};

// Bad run configuration or I/O problem in the CLI layer.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace cavqed
