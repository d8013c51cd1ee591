#pragma once

#include <vector>

#include "cavqed/types.hpp"

namespace cavqed {

// Truncated composite Hilbert space, a tensor product of finite subsystems.
// Slot 0 is the cavity mode by convention; few-level systems follow.
class HilbertSpace {
  public:
    explicit HilbertSpace(std::vector<int> dims);

    const std::vector<int>& dims() const { return dims_; }
    int dim() const { return total_dim_; }
    int dim(std::size_t slot) const { return dims_.at(slot); }
    std::size_t slots() const { return dims_.size(); }

    bool operator==(const HilbertSpace& other) const { return dims_ == other.dims_; }
    bool operator!=(const HilbertSpace& other) const { return !(*this == other); }

  private:
    std::vector<int> dims_;
    int total_dim_ = 0;
};

// Complex matrix tied to a HilbertSpace. Stored sparse; immutable in spirit
// (all operations return new values).
class Operator {
  public:
    Operator(HilbertSpace space, SparseCd matrix);
    Operator(HilbertSpace space, const MatrixXcd& matrix);

    static Operator zero(const HilbertSpace& space);
    static Operator identity(const HilbertSpace& space);

    const HilbertSpace& space() const { return space_; }
    const SparseCd& matrix() const { return mat_; }
    MatrixXcd dense() const { return MatrixXcd(mat_); }
    int dim() const { return space_.dim(); }

    Operator dagger() const;
    Complex trace() const;
    double max_abs() const;

    // max|A - A^dag| <= tol * max|A|
    bool is_hermitian(double tol = 1e-12) const;

    // unit trace within trace_tol and min eigenvalue >= -pos_slack
    bool is_density_matrix(double trace_tol = 1e-10, double pos_slack = 1e-8) const;

    Operator operator+(const Operator& rhs) const;
    Operator operator-(const Operator& rhs) const;
    Operator operator*(const Operator& rhs) const;
    Operator operator*(Complex scalar) const;
    Operator operator*(double scalar) const { return *this * Complex(scalar, 0.0); }

  private:
    HilbertSpace space_;
    SparseCd mat_;
};

inline Operator operator*(Complex scalar, const Operator& op) { return op * scalar; }
inline Operator operator*(double scalar, const Operator& op) { return op * scalar; }

// Lowering operator on an n_max-dimensional Fock space: entries sqrt(k) on
// the (k-1, k) superdiagonal.
Operator fock_annihilation(int n_max);

// Number operator a^dag a, diagonal 0..n_max-1.
Operator fock_number(int n_max);

// |to><from| on a d-dimensional space (0-based indices).
Operator level_transition(int d, int to, int from);

// Place `op` at `slot` of `space`, identity elsewhere. Kronecker ordering is
// slot 0 (x) slot 1 (x) ...
Operator embed(const Operator& op, const HilbertSpace& space, std::size_t slot);

// tr(obs * rho)
Complex expect(const Operator& obs, const Operator& rho);

// Trace out every slot except `keep`; returns an operator on that subsystem.
Operator partial_trace(const Operator& rho, std::size_t keep);

// Column-stacking vectorization and its inverse.
VectorXcd vectorize(const Operator& op);
Operator unvectorize(const VectorXcd& v, const HilbertSpace& space);

}  // namespace cavqed
