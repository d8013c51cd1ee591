#include "cavqed/hilbert.hpp"

#include <algorithm>
#include <utility>

namespace cavqed {

HilbertSpace::HilbertSpace(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) {
        throw DimensionError("HilbertSpace: empty dimension list");
    }
    total_dim_ = 1;
    for (int d : dims_) {
        if (d < 2) {
            throw DimensionError("HilbertSpace: subsystem dimension must be >= 2, got " +
                                 std::to_string(d));
        }
        total_dim_ *= d;
    }
}

Operator::Operator(HilbertSpace space, SparseCd matrix)
    : space_(std::move(space)), mat_(std::move(matrix)) {
    if (mat_.rows() != space_.dim() || mat_.cols() != space_.dim()) {
        throw DimensionError("Operator: matrix is " + std::to_string(mat_.rows()) + "x" +
                             std::to_string(mat_.cols()) + " but space dimension is " +
                             std::to_string(space_.dim()));
    }
    mat_.makeCompressed();
}

Operator::Operator(HilbertSpace space, const MatrixXcd& matrix)
    : Operator(std::move(space), SparseCd(matrix.sparseView())) {}

Operator Operator::zero(const HilbertSpace& space) {
    return Operator(space, SparseCd(space.dim(), space.dim()));
}

Operator Operator::identity(const HilbertSpace& space) {
    SparseCd m(space.dim(), space.dim());
    m.setIdentity();
    return Operator(space, std::move(m));
}

Operator Operator::dagger() const {
    return Operator(space_, SparseCd(mat_.adjoint()));
}

Complex Operator::trace() const {
    Complex t = 0.0;
    for (int k = 0; k < mat_.outerSize(); ++k) {
        for (SparseCd::InnerIterator it(mat_, k); it; ++it) {
            if (it.row() == it.col()) t += it.value();
        }
    }
    return t;
}

double Operator::max_abs() const {
    double m = 0.0;
    for (int k = 0; k < mat_.outerSize(); ++k) {
        for (SparseCd::InnerIterator it(mat_, k); it; ++it) {
            m = std::max(m, std::abs(it.value()));
        }
    }
    return m;
}

bool Operator::is_hermitian(double tol) const {
    SparseCd diff = SparseCd(mat_.adjoint()) - mat_;
    double d = 0.0;
    for (int k = 0; k < diff.outerSize(); ++k) {
        for (SparseCd::InnerIterator it(diff, k); it; ++it) {
            d = std::max(d, std::abs(it.value()));
        }
    }
    return d <= tol * std::max(max_abs(), 1e-300);
}

bool Operator::is_density_matrix(double trace_tol, double pos_slack) const {
    if (!is_hermitian(1e-10)) return false;
    if (std::abs(trace() - 1.0) > trace_tol) return false;
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(dense(), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -pos_slack;
}

Operator Operator::operator+(const Operator& rhs) const {
    if (space_ != rhs.space_) throw DimensionError("Operator+: space mismatch");
    return Operator(space_, SparseCd(mat_ + rhs.mat_));
}

Operator Operator::operator-(const Operator& rhs) const {
    if (space_ != rhs.space_) throw DimensionError("Operator-: space mismatch");
    return Operator(space_, SparseCd(mat_ - rhs.mat_));
}

Operator Operator::operator*(const Operator& rhs) const {
    if (space_ != rhs.space_) throw DimensionError("Operator*: space mismatch");
    return Operator(space_, SparseCd(mat_ * rhs.mat_));
}

Operator Operator::operator*(Complex scalar) const {
    return Operator(space_, SparseCd(mat_ * scalar));
}

Operator fock_annihilation(int n_max) {
    if (n_max < 2) {
        throw DimensionError("fock_annihilation: cutoff must be >= 2, got " +
                             std::to_string(n_max));
    }
    SparseCd a(n_max, n_max);
    a.reserve(Eigen::VectorXi::Constant(n_max, 1));
    for (int k = 1; k < n_max; ++k) {
        a.insert(k - 1, k) = std::sqrt(static_cast<double>(k));
    }
    a.makeCompressed();
    return Operator(HilbertSpace({n_max}), std::move(a));
}

Operator fock_number(int n_max) {
    if (n_max < 2) {
        throw DimensionError("fock_number: cutoff must be >= 2");
    }
    SparseCd n(n_max, n_max);
    for (int k = 1; k < n_max; ++k) n.insert(k, k) = static_cast<double>(k);
    n.makeCompressed();
    return Operator(HilbertSpace({n_max}), std::move(n));
}

Operator level_transition(int d, int to, int from) {
    if (d < 2 || to < 0 || from < 0 || to >= d || from >= d) {
        throw DimensionError("level_transition: indices out of range");
    }
    SparseCd m(d, d);
    m.insert(to, from) = 1.0;
    m.makeCompressed();
    return Operator(HilbertSpace({d}), std::move(m));
}

namespace {

SparseCd sparse_kron(const SparseCd& A, const SparseCd& B) {
    SparseCd out(A.rows() * B.rows(), A.cols() * B.cols());
    std::vector<Eigen::Triplet<Complex>> trips;
    trips.reserve(static_cast<std::size_t>(A.nonZeros()) * B.nonZeros());
    for (int ka = 0; ka < A.outerSize(); ++ka) {
        for (SparseCd::InnerIterator ia(A, ka); ia; ++ia) {
            for (int kb = 0; kb < B.outerSize(); ++kb) {
                for (SparseCd::InnerIterator ib(B, kb); ib; ++ib) {
                    trips.emplace_back(ia.row() * B.rows() + ib.row(),
                                       ia.col() * B.cols() + ib.col(),
                                       ia.value() * ib.value());
                }
            }
        }
    }
    out.setFromTriplets(trips.begin(), trips.end());
    return out;
}

SparseCd sparse_identity(int d) {
    SparseCd m(d, d);
    m.setIdentity();
    return m;
}

}  // namespace

Operator embed(const Operator& op, const HilbertSpace& space, std::size_t slot) {
    if (slot >= space.slots()) {
        throw DimensionError("embed: slot out of range");
    }
    if (op.dim() != space.dim(slot)) {
        throw DimensionError("embed: operator dimension " + std::to_string(op.dim()) +
                             " does not match slot dimension " +
                             std::to_string(space.dim(slot)));
    }
    int before = 1, after = 1;
    for (std::size_t i = 0; i < slot; ++i) before *= space.dim(i);
    for (std::size_t i = slot + 1; i < space.slots(); ++i) after *= space.dim(i);

    SparseCd m = op.matrix();
    if (before > 1) m = sparse_kron(sparse_identity(before), m);
    if (after > 1) m = sparse_kron(m, sparse_identity(after));
    return Operator(space, std::move(m));
}

Complex expect(const Operator& obs, const Operator& rho) {
    if (obs.space() != rho.space()) {
        throw DimensionError("expect: observable and state live on different spaces");
    }
    // tr(obs rho) = sum_ij obs(i,j) rho(j,i)
    Complex t = 0.0;
    const SparseCd& o = obs.matrix();
    const SparseCd& r = rho.matrix();
    for (int k = 0; k < o.outerSize(); ++k) {
        for (SparseCd::InnerIterator it(o, k); it; ++it) {
            t += it.value() * r.coeff(it.col(), it.row());
        }
    }
    return t;
}

Operator partial_trace(const Operator& rho, std::size_t keep) {
    const HilbertSpace& sp = rho.space();
    if (keep >= sp.slots()) throw DimensionError("partial_trace: slot out of range");
    int before = 1, after = 1;
    const int dk = sp.dim(keep);
    for (std::size_t i = 0; i < keep; ++i) before *= sp.dim(i);
    for (std::size_t i = keep + 1; i < sp.slots(); ++i) after *= sp.dim(i);

    MatrixXcd dense = rho.dense();
    MatrixXcd out = MatrixXcd::Zero(dk, dk);
    for (int b = 0; b < before; ++b) {
        for (int a = 0; a < after; ++a) {
            for (int i = 0; i < dk; ++i) {
                for (int j = 0; j < dk; ++j) {
                    const int row = (b * dk + i) * after + a;
                    const int col = (b * dk + j) * after + a;
                    out(i, j) += dense(row, col);
                }
            }
        }
    }
    return Operator(HilbertSpace({dk}), out);
}

VectorXcd vectorize(const Operator& op) {
    MatrixXcd d = op.dense();
    return Eigen::Map<const VectorXcd>(d.data(), d.size());
}

Operator unvectorize(const VectorXcd& v, const HilbertSpace& space) {
    const int d = space.dim();
    if (v.size() != static_cast<Eigen::Index>(d) * d) {
        throw DimensionError("unvectorize: length does not match space");
    }
    MatrixXcd m = Eigen::Map<const MatrixXcd>(v.data(), d, d);
    return Operator(space, m);
}

}  // namespace cavqed
