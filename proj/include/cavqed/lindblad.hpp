#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cavqed/hilbert.hpp"
#include "cavqed/types.hpp"

namespace cavqed {

// One thermal jump channel. `quantum` is the lab-frame energy transferred
// into the system per jump; it doubles as the counting weight in the FCS
// module.
struct DissipationChannel {
    Operator jump;
    double rate = 0.0;
    std::string bath_id;
    double temperature = 1.0;
    double quantum = 0.0;
};

// Coherent cavity drive, rotating-frame convention.
struct DriveParams {
    double E = 0.0;
    double omega_d = 0.0;
    double kappa = 1.0;
    double Delta = 0.0;
};

// chi = 1/(1 + 2i Delta/kappa), alpha = -2 (E/kappa) chi, E_sc = g alpha.
struct SemiClassicalDrive {
    Complex chi{1.0, 0.0};
    Complex alpha{0.0, 0.0};
    Complex E_sc{0.0, 0.0};
};

// A Hamiltonian plus dissipation channels: the unit of simulation. `drive`
// is present for cavity models; semi-classical reductions carry `sc_drive`
// instead.
struct OpenSystem {
    HilbertSpace space;
    Operator hamiltonian;
    std::vector<DissipationChannel> channels;
    std::optional<DriveParams> drive;
    std::optional<SemiClassicalDrive> sc_drive;

    void validate() const;
};

// dim^2 x dim^2 matrix acting on column-stacked density matrices.
struct Superoperator {
    HilbertSpace space;
    SparseCd mat;

    int hilbert_dim() const { return space.dim(); }
    int dim() const { return space.dim() * space.dim(); }

    // || vec(I)^dag L || / ||L||, zero for trace-preserving generators
    double trace_preservation_residual() const;
};

// Vectorized form of  L rho L^dag - 1/2 {L^dag L, rho}.
Superoperator dissipator(const Operator& L);

// Vectorized jump term  L rho L^dag  alone (used for counting statistics).
Superoperator jump_superoperator(const Operator& L);

// -i(H x I - I x H^T) + sum_k rate_k D[L_k], column-stacking convention.
Superoperator liouvillian(const OpenSystem& sys);

struct SteadyState {
    Operator rho;
    double residual = 0.0;         // ||L rho|| / ||rho||
    double edge_population = 0.0;  // total population of the top level of slot 0
};

// Solves L rho = 0, tr rho = 1 and keeps the factorization around so that
// Drazin-pseudoinverse applications (FCS noise) reuse it.
//
// The bordered system replaces the row of d rho_00/dt with the trace
// constraint; that row is redundant whenever the kernel is one-dimensional.
// A singular factorization or a failed residual falls back to a dense
// kernel extraction below dimension 32^2, which also distinguishes a
// degenerate kernel from plain ill-conditioning.
class SteadyStateSolver {
  public:
    explicit SteadyStateSolver(Superoperator L, double tol = 1e-10);
    SteadyStateSolver(const OpenSystem& sys, double tol = 1e-10);

    const SteadyState& state() const { return state_; }
    const Superoperator& liouville() const { return L_; }
    double tolerance() const { return tol_; }

    // Solve L z = Q y with tr z = 0, where Q = 1 - |rho_ss>><<1| projects
    // onto the traceless subspace. This is the Drazin pseudoinverse applied
    // to y up to the projector.
    VectorXcd drazin_solve(const VectorXcd& y) const;

    // Magnitude of the smallest nonzero Liouvillian eigenvalue, estimated by
    // inverse iteration on the traceless subspace. Small values signal a
    // nearly degenerate steady state.
    double spectral_gap(int iterations = 6) const;

  private:
    void solve();
    VectorXcd bordered_solve(const VectorXcd& rhs) const;

    Superoperator L_;
    double tol_;
    SparseCd bordered_;
    std::unique_ptr<Eigen::SparseLU<SparseCd>> lu_;
    VectorXcd rho_vec_;
    SteadyState state_{Operator::zero(HilbertSpace({2})), 0.0, 0.0};
};

SteadyState steady_state(const Superoperator& L, double tol = 1e-10);
SteadyState steady_state(const OpenSystem& sys, double tol = 1e-10);

struct ConvergencePoint {
    int cutoff = 0;
    double value = 0.0;
    double rel_diff = 0.0;  // |v_k - v_{k-1}| / max(|v_k|, tiny); 0 for the first point
    double edge_population = 0.0;
};

struct ConvergenceReport {
    std::vector<ConvergencePoint> points;
    bool converged = false;
    double threshold = 0.0;
    double edge_threshold = 0.0;
};

// Solve the model at each cutoff and track an observable. Non-convergence is
// flagged when the last successive relative difference exceeds `threshold`
// or the final edge population exceeds `edge_threshold`.
ConvergenceReport check_cutoff_convergence(
    const std::function<OpenSystem(int)>& builder,
    const std::function<double(const OpenSystem&, const SteadyState&)>& observable,
    const std::vector<int>& cutoffs, double threshold = 1e-4,
    double edge_threshold = 1e-6, double solver_tol = 1e-10);

}  // namespace cavqed
