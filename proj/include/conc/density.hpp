#pragma once

#include <span>
#include <vector>

#include "conc/qstate.hpp"

namespace conc {

// Hermitian, PSD, unit-trace reduced state.
class DensityMatrix {
public:
    DensityMatrix(std::size_t dim, std::vector<cplx> entries);

    std::size_t dim() const { return dim_; }
    cplx at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
    const std::vector<cplx>& entries() const { return entries_; }

private:
    std::size_t dim_;
    std::vector<cplx> entries_;  // row-major
};

inline constexpr std::size_t kMaxReducedDim = 4096;

// Partial trace over the complement of `keep`, computed directly from the
// amplitudes: rho_ji = sum_k a_{j,k} conj(a_{i,k}). The full D x D density
// matrix is never formed.
DensityMatrix reduced_density(const PureState& state, std::span<const int> keep);

// tr(rho^2) = sum |rho_ij|^2
double purity(const DensityMatrix& rho);

// (1/2)((tr rho)^2 - tr(rho^2)), the t^{m-2} characteristic-polynomial
// coefficient; equals sum_{i<j} lambda_i lambda_j.
double char_coeff2(const DensityMatrix& rho);

struct EigenResult {
    std::vector<double> values;          // descending; tiny negatives clamped to 0
    std::vector<double> raw_values;      // same order, unclamped
    std::vector<cplx> vectors;           // column k = eigenvector of values[k], row-major
    int sweeps = 0;
};

// Cyclic Jacobi with complex rotations. Converges when the off-diagonal
// Frobenius norm drops below 1e-13 * dim; throws NoConvergence after 100
// sweeps.
EigenResult eigs_hermitian(const DensityMatrix& rho);

}  // namespace conc
