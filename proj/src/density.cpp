#include "conc/density.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace conc {

DensityMatrix::DensityMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_)
        throw Error(errc::length_mismatch, "density matrix entries must be dim^2");
}

DensityMatrix reduced_density(const PureState& state, std::span<const int> keep) {
    PartitionMatrix pm = partition_rows(state, keep);
    if (pm.rows > kMaxReducedDim)
        throw Error(errc::dim_too_large, "reduced dimension exceeds 4096");

    std::size_t dm = pm.rows;
    std::vector<cplx> rho(dm * dm);
    for (std::size_t j = 0; j < dm; ++j) {
        for (std::size_t i = j; i < dm; ++i) {
            cplx s{};
            const cplx* rj = pm.data.data() + j * pm.cols;
            const cplx* ri = pm.data.data() + i * pm.cols;
            for (std::size_t k = 0; k < pm.cols; ++k)
                s += rj[k] * std::conj(ri[k]);
            rho[j * dm + i] = s;
            rho[i * dm + j] = std::conj(s);
        }
    }
    return DensityMatrix(dm, std::move(rho));
}

double purity(const DensityMatrix& rho) {
    double s = 0.0;
    for (const cplx& e : rho.entries()) s += std::norm(e);
    return s;
}

double char_coeff2(const DensityMatrix& rho) {
    double tr = 0.0;
    for (std::size_t i = 0; i < rho.dim(); ++i) tr += rho.at(i, i).real();
    return 0.5 * (tr * tr - purity(rho));
}

EigenResult eigs_hermitian(const DensityMatrix& rho) {
    const std::size_t n = rho.dim();
    std::vector<cplx> a = rho.entries();

    double herm_defect = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            herm_defect = std::max(herm_defect, std::abs(a[i * n + j] - std::conj(a[j * n + i])));
    if (herm_defect > 1e-10)
        throw Error(errc::wrong_dims, "matrix is not Hermitian");

    std::vector<cplx> v(n * n);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += std::norm(a[i * n + j]);
        return std::sqrt(s);
    };

    const double threshold = 1e-13 * static_cast<double>(n);
    const int max_sweeps = 100;
    int sweep = 0;
    while (n > 1 && off_norm() > threshold) {
        if (++sweep > max_sweeps)
            throw Error(errc::no_convergence, "Jacobi did not converge in 100 sweeps");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                cplx apq = a[p * n + q];
                double mag = std::abs(apq);
                if (mag == 0.0) continue;
                // unitary rotation in the (p,q) plane annihilating a_pq
                double app = a[p * n + p].real();
                double aqq = a[q * n + q].real();
                double tau = (aqq - app) / (2.0 * mag);
                double t = (tau >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                cplx phase = apq / mag;
                cplx gpq = s * phase;          // G[p][q]
                cplx gqp = -s * std::conj(phase);  // G[q][p]

                // A := G^H A G, applied as column then row updates
                for (std::size_t k = 0; k < n; ++k) {
                    cplx akp = a[k * n + p];
                    cplx akq = a[k * n + q];
                    a[k * n + p] = akp * c + akq * gqp;
                    a[k * n + q] = akp * gpq + akq * c;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    cplx apk = a[p * n + k];
                    cplx aqk = a[q * n + k];
                    a[p * n + k] = c * apk + std::conj(gqp) * aqk;
                    a[q * n + k] = std::conj(gpq) * apk + c * aqk;
                }
                // V := V G
                for (std::size_t k = 0; k < n; ++k) {
                    cplx vkp = v[k * n + p];
                    cplx vkq = v[k * n + q];
                    v[k * n + p] = vkp * c + vkq * gqp;
                    v[k * n + q] = vkp * gpq + vkq * c;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = a[i * n + i].real();
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return diag[x] > diag[y]; });

    EigenResult res;
    res.sweeps = sweep;
    res.raw_values.resize(n);
    res.values.resize(n);
    res.vectors.resize(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        double lam = diag[order[k]];
        res.raw_values[k] = lam;
        res.values[k] = (lam < 0.0 && lam >= -1e-10) ? 0.0 : lam;
        for (std::size_t r = 0; r < n; ++r)
            res.vectors[r * n + k] = v[r * n + order[k]];
    }
    return res;
}

}  // namespace conc
