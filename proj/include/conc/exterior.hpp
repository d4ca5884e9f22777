#pragma once

#include <span>
#include <vector>

#include "conc/qstate.hpp"

namespace conc {

// Wedge product a ^ b of two vectors in C^m: coefficients a_i b_j - a_j b_i
// over basis pairs (i,j), i < j, in lexicographic order.
struct Bivector {
    std::size_t dim = 0;           // m
    std::vector<cplx> coeffs;      // length m(m-1)/2

    std::size_t pair_count() const { return coeffs.size(); }
};

// Dense storage is capped at m = 4096 (~8.4M coefficients).
inline constexpr std::size_t kMaxWedgeDim = 4096;

Bivector wedge(std::span<const cplx> a, std::span<const cplx> b);

// sum of squared moduli of the coefficients
double norm_sq(const Bivector& bv);

// ||a ^ b||^2 accumulated directly, without materializing the bivector.
// Same O(m^2) coefficient work as wedge + norm_sq.
double wedge_norm_sq(std::span<const cplx> a, std::span<const cplx> b);

// (||a||^2 ||b||^2 - |sum_k a_k conj(b_k)|^2) - ||a ^ b||^2. Zero by
// Lagrange's identity; what remains is round-off.
double lagrange_gap(std::span<const cplx> a, std::span<const cplx> b);

}  // namespace conc
