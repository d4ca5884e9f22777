#include "conc/exterior.hpp"

#include <cmath>

namespace conc {

namespace {

void check_lengths(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.size() != b.size())
        throw Error(errc::length_mismatch, "wedge operands must have equal length");
    if (a.empty())
        throw Error(errc::length_mismatch, "wedge operands must be nonempty");
}

}  // namespace

Bivector wedge(std::span<const cplx> a, std::span<const cplx> b) {
    check_lengths(a, b);
    std::size_t m = a.size();
    if (m > kMaxWedgeDim)
        throw Error(errc::dim_too_large, "dense bivector capped at m = 4096");
    Bivector bv;
    bv.dim = m;
    bv.coeffs.reserve(m * (m - 1) / 2);
    for (std::size_t i = 0; i + 1 < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            bv.coeffs.push_back(a[i] * b[j] - a[j] * b[i]);
    return bv;
}

double norm_sq(const Bivector& bv) {
    double s = 0.0;
    for (const cplx& c : bv.coeffs) s += std::norm(c);
    return s;
}

double wedge_norm_sq(std::span<const cplx> a, std::span<const cplx> b) {
    check_lengths(a, b);
    std::size_t m = a.size();
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            s += std::norm(a[i] * b[j] - a[j] * b[i]);
    return s;
}

double lagrange_gap(std::span<const cplx> a, std::span<const cplx> b) {
    check_lengths(a, b);
    double na = 0.0, nb = 0.0;
    cplx dot{};  // sum a_k conj(b_k)
    for (std::size_t k = 0; k < a.size(); ++k) {
        na += std::norm(a[k]);
        nb += std::norm(b[k]);
        dot += a[k] * std::conj(b[k]);
    }
    double lhs = na * nb - std::norm(dot);
    return lhs - wedge_norm_sq(a, b);
}

}  // namespace conc
