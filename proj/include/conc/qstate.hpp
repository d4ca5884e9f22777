#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "conc/errors.hpp"

namespace conc {

using cplx = std::complex<double>;

// Per-particle local dimensions d_0..d_{n-1}. Total dimension D = prod d_i
// is capped at 2^24 (dense amplitude storage).
class QuditDims {
public:
    explicit QuditDims(std::vector<int> dims);

    int particle_count() const { return static_cast<int>(dims_.size()); }
    int dim(int particle) const { return dims_[static_cast<std::size_t>(particle)]; }
    const std::vector<int>& dims() const { return dims_; }
    std::size_t total() const { return total_; }

    // Mixed-radix stride of a particle: particle 0 is most significant.
    std::size_t stride(int particle) const { return strides_[static_cast<std::size_t>(particle)]; }

    std::size_t flat_index(std::span<const int> labels) const;
    void unflatten(std::size_t flat, std::span<int> labels_out) const;

    bool operator==(const QuditDims&) const = default;

    static constexpr std::size_t kMaxTotal = std::size_t{1} << 24;

private:
    std::vector<int> dims_;
    std::vector<std::size_t> strides_;
    std::size_t total_ = 0;
};

// Basis labels fixed on a subset of particles (Eq. 10 addressing).
struct MultiIndex {
    std::vector<int> subset;  // strictly increasing particle indices
    std::vector<int> values;  // one label per subset entry
};

// Normalized pure state over the tensor-product basis, flat-indexed
// row-major with particle 0 most significant.
class PureState {
public:
    PureState(QuditDims dims, std::vector<cplx> amplitudes);

    const QuditDims& dims() const { return dims_; }
    const std::vector<cplx>& amplitudes() const { return amps_; }
    cplx amplitude(std::size_t flat) const { return amps_[flat]; }

    // False when the input norm deviated from 1 by more than 1e-6 and the
    // constructor had to rescale.
    bool was_normalized() const { return was_normalized_; }

private:
    QuditDims dims_;
    std::vector<cplx> amps_;
    bool was_normalized_ = true;
};

PureState make_state(QuditDims dims, std::vector<cplx> amplitudes);

// <k_1...k_m|psi>: the amplitude vector over the complement particles,
// row-major in increasing particle index. The subset may interleave.
std::vector<cplx> conditional_vector(const PureState& state, const MultiIndex& m_index);

// Amplitudes rearranged as a rows x cols matrix: row = flat label over the
// kept subset, column = flat label over the complement (both row-major in
// increasing particle index).
struct PartitionMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<cplx> data;  // row-major

    cplx at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

PartitionMatrix partition_rows(const PureState& state, std::span<const int> members);

enum class StandardState { bell, ghz, w, hs };

StandardState standard_state_by_name(const std::string& name);

// bell = ghz(n=2,d=2); ghz generalizes to 1/sqrt(d) sum_k |k...k>;
// w requires d=2; hs is the four-qubit Higuchi-Sudbery state.
PureState standard_state(StandardState which, int n, int d = 2);

// Prints a state back to the ket DSL; parse_ket(render_ket(s)) reproduces
// the amplitudes.
std::string render_ket(const PureState& state);

// .qs text format: "dims: d1 d2 ... dn" then "flat re im" lines.
void save_state_file(std::ostream& out, const PureState& state);
PureState load_state_file(std::istream& in);
PureState load_state_file(const std::string& path);
void save_state_file(const std::string& path, const PureState& state);

}  // namespace conc
