#include "conc/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace conc {

QuditDims::QuditDims(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty())
        throw Error(errc::dimension_mismatch, "need at least one particle");
    for (int d : dims_) {
        if (d < 2)
            throw Error(errc::dimension_mismatch,
                        "local dimension must be >= 2, got " + std::to_string(d));
    }
    total_ = 1;
    for (int d : dims_) {
        total_ *= static_cast<std::size_t>(d);
        if (total_ > kMaxTotal)
            throw Error(errc::dim_too_large, "total dimension exceeds 2^24");
    }
    strides_.assign(dims_.size(), 1);
    for (int i = static_cast<int>(dims_.size()) - 2; i >= 0; --i)
        strides_[i] = strides_[i + 1] * static_cast<std::size_t>(dims_[i + 1]);
}

std::size_t QuditDims::flat_index(std::span<const int> labels) const {
    std::size_t f = 0;
    for (std::size_t i = 0; i < dims_.size(); ++i)
        f += static_cast<std::size_t>(labels[i]) * strides_[i];
    return f;
}

void QuditDims::unflatten(std::size_t flat, std::span<int> labels_out) const {
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        labels_out[i] = static_cast<int>(flat / strides_[i]);
        flat %= strides_[i];
    }
}

PureState::PureState(QuditDims dims, std::vector<cplx> amplitudes)
    : dims_(std::move(dims)), amps_(std::move(amplitudes)) {
    if (amps_.size() != dims_.total())
        throw Error(errc::length_mismatch,
                    "expected " + std::to_string(dims_.total()) + " amplitudes, got " +
                        std::to_string(amps_.size()));
    double norm_sq = 0.0;
    for (const cplx& a : amps_) norm_sq += std::norm(a);
    if (norm_sq <= 0.0)
        throw Error(errc::zero_state, "all amplitudes are zero");
    double norm = std::sqrt(norm_sq);
    was_normalized_ = std::abs(norm - 1.0) <= 1e-6;
    if (norm != 1.0) {
        for (cplx& a : amps_) a /= norm;
    }
}

PureState make_state(QuditDims dims, std::vector<cplx> amplitudes) {
    return PureState(std::move(dims), std::move(amplitudes));
}

namespace {

void check_subset(const QuditDims& dims, std::span<const int> subset, bool allow_full = false) {
    int n = dims.particle_count();
    if (subset.empty())
        throw Error(errc::bad_subset, "subset is empty");
    if (!allow_full && static_cast<int>(subset.size()) >= n)
        throw Error(errc::bad_subset, "subset must be strict");
    int prev = -1;
    for (int p : subset) {
        if (p <= prev)
            throw Error(errc::bad_subset, "subset indices must be strictly increasing");
        if (p >= n)
            throw Error(errc::bad_subset, "particle index out of range");
        prev = p;
    }
}

}  // namespace

PartitionMatrix partition_rows(const PureState& state, std::span<const int> members) {
    const QuditDims& dims = state.dims();
    check_subset(dims, members);
    int n = dims.particle_count();

    std::vector<bool> kept(static_cast<std::size_t>(n), false);
    for (int p : members) kept[static_cast<std::size_t>(p)] = true;

    PartitionMatrix pm;
    pm.rows = 1;
    pm.cols = 1;
    // Row/column strides of each particle within the rearranged matrix.
    std::vector<std::size_t> row_stride(static_cast<std::size_t>(n), 0);
    std::vector<std::size_t> col_stride(static_cast<std::size_t>(n), 0);
    for (int i = n - 1; i >= 0; --i) {
        auto ui = static_cast<std::size_t>(i);
        if (kept[ui]) {
            row_stride[ui] = pm.rows;
            pm.rows *= static_cast<std::size_t>(dims.dim(i));
        } else {
            col_stride[ui] = pm.cols;
            pm.cols *= static_cast<std::size_t>(dims.dim(i));
        }
    }
    pm.data.resize(pm.rows * pm.cols);

    std::vector<int> labels(static_cast<std::size_t>(n));
    const auto& amps = state.amplitudes();
    for (std::size_t f = 0; f < amps.size(); ++f) {
        dims.unflatten(f, labels);
        std::size_t r = 0, c = 0;
        for (int i = 0; i < n; ++i) {
            auto ui = static_cast<std::size_t>(i);
            if (kept[ui])
                r += static_cast<std::size_t>(labels[ui]) * row_stride[ui];
            else
                c += static_cast<std::size_t>(labels[ui]) * col_stride[ui];
        }
        pm.data[r * pm.cols + c] = amps[f];
    }
    return pm;
}

std::vector<cplx> conditional_vector(const PureState& state, const MultiIndex& m_index) {
    const QuditDims& dims = state.dims();
    check_subset(dims, m_index.subset);
    if (m_index.values.size() != m_index.subset.size())
        throw Error(errc::bad_subset, "one value per subset particle required");

    // Base offset from the fixed labels, then an odometer over the complement.
    std::size_t base = 0;
    std::vector<bool> fixed(static_cast<std::size_t>(dims.particle_count()), false);
    for (std::size_t k = 0; k < m_index.subset.size(); ++k) {
        int p = m_index.subset[k];
        int v = m_index.values[k];
        if (v < 0 || v >= dims.dim(p))
            throw Error(errc::dimension_mismatch, "label out of range for particle " +
                                                      std::to_string(p));
        base += static_cast<std::size_t>(v) * dims.stride(p);
        fixed[static_cast<std::size_t>(p)] = true;
    }

    std::vector<int> free_particles;
    std::size_t len = 1;
    for (int p = 0; p < dims.particle_count(); ++p) {
        if (!fixed[static_cast<std::size_t>(p)]) {
            free_particles.push_back(p);
            len *= static_cast<std::size_t>(dims.dim(p));
        }
    }

    std::vector<cplx> out(len);
    std::vector<int> digits(free_particles.size(), 0);
    std::size_t offset = 0;
    for (std::size_t k = 0; k < len; ++k) {
        out[k] = state.amplitude(base + offset);
        // increment row-major over the free particles
        for (int i = static_cast<int>(free_particles.size()) - 1; i >= 0; --i) {
            auto ui = static_cast<std::size_t>(i);
            int p = free_particles[ui];
            offset += dims.stride(p);
            if (++digits[ui] < dims.dim(p)) break;
            offset -= static_cast<std::size_t>(dims.dim(p)) * dims.stride(p);
            digits[ui] = 0;
        }
    }
    return out;
}

StandardState standard_state_by_name(const std::string& name) {
    if (name == "bell") return StandardState::bell;
    if (name == "ghz") return StandardState::ghz;
    if (name == "w") return StandardState::w;
    if (name == "hs") return StandardState::hs;
    throw Error(errc::unsupported_params, "unknown state name '" + name + "'");
}

PureState standard_state(StandardState which, int n, int d) {
    switch (which) {
        case StandardState::bell:
            return standard_state(StandardState::ghz, 2, 2);
        case StandardState::ghz: {
            if (n < 2 || d < 2)
                throw Error(errc::unsupported_params, "ghz requires n >= 2, d >= 2");
            QuditDims dims(std::vector<int>(static_cast<std::size_t>(n), d));
            std::vector<cplx> amps(dims.total());
            std::vector<int> labels(static_cast<std::size_t>(n));
            for (int k = 0; k < d; ++k) {
                std::fill(labels.begin(), labels.end(), k);
                amps[dims.flat_index(labels)] = 1.0;
            }
            return PureState(std::move(dims), std::move(amps));
        }
        case StandardState::w: {
            if (n < 2 || d != 2)
                throw Error(errc::unsupported_params, "w requires n >= 2, d = 2");
            QuditDims dims(std::vector<int>(static_cast<std::size_t>(n), 2));
            std::vector<cplx> amps(dims.total());
            for (int p = 0; p < n; ++p)
                amps[dims.stride(p)] = 1.0;
            return PureState(std::move(dims), std::move(amps));
        }
        case StandardState::hs: {
            if (n != 4 || d != 2)
                throw Error(errc::unsupported_params, "hs is defined for n = 4 qubits");
            QuditDims dims(std::vector<int>{2, 2, 2, 2});
            std::vector<cplx> amps(16);
            const cplx omega = std::polar(1.0, 2.0 * M_PI / 3.0);
            amps[0b0011] = 1.0;
            amps[0b1100] = 1.0;
            amps[0b1010] = omega;
            amps[0b0101] = omega;
            amps[0b1001] = omega * omega;
            amps[0b0110] = omega * omega;
            return PureState(std::move(dims), std::move(amps));
        }
    }
    throw Error(errc::unsupported_params, "unknown standard state");
}

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// A nonnegative double is a plain number in the DSL; a negative one has to
// be spelled (0-x) since the grammar has no unary minus.
std::string coeff_part(double v) {
    if (v >= 0.0) return fmt_double(v);
    return "(0-" + fmt_double(-v) + ")";
}

}  // namespace

std::string render_ket(const PureState& state) {
    const QuditDims& dims = state.dims();
    bool single_digit = true;
    for (int d : dims.dims())
        if (d > 10) single_digit = false;

    std::string out;
    std::vector<int> labels(static_cast<std::size_t>(dims.particle_count()));
    for (std::size_t f = 0; f < state.amplitudes().size(); ++f) {
        cplx a = state.amplitude(f);
        if (a == cplx{0.0, 0.0}) continue;
        dims.unflatten(f, labels);
        if (!out.empty()) out += " + ";
        std::string im = a.imag() >= 0.0 ? fmt_double(a.imag()) + "i"
                                         : "(0-" + fmt_double(-a.imag()) + ")*i";
        out += "(" + coeff_part(a.real()) + "+" + im + ")*|";
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (i > 0 && !single_digit) out += ",";
            out += std::to_string(labels[i]);
        }
        out += ">";
    }
    return out;
}

void save_state_file(std::ostream& out, const PureState& state) {
    out << "dims:";
    for (int d : state.dims().dims()) out << ' ' << d;
    out << '\n';
    const auto& amps = state.amplitudes();
    for (std::size_t f = 0; f < amps.size(); ++f) {
        if (amps[f] == cplx{0.0, 0.0}) continue;
        out << f << ' ' << fmt_double(amps[f].real()) << ' ' << fmt_double(amps[f].imag())
            << '\n';
    }
}

PureState load_state_file(std::istream& in) {
    std::string line;
    std::vector<int> dims;
    bool have_dims = false;
    std::vector<cplx> amps;
    std::size_t total = 0;
    while (std::getline(in, line)) {
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream ls(line.substr(pos));
        if (!have_dims) {
            std::string tag;
            ls >> tag;
            if (tag != "dims:")
                throw Error(errc::io, "state file must start with a 'dims:' line");
            int d;
            while (ls >> d) dims.push_back(d);
            QuditDims qd(dims);
            total = qd.total();
            amps.assign(total, cplx{});
            have_dims = true;
            continue;
        }
        std::size_t flat;
        double re, im;
        if (!(ls >> flat >> re >> im))
            throw Error(errc::io, "malformed amplitude line: '" + line + "'");
        if (flat >= total)
            throw Error(errc::io, "flat index " + std::to_string(flat) + " out of range");
        amps[flat] = cplx{re, im};
    }
    if (!have_dims)
        throw Error(errc::io, "state file has no 'dims:' line");
    return PureState(QuditDims(dims), std::move(amps));
}

PureState load_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(errc::io, "cannot open '" + path + "'");
    return load_state_file(in);
}

void save_state_file(const std::string& path, const PureState& state) {
    std::ofstream out(path);
    if (!out)
        throw Error(errc::io, "cannot write '" + path + "'");
    save_state_file(out, state);
}

}  // namespace conc
