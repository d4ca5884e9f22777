#include "conc/measure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "conc/exterior.hpp"

#include "json.hpp"

namespace conc {

Bipartition::Bipartition(int n_particles, std::vector<int> m)
    : n(n_particles), members(std::move(m)) {
    std::sort(members.begin(), members.end());
    if (members.empty() || static_cast<int>(members.size()) >= n)
        throw Error(errc::bad_subset, "bipartition must be a strict nonempty subset");
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (members[i] < 0 || members[i] >= n)
            throw Error(errc::bad_subset, "particle index out of range");
        if (i > 0 && members[i] == members[i - 1])
            throw Error(errc::bad_subset, "duplicate particle index");
    }
}

std::vector<int> Bipartition::complement() const {
    std::vector<int> out;
    std::size_t k = 0;
    for (int p = 0; p < n; ++p) {
        if (k < members.size() && members[k] == p)
            ++k;
        else
            out.push_back(p);
    }
    return out;
}

bool Bipartition::is_canonical() const {
    int m = static_cast<int>(members.size());
    if (2 * m < n) return true;
    if (2 * m > n) return false;
    return members.front() == 0;
}

Bipartition Bipartition::canonicalized() const {
    return is_canonical() ? *this : Bipartition(n, complement());
}

std::vector<Bipartition> canonical_bipartitions(int n) {
    if (n < 2)
        throw Error(errc::bad_subset, "need at least two particles");
    std::vector<Bipartition> cuts;
    // Subsets as bitmasks; canonical filter, then sort by (|M|, lex members).
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<int> members;
        for (int p = 0; p < n; ++p)
            if (mask & (1u << p)) members.push_back(p);
        Bipartition cut(n, std::move(members));
        if (cut.is_canonical()) cuts.push_back(std::move(cut));
    }
    std::sort(cuts.begin(), cuts.end(), [](const Bipartition& a, const Bipartition& b) {
        if (a.members.size() != b.members.size())
            return a.members.size() < b.members.size();
        return a.members < b.members;
    });
    return cuts;
}

Route route_by_name(const std::string& name) {
    if (name == "wedge") return Route::wedge;
    if (name == "trace") return Route::trace;
    if (name == "eigen") return Route::eigen;
    throw Error(errc::unsupported_params, "unknown route '" + name + "'");
}

const char* route_name(Route r) {
    switch (r) {
        case Route::wedge: return "wedge";
        case Route::trace: return "trace";
        case Route::eigen: return "eigen";
    }
    return "?";
}

namespace {

double concurrence_wedge(const PureState& state, const Bipartition& cut) {
    if (state.dims().total() > (std::size_t{1} << 16))
        throw Error(errc::dim_too_large, "wedge route capped at D = 2^16");
    PartitionMatrix pm = partition_rows(state, cut.members);
    // 4 * sum over unordered pairs of conditional vectors of the squared
    // wedge norm; every pair is evaluated in full, no short-circuit.
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < pm.rows; ++i) {
        std::span<const cplx> vi(pm.data.data() + i * pm.cols, pm.cols);
        for (std::size_t j = i + 1; j < pm.rows; ++j) {
            std::span<const cplx> vj(pm.data.data() + j * pm.cols, pm.cols);
            sum += wedge_norm_sq(vi, vj);
        }
    }
    return std::sqrt(std::max(0.0, 4.0 * sum));
}

double concurrence_trace(const PureState& state, const Bipartition& cut) {
    DensityMatrix rho = reduced_density(state, cut.members);
    return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity(rho))));
}

double concurrence_eigen(const PureState& state, const Bipartition& cut) {
    DensityMatrix rho = reduced_density(state, cut.members);
    EigenResult eig = eigs_hermitian(rho);
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < eig.values.size(); ++i)
        for (std::size_t j = i + 1; j < eig.values.size(); ++j)
            sum += eig.values[i] * eig.values[j];
    return std::sqrt(std::max(0.0, 4.0 * sum));
}

}  // namespace

double concurrence(const PureState& state, const Bipartition& cut, Route route) {
    if (cut.n != state.dims().particle_count())
        throw Error(errc::bad_subset, "bipartition particle count mismatch");
    switch (route) {
        case Route::wedge: return concurrence_wedge(state, cut);
        case Route::trace: return concurrence_trace(state, cut);
        case Route::eigen: return concurrence_eigen(state, cut);
    }
    throw Error(errc::unsupported_params, "unknown route");
}

double max_concurrence(const QuditDims& dims, const Bipartition& cut) {
    double dm = 1.0, dc = 1.0;
    std::size_t k = 0;
    for (int p = 0; p < dims.particle_count(); ++p) {
        if (k < cut.members.size() && cut.members[k] == p) {
            dm *= dims.dim(p);
            ++k;
        } else {
            dc *= dims.dim(p);
        }
    }
    return std::sqrt(2.0 - 2.0 / std::min(dm, dc));
}

EntanglementReport global_report(const PureState& state, Route route, double sep_epsilon) {
    if (sep_epsilon <= 0.0)
        throw Error(errc::unsupported_params, "sep_epsilon must be positive");
    const QuditDims& dims = state.dims();
    int n = dims.particle_count();
    if (n < 2)
        throw Error(errc::bad_subset, "report needs at least two particles");

    EntanglementReport rep;
    rep.dims = dims.dims();
    rep.route = route;
    rep.sep_epsilon = sep_epsilon;
    for (const Bipartition& cut : canonical_bipartitions(n)) {
        CutResult cr;
        cr.e = concurrence(state, cut, route);
        cr.e_max = max_concurrence(dims, cut);
        cr.separable = cr.e * cr.e <= sep_epsilon;
        cr.cut = cut;
        rep.global_e += cr.e;
        if (cut.members.size() == 1) rep.residual += cr.e * cr.e;
        rep.per_cut.push_back(std::move(cr));
    }
    return rep;
}

double separability_residual(const PureState& state) {
    int n = state.dims().particle_count();
    if (n < 2)
        throw Error(errc::bad_subset, "need at least two particles");
    double sum = 0.0;
    for (int p = 0; p < n; ++p) {
        double e = concurrence(state, Bipartition(n, {p}), Route::trace);
        sum += e * e;
    }
    return sum;
}

double wootters_2qubit(const PureState& state) {
    if (state.dims().dims() != std::vector<int>{2, 2})
        throw Error(errc::wrong_dims, "Wootters concurrence is defined for two qubits");
    const auto& a = state.amplitudes();
    // (sigma_y x sigma_y) |psi*> in the computational basis
    cplx tilde[4] = {-std::conj(a[3]), std::conj(a[2]), std::conj(a[1]), -std::conj(a[0])};
    cplx overlap{};
    for (int k = 0; k < 4; ++k) overlap += std::conj(a[k]) * tilde[k];
    return std::abs(overlap);
}

SeparabilityWitness is_separable(const PureState& state, const Bipartition& cut,
                                 double sep_epsilon) {
    SeparabilityWitness w;
    DensityMatrix rho = reduced_density(state, cut.members);
    w.e = std::sqrt(std::max(0.0, 2.0 * (1.0 - purity(rho))));
    w.separable = w.e * w.e <= sep_epsilon;
    if (w.separable) {
        EigenResult eig = eigs_hermitian(rho);
        w.factor.resize(rho.dim());
        for (std::size_t r = 0; r < rho.dim(); ++r)
            w.factor[r] = eig.vectors[r * rho.dim()];  // column of the top eigenvalue
    }
    return w;
}

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string join_members(const std::vector<int>& members) {
    std::string s;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) s += '+';
        s += std::to_string(members[i]);
    }
    return s;
}

}  // namespace

std::string report_to_json(const EntanglementReport& report) {
    nlohmann::ordered_json j;
    j["dims"] = report.dims;
    j["route"] = route_name(report.route);
    j["cuts"] = nlohmann::ordered_json::array();
    for (const CutResult& cr : report.per_cut) {
        nlohmann::ordered_json c;
        c["members"] = cr.cut.members;
        c["E"] = cr.e;
        c["E_max"] = cr.e_max;
        c["separable"] = cr.separable;
        j["cuts"].push_back(std::move(c));
    }
    j["global_E"] = report.global_e;
    j["residual"] = report.residual;
    j["sep_epsilon"] = report.sep_epsilon;
    return j.dump(2);
}

std::string report_to_csv(const EntanglementReport& report) {
    std::string out = "members,E,E_max,separable\n";
    for (const CutResult& cr : report.per_cut) {
        out += join_members(cr.cut.members);
        out += ',';
        out += fmt17(cr.e);
        out += ',';
        out += fmt17(cr.e_max);
        out += ',';
        out += cr.separable ? "true" : "false";
        out += '\n';
    }
    return out;
}

std::string report_to_text(const EntanglementReport& report) {
    std::ostringstream os;
    os << "dims:";
    for (int d : report.dims) os << ' ' << d;
    os << "  route: " << route_name(report.route) << '\n';
    for (const CutResult& cr : report.per_cut) {
        os << "  cut {" << join_members(cr.cut.members) << "}  E = " << fmt17(cr.e)
           << "  (max " << fmt17(cr.e_max) << ')'
           << (cr.separable ? "  separable" : "") << '\n';
    }
    os << "global E = " << fmt17(report.global_e) << '\n';
    os << "single-particle residual = " << fmt17(report.residual) << '\n';
    return os.str();
}

}  // namespace conc
