#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conc/density.hpp"
#include "conc/qstate.hpp"

namespace conc {

// A cut M | complement(M). Canonical form keeps the smaller side, with ties
// broken by requiring particle 0 in M.
struct Bipartition {
    int n = 0;
    std::vector<int> members;  // sorted, strict nonempty subset

    Bipartition() = default;
    Bipartition(int n_particles, std::vector<int> m);

    std::vector<int> complement() const;
    bool is_canonical() const;
    Bipartition canonicalized() const;

    bool operator==(const Bipartition&) const = default;
};

// All 2^{n-1} - 1 canonical cuts, ordered by (|M|, lexicographic members).
std::vector<Bipartition> canonical_bipartitions(int n);

enum class Route { wedge, trace, eigen };

Route route_by_name(const std::string& name);
const char* route_name(Route r);

// Generalized concurrence E_M across the cut:
//   wedge: 4 * sum over conditional-vector pairs of ||. ^ .||^2, square-rooted
//   trace: sqrt(2 (1 - tr[(rho^M)^2]))
//   eigen: sqrt(4 sum_{i<j} lambda_i lambda_j)
// The three agree within 1e-9 (Lagrange's identity).
double concurrence(const PureState& state, const Bipartition& cut, Route route = Route::trace);

// sqrt(2 - 2/min(D_m, D_complement)); the Schmidt rank caps purity at the
// smaller side's dimension.
double max_concurrence(const QuditDims& dims, const Bipartition& cut);

struct CutResult {
    Bipartition cut;
    double e = 0.0;
    double e_max = 0.0;
    bool separable = false;
};

struct EntanglementReport {
    std::vector<int> dims;
    Route route = Route::trace;
    double sep_epsilon = 1e-8;
    std::vector<CutResult> per_cut;
    double global_e = 0.0;   // sum of E over canonical cuts
    double residual = 0.0;   // sum of E^2 over single-particle cuts
};

inline constexpr double kDefaultSepEpsilon = 1e-8;  // applied to E^2

EntanglementReport global_report(const PureState& state, Route route = Route::trace,
                                 double sep_epsilon = kDefaultSepEpsilon);

// sum_k E_(k)^2 over single-particle cuts (trace route); vanishes iff the
// state is a full product.
double separability_residual(const PureState& state);

// Two-qubit oracle: |<psi|psi~>| with |psi~> = (sigma_y x sigma_y)|psi*>.
double wootters_2qubit(const PureState& state);

struct SeparabilityWitness {
    bool separable = false;
    double e = 0.0;
    // Dominant eigenvector of rho^M when separable (the factored M-side vector).
    std::vector<cplx> factor;
};

SeparabilityWitness is_separable(const PureState& state, const Bipartition& cut,
                                 double sep_epsilon = kDefaultSepEpsilon);

// JSON object {dims, route, cuts, global_E, residual, sep_epsilon}; key order
// and float formatting are deterministic.
std::string report_to_json(const EntanglementReport& report);
// CSV, one row per cut: members,E,E_max,separable
std::string report_to_csv(const EntanglementReport& report);
std::string report_to_text(const EntanglementReport& report);

}  // namespace conc
