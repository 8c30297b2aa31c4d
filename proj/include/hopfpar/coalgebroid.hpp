#pragma once

#include "hopfpar/universal.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hopfpar {

// Left structure over C: α coalgebra map, β anti-coalgebra map, μ_L on the
// cotensor T_L, unit η_L. Right structure over C~ likewise. μ_L and μ_R are
// full n x n^2 matrices but only their restriction to the cotensor matters.
struct HopfCoalgebroid {
    std::string name;
    Coalgebra Hcal, C, Ct;
    LinearMap alpha, beta;       // Hcal -> C
    LinearMap alpha_t, beta_t;   // Hcal -> C~
    LinearMap eta_L;             // C -> Hcal
    LinearMap eta_R;             // C~ -> Hcal
    LinearMap mu_L, mu_R;        // Hcal⊗Hcal -> Hcal
    LinearMap S;
    std::vector<std::string> labels;
};

// ker(ρ⊗I - I⊗λ) in V⊗W, for ρ: V -> V⊗C and λ: W -> C⊗W.
Subspace cotensor(const LinearMap& rho, const LinearMap& lambda, std::size_t v, std::size_t c, std::size_t w);

// T_L with the Bálint quotient T_L/N_L and its coalgebra x1⊠y1 ⊗ x2⊠y2.
struct CotensorData {
    Subspace T;
    LinearMap B, coords, P;     // basis, pivot coordinates, projector B*coords
    Subspace N;                 // in Hcal⊗Hcal
    Quotient Q;                 // T coordinates -> T/N
    LinearMap pi;               // Hcal⊗Hcal -> T/N, through coords
    Coalgebra balint;
    VerificationReport report;
};
CotensorData left_cotensor(const Coalgebra& h, const Coalgebra& c, const LinearMap& alpha, const LinearMap& beta);
// Right side: T_R = ker(ρ~⊗I - I⊗λ~) with ρ~(x) = x1⊗α~(x2), λ~(x) = β~(x2)⊗x1.
// Built as the left data of Hcal^cop, then flipped back.
CotensorData right_cotensor(const HopfCoalgebroid& h);
CotensorData left_cotensor(const HopfCoalgebroid& h);

VerificationReport check_hopf_coalgebroid(const HopfCoalgebroid& h);

HopfCoalgebroid from_hopf_algebra(const HopfAlgebra& h);
HopfCoalgebroid from_groupoid(const Groupoid& g, const std::string& name = "groupoid");
// Γ(G): objects are subsets X with e in X, arrows (g, X) with g in X,
// target X and source g^-1 X.
Groupoid gamma_groupoid(const std::vector<std::vector<std::size_t>>& table);
// Divided-power coalgebra on {1, t}: Δt = 1⊗t + t⊗1.
Coalgebra divided_power_coalgebra();
// C⊗H⊗C^cop over C and C~ = C^cop.
HopfCoalgebroid sandwich(const Coalgebra& c, const HopfAlgebra& h);

struct HparCoalgebroid {
    HopfCoalgebroid direct;    // built from E, σ, the cosmash and factor_corep
    HopfCoalgebroid adjoint;   // transposes of the Hopf algebroid on (H*)_par
    VerificationReport report; // comparison of the two routes
};
HparCoalgebroid assemble_hpar_coalgebroid(const UniversalCorepCoalgebra& u, const BaseCoalgebraData& b,
                                         const CosmashIso& iso);

// entries[i][j] = coordinates of μ_L(x_i⊗x_j) in the given basis, or nothing
// when x_i⊗x_j is outside T_L.
struct ProductTable {
    std::vector<std::vector<std::optional<Vec>>> entries;
};
ProductTable product_table(const HopfCoalgebroid& h, const std::vector<Vec>& basis);

struct ConjectureProbe {
    std::string group;
    bool conclusive = false;
    bool isomorphic = false;
    std::string detail;
    std::vector<std::size_t> arrow_map;   // arrows of Γ(G) -> grouplike index
    VerificationReport report;
};
// Is the coalgebroid on H^par(kG) the groupoid coalgebroid of Γ(G)?
ConjectureProbe conjecture_probe(const std::vector<std::vector<std::size_t>>& table, const std::string& name,
                                 const BuildOptions& opt = {});

std::vector<std::vector<std::size_t>> cyclic_table(std::size_t n);

}  // namespace hopfpar
