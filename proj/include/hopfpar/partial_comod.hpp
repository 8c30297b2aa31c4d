#pragma once

#include "hopfpar/report.hpp"
#include "hopfpar/structures.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hopfpar {

// rho: M -> M⊗H, (dim_m*dim_h) x dim_m.
struct PartialComoduleCandidate {
    HopfAlgebra H;
    std::size_t M_dim = 0;
    LinearMap rho;
};

// PCM1-PCM5 and the (PCM1,2,3) <=> (PCM1,4,5) cross-check. When inputs is set
// only the first `inputs` basis vectors of M are used as arguments.
VerificationReport check_partial_comodule(const PartialComoduleCandidate& c,
                                          std::optional<std::size_t> inputs = std::nullopt);

struct CoactionProjection {
    LinearMap pi;          // on M⊗H
    Subspace MbulletH;     // image of pi
    VerificationReport report;
};
// π(m⊗h) = m^[0][0] ⊗ m^[0][1] S(m^[1]) h
CoactionProjection coaction_projection(const PartialComoduleCandidate& c,
                                       std::optional<std::size_t> inputs = std::nullopt);

// ω(e_ij) = e_i^*(e_j^[0]) e_j^[1] on comatrix_coalgebra(M_dim), e_ij at index i*m+j.
LinearMap corep_from_comodule(const PartialComoduleCandidate& c);
PartialComoduleCandidate comodule_from_corep(const HopfAlgebra& h, std::size_t m, const LinearMap& omega);

// Partial representation of H* on End(M) = matrix_algebra(M_dim):
// π(h*)(m) = (I⊗h*)ρ(m).
struct PartialRepData {
    HopfAlgebra H;   // the Hopf algebra being represented (H* here)
    Algebra B;
    LinearMap pi;
};
PartialRepData module_from_comodule(const PartialComoduleCandidate& c);
// Inverse: ρ(m) = Σ_i π(h_i*)(m) ⊗ h_i over the dual basis.
PartialComoduleCandidate comodule_from_module(const HopfAlgebra& h, std::size_t m, const LinearMap& pi);

// Symmetric partial comodule algebras and comodule coalgebras.
VerificationReport check_pca(const HopfAlgebra& h, const Algebra& a, const LinearMap& rho);
VerificationReport check_lpcc(const HopfAlgebra& h, const Coalgebra& c, const LinearMap& lambda);
VerificationReport check_rpcc(const HopfAlgebra& h, const Coalgebra& c, const LinearMap& rho);

// The polynomial comodule k[z] over H4, cut at degree N+1 (z^{N+1} -> 0).
// Only inputs of degree <= determined_degree = N-2 give fully determined
// axiom expressions.
struct TruncatedPolyComodule {
    std::size_t N = 0;
    PartialComoduleCandidate comodule;   // basis z^0..z^{N+1}
    std::size_t determined_degree = 0;
    std::size_t window = 0;              // highest degree where ρ follows the rule
};
TruncatedPolyComodule h4_poly_comodule(std::size_t N);
VerificationReport check_truncated(const TruncatedPolyComodule& t);

enum class RegularityVerdict { RegularWitnessed, IrregularEvidence, Inconclusive };
std::string to_string(RegularityVerdict v);

struct SubcomoduleChain {
    std::vector<std::size_t> dims;   // dims[r] after r rounds
    Subspace span;
    bool stabilized = false;
    RegularityVerdict verdict = RegularityVerdict::Inconclusive;
    std::string note;
};
// Close span{v} under T_i = (I⊗h_i*)ρ. window: vectors must stay in the span of
// the first window+1 basis vectors, otherwise the verdict is inconclusive.
SubcomoduleChain smallest_subcomodule(const PartialComoduleCandidate& c, const Vec& v, std::size_t budget,
                                      std::optional<std::size_t> window = std::nullopt);
SubcomoduleChain smallest_subcomodule(const TruncatedPolyComodule& t, const Vec& v, std::size_t budget);

}  // namespace hopfpar
