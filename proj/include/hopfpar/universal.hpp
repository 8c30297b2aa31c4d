#pragma once

#include "hopfpar/corep.hpp"
#include "hopfpar/pairing.hpp"
#include "hopfpar/partial_comod.hpp"
#include "hopfpar/partial_rep.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfpar {

class NotComputable : public std::runtime_error {
public:
    NotComputable(const std::string& msg, std::vector<DimRecord> history)
        : std::runtime_error(msg), history(std::move(history)) {}
    std::vector<DimRecord> history;
};

// H^par realized as the dual of the certified quotient W = (H*)_par. The basis
// of H^par is dual to the basis words of W.
struct UniversalCorepCoalgebra {
    HopfAlgebra H;
    QuotientAlgebraApprox W;   // partial quotient of dual_hopf(H)
    Coalgebra Hpar;
    LinearMap p;               // H^par -> H
    LinearMap embed_i;         // H -> H^par
    Pairing pairing;           // H^par vs W
    VerificationReport report;

    std::size_t dim() const { return Hpar.dim; }
    std::vector<std::string> basis_labels() const;   // dual basis names e^w
};

struct BuildOptions {
    std::size_t degree = 0;       // 0: choose from dim H
    std::size_t saturation = 0;   // 0: choose from degree
    std::optional<std::size_t> budget = env_budget();
};

UniversalCorepCoalgebra build_universal(const HopfAlgebra& h, const BuildOptions& opt = {});

struct CorepFactor {
    LinearMap omega_bar;   // C -> H^par
    bool unique = false;
    VerificationReport report;
};
// ω̄ with p∘ω̄ = ω, as the adjoint of the algebra map W -> C* induced by ω*.
CorepFactor factor_corep(const UniversalCorepCoalgebra& u, const Coalgebra& c, const LinearMap& omega);

// Comodules over the coalgebra H^par: rho_hat is (m*dim H^par) x m.
struct HparComodule {
    std::size_t M_dim = 0;
    LinearMap rho_hat;
};
VerificationReport check_global_comodule(const Coalgebra& d, std::size_t m, const LinearMap& rho);
PartialComoduleCandidate gamma_functor(const UniversalCorepCoalgebra& u, const HparComodule& m);
HparComodule gamma_inverse(const UniversalCorepCoalgebra& u, const PartialComoduleCandidate& c);

struct BaseCoalgebraData {
    SubalgebraClosure Apar, Apar_tilde;
    Coalgebra C, Ctilde;
    LinearMap pC, pCt;          // C -> H, C~ -> H
    LinearMap E, Etilde;        // H^par -> H
    LinearMap Ebar, Etildebar;  // H^par -> C, C~
    LinearMap sigma;            // H^par -> H^par
    LinearMap sigma_hat;        // C~ -> C
    LinearMap sigma_tilde;      // C -> C~
    LinearMap lambda;           // C -> H⊗C
    LinearMap rho;              // C~ -> C~⊗H
    VerificationReport report;
};

BaseCoalgebraData build_base_data(const UniversalCorepCoalgebra& u);

// Copar (PQ1-PQ3) and anti-copar (APQ1-APQ3) checks of f: C -> H.
VerificationReport check_copar(const Coalgebra& c, const HopfAlgebra& h, const LinearMap& f);
VerificationReport check_anti_copar(const Coalgebra& c, const HopfAlgebra& h, const LinearMap& f);

VerificationReport lemadosE_suite(const UniversalCorepCoalgebra& u, const BaseCoalgebraData& b);

struct CosmashIso {
    CosmashCoalgebra left, right;
    LinearMap Phi, Phi_inv;        // H^par <-> left carrier
    LinearMap Phit, Phit_inv;      // H^par <-> right carrier
    VerificationReport report;
};
CosmashIso cosmash_isomorphism(const UniversalCorepCoalgebra& u, const BaseCoalgebraData& b);

// Δ^{n-1}(Ē(x) >◀ 1) and the right analogue, checked for the given n.
VerificationReport deltancosmashum(const UniversalCorepCoalgebra& u, const BaseCoalgebraData& b,
                                   const CosmashIso& iso, std::size_t n);

struct Grouplike {
    Vec element;   // in H^par
    Vec p_value;   // in H
};
struct GrouplikeSearch {
    std::vector<Grouplike> found;
    bool complete = false;   // found a basis, so no other grouplikes exist
    std::size_t candidates = 0;
};
// Grouplikes g of H^par are fixed by h = p(g): <g, e_w> is the product of the
// letter values of h. Candidates for h are drawn from a small rational grid.
GrouplikeSearch grouplikes(const UniversalCorepCoalgebra& u);
// The grouplike with p(g) = h, if h gives one.
std::optional<Vec> grouplike_from_value(const UniversalCorepCoalgebra& u, const Vec& h);

}  // namespace hopfpar
