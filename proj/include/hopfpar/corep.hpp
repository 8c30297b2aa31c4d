#pragma once

#include "hopfpar/report.hpp"
#include "hopfpar/structures.hpp"

#include <string>

namespace hopfpar {

// PC1-PC5, ISI, SIS and the (PC1,2,3) <=> (PC1,4,5) cross-check.
VerificationReport check_partial_corep(const Coalgebra& c, const HopfAlgebra& h, const LinearMap& omega);

// (PC6) S(ω(c1))ω(c2) = ε(c)1, cross-checked against the coalgebra-map test.
struct GlobalCorepVerdict {
    bool global = false;
    bool pc6 = false;
    bool coalgebra_map = false;
};
GlobalCorepVerdict is_global_corep(const Coalgebra& c, const HopfAlgebra& h, const LinearMap& omega);

enum class Side { Left, Right };

// Left: carrier in C⊗H spanned by x>◀h = x1 ⊗ ∇(x2)h.
// Right: carrier in H⊗C spanned by h▶<x = h∇̃(x1) ⊗ x2.
struct CosmashCoalgebra {
    Side side = Side::Left;
    HopfAlgebra H;
    Coalgebra C;
    LinearMap coaction;     // λ: C -> H⊗C or ρ: C -> C⊗H
    LinearMap nabla;        // C -> H
    LinearMap projector;    // on the ambient tensor space
    Subspace carrier;
    LinearMap basis;        // ambient x k
    LinearMap coords;       // k x ambient (reads pivot entries)
    Coalgebra coalg;        // on the carrier, in the basis above
    LinearMap omega0;       // carrier -> H
    LinearMap phi0;         // carrier -> C
    VerificationReport report;

    std::size_t dim() const { return carrier.dim(); }
    // element x>◀h (or h▶<x) in carrier coordinates
    Vec element(const Vec& x, const Vec& h) const;
};

CosmashCoalgebra build_left_cosmash(const HopfAlgebra& h, const Coalgebra& c, const LinearMap& lambda);
CosmashCoalgebra build_right_cosmash(const HopfAlgebra& h, const Coalgebra& c, const LinearMap& rho);

// (CP1)-(CP3) for a pair φ: D -> C, ω: D -> H against the cosmash's coaction.
VerificationReport check_contravariant_pair(const CosmashCoalgebra& cs, const Coalgebra& d, const LinearMap& phi,
                                            const LinearMap& omega);

struct Factorization {
    LinearMap Phi;      // D -> carrier coordinates
    bool unique = false;
    VerificationReport report;
};
// Φ(x) = φ(x1) >◀ ω(x2) (left) or ω(x1) ▶< φ(x2) (right).
Factorization universal_factorization(const CosmashCoalgebra& cs, const Coalgebra& d, const LinearMap& phi,
                                      const LinearMap& omega);

}  // namespace hopfpar
