#pragma once

#include "hopfpar/linalg.hpp"
#include "hopfpar/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hopfpar {

// mult is dim x dim^2: column i*dim+j holds e_i e_j.
struct Algebra {
    std::size_t dim = 0;
    LinearMap mult;
    Vec unit;

    LinearMap unit_map() const { return LinearMap::column_vector(unit); }
    Vec multiply(const Vec& a, const Vec& b) const;
};

// comult is dim^2 x dim, counit is 1 x dim.
struct Coalgebra {
    std::size_t dim = 0;
    LinearMap comult;
    LinearMap counit;

    Vec counit_vec() const { return counit.row(0); }
};

struct HopfAlgebra {
    std::string name;
    Algebra alg;
    Coalgebra coalg;
    LinearMap antipode;
    std::optional<LinearMap> antipode_inverse;
    std::vector<std::string> labels;

    std::size_t dim() const { return alg.dim; }
    const LinearMap& m() const { return alg.mult; }
    const LinearMap& delta() const { return coalg.comult; }
    const LinearMap& eps() const { return coalg.counit; }
    const LinearMap& S() const { return antipode; }
    // S^{-1}; solved for when not stored.
    LinearMap S_inv() const;
    Vec one() const { return alg.unit; }
    std::string label(std::size_t i) const;
};

VerificationReport verify_algebra(const Algebra& a, const std::string& subject = "algebra");
VerificationReport verify_coalgebra(const Coalgebra& c, const std::string& subject = "coalgebra");
VerificationReport verify_hopf(const HopfAlgebra& h);

// table[i][j] = index of g_i g_j.
HopfAlgebra group_algebra(const std::vector<std::vector<std::size_t>>& table, const std::string& name = "kG",
                          std::vector<std::string> labels = {});
HopfAlgebra cyclic_group_algebra(std::size_t n);
HopfAlgebra trivial_hopf();
HopfAlgebra sweedler_h4();
HopfAlgebra dual_hopf(const HopfAlgebra& h);

Algebra dual_algebra(const Coalgebra& c);
Coalgebra dual_coalgebra(const Algebra& a);
Coalgebra coopposite(const Coalgebra& c);
Algebra opposite(const Algebra& a);
Coalgebra tensor_coalgebra(const Coalgebra& a, const Coalgebra& b);
Algebra tensor_algebra(const Algebra& a, const Algebra& b);
Algebra matrix_algebra(std::size_t n);
Coalgebra trivial_coalgebra();

Coalgebra comatrix_coalgebra(std::size_t n);

struct Groupoid {
    std::size_t objects = 0;
    std::vector<std::size_t> src, tgt;                   // per arrow
    std::vector<std::vector<std::optional<std::size_t>>> comp;  // comp[a][b] = a∘b when src(a)=tgt(b)
    std::vector<std::size_t> identity;                   // per object
    std::vector<std::size_t> inverse;                    // per arrow
    std::vector<std::string> arrow_labels, object_labels;
    std::size_t arrows() const { return src.size(); }
};

// Checks the groupoid axioms; fills identity/inverse. Throws with a witness.
void validate_groupoid(Groupoid& g);
Coalgebra groupoid_coalgebra(const Groupoid& g);   // all arrows grouplike
Coalgebra grouplike_coalgebra(std::size_t n);

// f: A -> B algebra / coalgebra morphism checks.
bool is_algebra_map(const LinearMap& f, const Algebra& a, const Algebra& b);
bool is_coalgebra_map(const LinearMap& f, const Coalgebra& c, const Coalgebra& d);
bool is_anti_coalgebra_map(const LinearMap& f, const Coalgebra& c, const Coalgebra& d);

// Iterated comultiplication into n legs (n >= 1).
LinearMap iterated_comult(const Coalgebra& c, std::size_t legs);
// Iterated product of n factors (n >= 0; n = 0 gives the unit as a 1-column map).
LinearMap iterated_mult(const Algebra& a, std::size_t factors);

// Explicit Hopf isomorphism H -> K if one exists among candidate images, verified.
bool is_hopf_map(const LinearMap& f, const HopfAlgebra& h, const HopfAlgebra& k);
std::optional<LinearMap> h4_self_duality();

}  // namespace hopfpar
