#pragma once

#include "hopfpar/report.hpp"
#include "hopfpar/structures.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hopfpar {

using Word = std::vector<std::uint32_t>;

std::string word_to_string(const Word& w, const HopfAlgebra& h);

// PR1-PR5 on the basis of H⊗H, plus the (PR1,PR2,PR3) <=> (PR1,PR4,PR5) cross-check.
VerificationReport check_partial_rep(const HopfAlgebra& h, const Algebra& b, const LinearMap& pi);

struct DimRecord {
    std::size_t n = 0;
    std::size_t N = 0;
    std::size_t dim = 0;
};

struct QuotientAlgebraApprox {
    HopfAlgebra H;
    std::size_t n = 0;
    std::size_t N = 0;
    std::vector<Word> basis_words;
    LinearMap projection;            // T^{<=n}(H) -> W, columns ordered by (length, lex)
    std::vector<DimRecord> dims_history;
    bool certified_stable = false;
    std::string reason;              // why certification failed, if it did
    std::optional<LinearMap> mult_table;   // dim x dim^2
    LinearMap bracket;               // H -> W

    std::size_t dim() const { return basis_words.size(); }
    Algebra algebra() const;         // requires certification
    std::size_t max_word_length() const;
    // Image of a word of H-letters, computed multiplicatively in W.
    Vec word_image(const Word& w) const;
    // Image of a product of arbitrary elements [h^1]...[h^k] given as vectors of H.
    Vec bracket_product(const std::vector<Vec>& hs) const;
};

// Saturation budget from HOPFPAR_BUDGET (caps saturation degree and closure rounds).
std::optional<std::size_t> env_budget();

QuotientAlgebraApprox build_partial_hopf_quotient(const HopfAlgebra& h, std::size_t n, std::size_t N,
                                                  std::optional<std::size_t> budget = env_budget());

// Smallest unital subalgebra of W containing the given generators.
struct SubalgebraClosure {
    LinearMap basis;                                 // q x a, columns are elements of W
    std::vector<std::vector<std::size_t>> gen_seq;   // basis[j] = g_{s0} g_{s1} ...
    std::vector<Vec> generators;                     // in W
    Algebra algebra;                                 // structure constants in this basis
    std::size_t rounds = 0;
    bool closed = false;

    std::size_t dim() const { return basis.cols(); }
    Vec coordinates(const Vec& w) const;             // W-vector in the subalgebra -> coords
};

SubalgebraClosure close_subalgebra(const Algebra& w, const std::vector<Vec>& generators,
                                   std::size_t max_rounds = 64);

// ε_h = [h_(1)][S(h_(2))] over basis h
std::vector<Vec> epsilon_generators(const QuotientAlgebraApprox& q);
// ε̃_h = [S(h_(1))][h_(2)]
std::vector<Vec> epsilon_tilde_generators(const QuotientAlgebraApprox& q);
SubalgebraClosure extract_Apar(const QuotientAlgebraApprox& q);
SubalgebraClosure extract_Apar_tilde(const QuotientAlgebraApprox& q);

// The algebra map W -> B induced by a partial representation pi: H -> B, with
// a uniqueness certificate (W is generated by the brackets).
struct InducedMap {
    LinearMap map;     // B.dim x W.dim
    bool exists = false;
    bool unique = false;
    std::string failure;
};
InducedMap induced_algebra_map(const QuotientAlgebraApprox& q, const Algebra& b, const LinearMap& pi);

// ε_L and ε_R of a word; e maps h to ε_h (resp. et maps h to ε̃_h) in W.
Vec left_counit_word(const QuotientAlgebraApprox& q, const Word& w, const LinearMap& e);
Vec right_counit_word(const QuotientAlgebraApprox& q, const Word& w, const LinearMap& et);

struct HopfAlgebroidOnHpar {
    SubalgebraClosure Apar, Apar_tilde;
    LinearMap source;          // A_par -> W (inclusion)
    LinearMap target;          // A_par -> W, t_L
    LinearMap source_R;        // Ã_par -> W
    LinearMap target_R;        // Ã_par -> W, t_R
    LinearMap counit_L;        // W -> A_par coordinates
    LinearMap counit_R;        // W -> Ã_par coordinates
    LinearMap comult_L;        // W -> W⊗W on representatives
    LinearMap antipode_star;   // W -> W
    Subspace balancing;        // span{t(a)w ⊗ w' - w ⊗ s(a)w'} in W⊗W
    VerificationReport report;
};

HopfAlgebroidOnHpar hopf_algebroid_on_Hpar(const QuotientAlgebraApprox& q);

}  // namespace hopfpar
