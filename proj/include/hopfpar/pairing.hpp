#pragma once

#include "hopfpar/structures.hpp"

#include <optional>
#include <stdexcept>

namespace hopfpar {

// form(i, j) = <e_i, f_j>
struct Pairing {
    std::size_t left_dim = 0;
    std::size_t right_dim = 0;
    LinearMap form;

    static Pairing evaluation(std::size_t n);
    static Pairing from_form(const LinearMap& form);
    Scalar operator()(const Vec& v, const Vec& w) const;
};

bool is_left_nondegenerate(const Pairing& p);
bool is_right_nondegenerate(const Pairing& p);

// g with <f(v), w>_Q = <v, g(w)>_P, if it exists.
std::optional<LinearMap> adjoint(const Pairing& p, const Pairing& q, const LinearMap& f);

// annihilator on the right of a subspace of the left side, and vice versa
Subspace perp_right(const Pairing& p, const Subspace& w);
Subspace perp_left(const Pairing& p, const Subspace& w);

class NotAnIdeal : public std::runtime_error {
public:
    NotAnIdeal(const std::string& msg, std::vector<std::size_t> witness)
        : std::runtime_error(msg), witness(std::move(witness)) {}
    std::vector<std::size_t> witness;
};

struct ReducedPairing {
    Pairing pairing;            // J^perp against A/J, in the bases below
    Subspace left;              // J^perp inside the left space
    Quotient right;             // A -> A/J
    bool subcoalgebra_certified = false;
};

// J is a subspace of the right side. When a coalgebra on the left and an
// algebra on the right are supplied, J must be a two-sided ideal and J^perp is
// certified to be a subcoalgebra.
ReducedPairing reduced_pairing(const Pairing& p, const Subspace& j, const Coalgebra* left_coalg = nullptr,
                               const Algebra* right_alg = nullptr);

Pairing tensor_pairing(const Pairing& p, const Pairing& q);

// Transport a coalgebra on the left of a nondegenerate pairing to an algebra
// on the right (transposed structure constants, read through the form).
std::optional<Algebra> transport_to_right(const Pairing& p, const Coalgebra& c);

}  // namespace hopfpar
