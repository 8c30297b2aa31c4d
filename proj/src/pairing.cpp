#include "hopfpar/pairing.hpp"

#include "hopfpar/pipe.hpp"

namespace hopfpar {

Pairing Pairing::evaluation(std::size_t n)
{
    return from_form(LinearMap::identity(n));
}

Pairing Pairing::from_form(const LinearMap& form)
{
    return Pairing{form.rows(), form.cols(), form};
}

Scalar Pairing::operator()(const Vec& v, const Vec& w) const
{
    Vec fw = form.apply(w);
    Scalar s = 0;
    for (std::size_t i = 0; i < left_dim; ++i)
        s += v.at(i) * fw[i];
    return s;
}

bool is_left_nondegenerate(const Pairing& p)
{
    return rank(p.form) == p.left_dim;
}

bool is_right_nondegenerate(const Pairing& p)
{
    return rank(p.form) == p.right_dim;
}

std::optional<LinearMap> adjoint(const Pairing& p, const Pairing& q, const LinearMap& f)
{
    if (f.cols() != p.left_dim || f.rows() != q.left_dim)
        throw DimensionError("adjoint: map does not go from P.left to Q.left");
    return solve(p.form, f.transpose() * q.form);
}

Subspace perp_right(const Pairing& p, const Subspace& w)
{
    if (w.ambient_dim() != p.left_dim)
        throw DimensionError("perp: subspace is not on the left side");
    if (w.dim() == 0)
        return Subspace::full(p.right_dim);
    return kernel(w.basis_matrix().transpose() * p.form);
}

Subspace perp_left(const Pairing& p, const Subspace& w)
{
    if (w.ambient_dim() != p.right_dim)
        throw DimensionError("perp: subspace is not on the right side");
    if (w.dim() == 0)
        return Subspace::full(p.left_dim);
    return kernel((p.form * w.basis_matrix()).transpose());
}

ReducedPairing reduced_pairing(const Pairing& p, const Subspace& j, const Coalgebra* left_coalg,
                               const Algebra* right_alg)
{
    if (right_alg) {
        std::size_t n = right_alg->dim;
        for (std::size_t b = 0; b < j.dim(); ++b)
            for (std::size_t k = 0; k < n; ++k) {
                Vec ek = unit_vector(n, k);
                if (!j.contains(right_alg->multiply(ek, j.basis()[b])))
                    throw NotAnIdeal("left product leaves J", {k, b});
                if (!j.contains(right_alg->multiply(j.basis()[b], ek)))
                    throw NotAnIdeal("right product leaves J", {b, k});
            }
    }
    ReducedPairing r;
    r.left = perp_left(p, j);
    r.right = quotient(p.right_dim, j);
    r.pairing = Pairing::from_form(r.left.basis_matrix().transpose() * p.form * r.right.section);
    if (left_coalg) {
        // Δ(J^perp) ⊆ J^perp ⊗ J^perp
        Subspace sq = Subspace::span_columns(tensor_product(r.left.basis_matrix(), r.left.basis_matrix()));
        LinearMap img = left_coalg->comult * r.left.basis_matrix();
        bool ok = true;
        for (std::size_t c = 0; c < img.cols() && ok; ++c)
            ok = sq.contains(img.column(c));
        r.subcoalgebra_certified = ok;
    }
    return r;
}

Pairing tensor_pairing(const Pairing& p, const Pairing& q)
{
    return Pairing::from_form(tensor_product(p.form, q.form));
}

std::optional<Algebra> transport_to_right(const Pairing& p, const Coalgebra& c)
{
    // <c, ab> = <c_1, a><c_2, b>; unit is the right element pairing like ε.
    if (p.left_dim != c.dim || !is_left_nondegenerate(p) || !is_right_nondegenerate(p))
        return std::nullopt;
    std::size_t n = p.right_dim;
    // values <e_i, f_a f_b> = (form⊗form)^T Δ
    LinearMap vals = (c.comult.transpose() * tensor_product(p.form, p.form));   // dim x n^2
    auto mult = solve(p.form, vals);
    auto unit = solve(p.form, c.counit.transpose());
    if (!mult || !unit)
        return std::nullopt;
    Algebra a;
    a.dim = n;
    a.mult = *mult;
    a.unit = unit->column(0);
    return a;
}

}  // namespace hopfpar
