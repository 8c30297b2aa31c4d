#include "hopfpar/structures.hpp"

#include "hopfpar/pipe.hpp"

#include <stdexcept>

namespace hopfpar {

Vec Algebra::multiply(const Vec& a, const Vec& b) const
{
    Vec r(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (sgn(b[j]) == 0)
                continue;
            Scalar ab = a[i] * b[j];
            for (std::size_t k = 0; k < dim; ++k)
                if (sgn(mult(k, i * dim + j)) != 0)
                    r[k] += ab * mult(k, i * dim + j);
        }
    }
    return r;
}

LinearMap HopfAlgebra::S_inv() const
{
    if (antipode_inverse)
        return *antipode_inverse;
    auto inv = inverse(antipode);
    if (!inv)
        throw std::runtime_error(name + ": antipode is not invertible");
    return *inv;
}

std::string HopfAlgebra::label(std::size_t i) const
{
    if (i < labels.size())
        return labels[i];
    return "e" + std::to_string(i);
}

LinearMap iterated_comult(const Coalgebra& c, std::size_t legs)
{
    if (legs == 0)
        return c.counit;
    Pipe p(c.dim);
    for (std::size_t k = 1; k < legs; ++k)
        p.split(k - 1, c.comult);
    return p.value();
}

LinearMap iterated_mult(const Algebra& a, std::size_t factors)
{
    if (factors == 0)
        return a.unit_map();
    std::vector<std::size_t> dims(factors, a.dim);
    Pipe p(dims);
    for (std::size_t k = 1; k < factors; ++k)
        p.merge(0, a.mult);
    return p.value();
}

VerificationReport verify_algebra(const Algebra& a, const std::string& subject)
{
    VerificationReport r;
    r.subject = subject;
    std::size_t d = a.dim;
    if (a.mult.rows() != d || a.mult.cols() != d * d || a.unit.size() != d) {
        r.expect("shape", false, "structure tensors do not match dim");
        return r;
    }
    Pipe l({d, d, d}), rr({d, d, d});
    l.merge(0, a.mult).merge(0, a.mult);
    rr.merge(1, a.mult).merge(0, a.mult);
    r.expect_equal("associativity", l.value(), rr.value(), {d, d, d});
    Pipe ul(d), ur(d);
    ul.insert(0, a.unit).merge(0, a.mult);
    ur.insert(1, a.unit).merge(0, a.mult);
    r.expect_equal("left unit", ul.value(), LinearMap::identity(d), {d});
    r.expect_equal("right unit", ur.value(), LinearMap::identity(d), {d});
    return r;
}

VerificationReport verify_coalgebra(const Coalgebra& c, const std::string& subject)
{
    VerificationReport r;
    r.subject = subject;
    std::size_t d = c.dim;
    if (c.comult.rows() != d * d || c.comult.cols() != d || c.counit.rows() != 1 || c.counit.cols() != d) {
        r.expect("shape", false, "structure tensors do not match dim");
        return r;
    }
    Pipe l(d), rr(d);
    l.split(0, c.comult).split(0, c.comult);
    rr.split(0, c.comult).split(1, c.comult);
    r.expect_equal("coassociativity", l.value(), rr.value(), {d});
    Pipe cl(d), cr(d);
    cl.split(0, c.comult).kill(0, c.counit);
    cr.split(0, c.comult).kill(1, c.counit);
    r.expect_equal("left counit", cl.value(), LinearMap::identity(d), {d});
    r.expect_equal("right counit", cr.value(), LinearMap::identity(d), {d});
    return r;
}

VerificationReport verify_hopf(const HopfAlgebra& h)
{
    VerificationReport r;
    r.subject = "hopf " + h.name;
    std::size_t d = h.dim();
    if (h.coalg.dim != d || h.antipode.rows() != d || h.antipode.cols() != d) {
        r.expect("shape", false, "algebra, coalgebra and antipode dimensions disagree");
        return r;
    }
    r.absorb(verify_algebra(h.alg), "algebra: ");
    r.absorb(verify_coalgebra(h.coalg), "coalgebra: ");
    if (!r.all_pass())
        return r;
    // Δ(ab) = Δ(a)Δ(b)
    Pipe l({d, d});
    l.merge(0, h.m()).split(0, h.delta());
    Pipe rr({d, d});
    rr.split(1, h.delta()).split(0, h.delta()).permute({0, 2, 1, 3}).merge(2, h.m()).merge(0, h.m());
    r.expect_equal("comult multiplicative", l.value(), rr.value(), {d, d});
    r.expect_equal("comult unital", h.delta() * h.alg.unit_map(),
                   tensor_product(h.alg.unit_map(), h.alg.unit_map()), {1});
    r.expect_equal("counit multiplicative", h.eps() * h.m(), tensor_product(h.eps(), h.eps()), {d, d});
    r.expect_equal("counit unital", h.eps() * h.alg.unit_map(), LinearMap::identity(1), {1});
    LinearMap ue = h.alg.unit_map() * h.eps();
    Pipe sl(d), sr(d);
    sl.split(0, h.delta()).map(0, h.S()).merge(0, h.m());
    sr.split(0, h.delta()).map(1, h.S()).merge(0, h.m());
    r.expect_equal("antipode left", sl.value(), ue, {d});
    r.expect_equal("antipode right", sr.value(), ue, {d});
    if (h.antipode_inverse) {
        r.expect_equal("antipode inverse", *h.antipode_inverse * h.S(), LinearMap::identity(d), {d});
        r.expect_equal("antipode inverse (other side)", h.S() * *h.antipode_inverse, LinearMap::identity(d), {d});
    }
    return r;
}

HopfAlgebra group_algebra(const std::vector<std::vector<std::size_t>>& table, const std::string& name,
                          std::vector<std::string> labels)
{
    std::size_t n = table.size();
    if (n == 0)
        throw std::invalid_argument("empty group table");
    for (const auto& row : table) {
        if (row.size() != n)
            throw std::invalid_argument("group table is not square");
        for (auto v : row)
            if (v >= n)
                throw std::invalid_argument("group table entry out of range");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw std::invalid_argument("group table not associative at (" + std::to_string(a) + "," +
                                                std::to_string(b) + "," + std::to_string(c) + ")");
    std::optional<std::size_t> e;
    for (std::size_t a = 0; a < n && !e; ++a) {
        bool ok = true;
        for (std::size_t b = 0; b < n; ++b)
            ok = ok && table[a][b] == b && table[b][a] == b;
        if (ok)
            e = a;
    }
    if (!e)
        throw std::invalid_argument("group table has no identity");
    std::vector<std::size_t> inv(n);
    for (std::size_t a = 0; a < n; ++a) {
        bool found = false;
        for (std::size_t b = 0; b < n && !found; ++b)
            if (table[a][b] == *e && table[b][a] == *e) {
                inv[a] = b;
                found = true;
            }
        if (!found)
            throw std::invalid_argument("element " + std::to_string(a) + " has no inverse");
    }
    HopfAlgebra h;
    h.name = name;
    h.alg.dim = h.coalg.dim = n;
    h.alg.mult = LinearMap(n, n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            h.alg.mult(table[a][b], a * n + b) = 1;
    h.alg.unit = unit_vector(n, *e);
    h.coalg.comult = LinearMap(n * n, n);
    h.coalg.counit = LinearMap(1, n);
    h.antipode = LinearMap(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        h.coalg.comult(a * n + a, a) = 1;
        h.coalg.counit(0, a) = 1;
        h.antipode(inv[a], a) = 1;
    }
    h.antipode_inverse = h.antipode;
    if (labels.empty())
        for (std::size_t a = 0; a < n; ++a)
            labels.push_back("u" + std::to_string(a));
    h.labels = std::move(labels);
    return h;
}

HopfAlgebra cyclic_group_algebra(std::size_t n)
{
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            t[a][b] = (a + b) % n;
        if (n == 2)
            labels.push_back(a == 0 ? "u_e" : "u_g");
        else
            labels.push_back(a == 0 ? "u_e" : (a == 1 ? "u_g" : "u_g" + std::to_string(a)));
    }
    return group_algebra(t, n == 2 ? "kC2" : "kC" + std::to_string(n), labels);
}

HopfAlgebra trivial_hopf()
{
    return group_algebra({{0}}, "k", {"1"});
}

HopfAlgebra sweedler_h4()
{
    // basis 1, g, x, y with y = xg = -gx
    HopfAlgebra h;
    h.name = "H4";
    h.labels = {"1", "g", "x", "y"};
    const std::size_t d = 4;
    h.alg.dim = h.coalg.dim = d;
    h.alg.mult = LinearMap(d, d * d);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, int c) { h.alg.mult(k, i * d + j) = c; };
    for (std::size_t j = 0; j < d; ++j) {
        set(0, j, j, 1);
        if (j != 0)
            set(j, 0, j, 1);
    }
    set(1, 1, 0, 1);
    set(1, 2, 3, -1);
    set(1, 3, 2, -1);
    set(2, 1, 3, 1);
    set(3, 1, 2, 1);
    h.alg.unit = unit_vector(d, 0);
    h.coalg.comult = LinearMap(d * d, d);
    h.coalg.comult(0 * d + 0, 0) = 1;
    h.coalg.comult(1 * d + 1, 1) = 1;
    h.coalg.comult(1 * d + 2, 2) = 1;   // g ⊗ x
    h.coalg.comult(2 * d + 0, 2) = 1;   // x ⊗ 1
    h.coalg.comult(0 * d + 3, 3) = 1;   // 1 ⊗ y
    h.coalg.comult(3 * d + 1, 3) = 1;   // y ⊗ g
    h.coalg.counit = LinearMap(1, d);
    h.coalg.counit(0, 0) = 1;
    h.coalg.counit(0, 1) = 1;
    h.antipode = LinearMap(d, d);
    h.antipode(0, 0) = 1;
    h.antipode(1, 1) = 1;
    h.antipode(3, 2) = 1;    // S(x) = y
    h.antipode(2, 3) = -1;   // S(y) = -x
    h.antipode_inverse = h.antipode * h.antipode * h.antipode;
    return h;
}

HopfAlgebra dual_hopf(const HopfAlgebra& h)
{
    HopfAlgebra d;
    d.name = h.name + "*";
    for (std::size_t i = 0; i < h.dim(); ++i) {
        std::string l = h.label(i);
        d.labels.push_back(l.rfind("u_", 0) == 0 ? "p_" + l.substr(2) : "p_" + l);
    }
    d.alg.dim = d.coalg.dim = h.dim();
    d.alg.mult = h.coalg.comult.transpose();
    d.alg.unit = h.coalg.counit.row(0);
    d.coalg.comult = h.alg.mult.transpose();
    d.coalg.counit = LinearMap::row_vector(h.alg.unit);
    d.antipode = h.antipode.transpose();
    if (h.antipode_inverse)
        d.antipode_inverse = h.antipode_inverse->transpose();
    return d;
}

Algebra dual_algebra(const Coalgebra& c)
{
    Algebra a;
    a.dim = c.dim;
    a.mult = c.comult.transpose();
    a.unit = c.counit.row(0);
    return a;
}

Coalgebra dual_coalgebra(const Algebra& a)
{
    Coalgebra c;
    c.dim = a.dim;
    c.comult = a.mult.transpose();
    c.counit = LinearMap::row_vector(a.unit);
    return c;
}

Coalgebra coopposite(const Coalgebra& c)
{
    Coalgebra r = c;
    r.comult = flip_map(c.dim, c.dim) * c.comult;
    return r;
}

Algebra opposite(const Algebra& a)
{
    Algebra r = a;
    r.mult = a.mult * flip_map(a.dim, a.dim);
    return r;
}

Coalgebra tensor_coalgebra(const Coalgebra& a, const Coalgebra& b)
{
    Coalgebra r;
    r.dim = a.dim * b.dim;
    r.comult = permutation_map({a.dim, a.dim, b.dim, b.dim}, {0, 2, 1, 3}) * tensor_product(a.comult, b.comult);
    r.counit = tensor_product(a.counit, b.counit);
    return r;
}

Algebra tensor_algebra(const Algebra& a, const Algebra& b)
{
    Algebra r;
    r.dim = a.dim * b.dim;
    r.mult = tensor_product(a.mult, b.mult) * permutation_map({a.dim, b.dim, a.dim, b.dim}, {0, 2, 1, 3});
    r.unit = tensor_product(a.unit_map(), b.unit_map()).column(0);
    return r;
}

Algebra matrix_algebra(std::size_t n)
{
    Algebra a;
    a.dim = n * n;
    a.mult = LinearMap(n * n, n * n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l)
                a.mult(i * n + l, (i * n + j) * n * n + (j * n + l)) = 1;
    a.unit = Vec(n * n);
    for (std::size_t i = 0; i < n; ++i)
        a.unit[i * n + i] = 1;
    return a;
}

Coalgebra trivial_coalgebra()
{
    return grouplike_coalgebra(1);
}

Coalgebra grouplike_coalgebra(std::size_t n)
{
    Coalgebra c;
    c.dim = n;
    c.comult = LinearMap(n * n, n);
    c.counit = LinearMap(1, n);
    for (std::size_t i = 0; i < n; ++i) {
        c.comult(i * n + i, i) = 1;
        c.counit(0, i) = 1;
    }
    return c;
}

Coalgebra comatrix_coalgebra(std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("comatrix coalgebra needs n >= 1");
    Coalgebra c;
    c.dim = n * n;
    c.comult = LinearMap(n * n * n * n, n * n);
    c.counit = LinearMap(1, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k)
                c.comult((i * n + k) * n * n + (k * n + j), i * n + j) = 1;
            if (i == j)
                c.counit(0, i * n + j) = 1;
        }
    return c;
}

void validate_groupoid(Groupoid& g)
{
    std::size_t n = g.arrows();
    if (g.tgt.size() != n || g.comp.size() != n)
        throw std::invalid_argument("groupoid: arrow data of inconsistent length");
    for (std::size_t a = 0; a < n; ++a) {
        if (g.src[a] >= g.objects || g.tgt[a] >= g.objects)
            throw std::invalid_argument("groupoid: arrow " + std::to_string(a) + " has an unknown endpoint");
        if (g.comp[a].size() != n)
            throw std::invalid_argument("groupoid: composition table is not square");
        for (std::size_t b = 0; b < n; ++b) {
            bool composable = g.src[a] == g.tgt[b];
            if (composable != g.comp[a][b].has_value())
                throw std::invalid_argument("groupoid: composition defined exactly on composable pairs fails at (" +
                                            std::to_string(a) + "," + std::to_string(b) + ")");
            if (composable) {
                std::size_t c = *g.comp[a][b];
                if (c >= n || g.src[c] != g.src[b] || g.tgt[c] != g.tgt[a])
                    throw std::invalid_argument("groupoid: composite (" + std::to_string(a) + "," +
                                                std::to_string(b) + ") has wrong endpoints");
            }
        }
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (g.comp[a][b] && g.comp[b][c] && *g.comp[*g.comp[a][b]][c] != *g.comp[a][*g.comp[b][c]])
                    throw std::invalid_argument("groupoid: not associative at (" + std::to_string(a) + "," +
                                                std::to_string(b) + "," + std::to_string(c) + ")");
    g.identity.assign(g.objects, n);
    for (std::size_t x = 0; x < g.objects; ++x)
        for (std::size_t a = 0; a < n; ++a) {
            if (g.src[a] != x || g.tgt[a] != x)
                continue;
            bool unit = true;
            for (std::size_t b = 0; b < n; ++b) {
                if (g.tgt[b] == x && *g.comp[a][b] != b)
                    unit = false;
                if (g.src[b] == x && *g.comp[b][a] != b)
                    unit = false;
            }
            if (unit) {
                g.identity[x] = a;
                break;
            }
        }
    for (std::size_t x = 0; x < g.objects; ++x)
        if (g.identity[x] == n)
            throw std::invalid_argument("groupoid: object " + std::to_string(x) + " has no identity");
    g.inverse.assign(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (g.comp[a][b] && g.comp[b][a] && *g.comp[a][b] == g.identity[g.tgt[a]] &&
                *g.comp[b][a] == g.identity[g.src[a]]) {
                g.inverse[a] = b;
                break;
            }
    for (std::size_t a = 0; a < n; ++a)
        if (g.inverse[a] == n)
            throw std::invalid_argument("groupoid: arrow " + std::to_string(a) + " has no inverse");
}

Coalgebra groupoid_coalgebra(const Groupoid& g)
{
    return grouplike_coalgebra(g.arrows());
}

bool is_algebra_map(const LinearMap& f, const Algebra& a, const Algebra& b)
{
    if (f.cols() != a.dim || f.rows() != b.dim)
        return false;
    if (f.apply(a.unit) != b.unit)
        return false;
    return f * a.mult == b.mult * tensor_product(f, f);
}

bool is_coalgebra_map(const LinearMap& f, const Coalgebra& c, const Coalgebra& d)
{
    if (f.cols() != c.dim || f.rows() != d.dim)
        return false;
    if (d.counit * f != c.counit)
        return false;
    Pipe l(c.dim), r(c.dim);
    l.map(0, f).split(0, d.comult);
    r.split(0, c.comult).map(0, f).map(1, f);
    return l.value() == r.value();
}

bool is_anti_coalgebra_map(const LinearMap& f, const Coalgebra& c, const Coalgebra& d)
{
    return is_coalgebra_map(f, coopposite(c), d);
}

bool is_hopf_map(const LinearMap& f, const HopfAlgebra& h, const HopfAlgebra& k)
{
    return is_algebra_map(f, h.alg, k.alg) && is_coalgebra_map(f, h.coalg, k.coalg) &&
           f * h.S() == k.S() * f;
}

std::optional<LinearMap> h4_self_duality()
{
    HopfAlgebra h = sweedler_h4();
    HopfAlgebra d = dual_hopf(h);
    const std::size_t n = 4;
    Vec eps = d.alg.unit;
    // χ: the character with χ(g) = -1
    Vec chi = {1, -1, 0, 0};
    // ξ with Δ(ξ) = χ⊗ξ + ξ⊗ε, solved as a kernel.
    LinearMap eq = d.delta() - tensor_product(LinearMap::column_vector(chi), LinearMap::identity(n)) -
                   tensor_product(LinearMap::identity(n), LinearMap::column_vector(eps));
    Subspace k = kernel(eq);
    Subspace trivial = Subspace::span(n, {chi - eps});
    for (const auto& xi : k.basis()) {
        if (trivial.contains(xi))
            continue;
        LinearMap f(n, n);
        f.set_column(0, eps);
        f.set_column(1, chi);
        f.set_column(2, xi);
        f.set_column(3, d.alg.multiply(xi, chi));
        if (is_hopf_map(f, h, d) && rank(f) == n)
            return f;
    }
    return std::nullopt;
}

}  // namespace hopfpar
