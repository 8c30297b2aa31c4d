#include "hopfpar/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace hopfpar {

std::string to_string(const Scalar& s)
{
    return s.get_num().get_str() + "/" + s.get_den().get_str();
}

Scalar parse_scalar(const std::string& text)
{
    std::string t;
    for (char c : text)
        if (c != ' ')
            t.push_back(c);
    if (t.empty())
        throw std::invalid_argument("empty rational");
    auto slash = t.find('/');
    auto valid_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i >= s.size())
            return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                return false;
        return true;
    };
    std::string num = t.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (!num.empty() && num[0] == '+')
        num = num.substr(1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-')
        throw std::invalid_argument("malformed rational '" + text + "'");
    mpz_class n(num), d(den);
    if (d == 0)
        throw std::invalid_argument("zero denominator in '" + text + "'");
    Scalar q(n, d);
    q.canonicalize();
    return q;
}

std::size_t product(const std::vector<std::size_t>& dims)
{
    std::size_t p = 1;
    for (auto d : dims)
        p *= d;
    return p;
}

// ---------------------------------------------------------------- Tensor

Tensor::Tensor(std::vector<std::size_t> shape) : shape_(std::move(shape)), data_(product(shape_)) {}

std::size_t Tensor::flat_index(const std::vector<std::size_t>& idx) const
{
    if (idx.size() != shape_.size())
        throw DimensionError("tensor index rank mismatch");
    std::size_t f = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= shape_[i])
            throw DimensionError("tensor index out of range");
        f = f * shape_[i] + idx[i];
    }
    return f;
}

std::vector<std::size_t> Tensor::multi_index(std::size_t flat) const
{
    std::vector<std::size_t> idx(shape_.size());
    for (std::size_t i = shape_.size(); i-- > 0;) {
        idx[i] = flat % shape_[i];
        flat /= shape_[i];
    }
    return idx;
}

Tensor outer(const Tensor& a, const Tensor& b)
{
    std::vector<std::size_t> shape = a.shape();
    shape.insert(shape.end(), b.shape().begin(), b.shape().end());
    Tensor t(shape);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            t[i * b.size() + j] = a[i] * b[j];
    return t;
}

Tensor contract(const Tensor& t, const std::vector<std::pair<std::size_t, std::size_t>>& axes)
{
    std::vector<bool> used(t.rank(), false);
    for (auto [a, b] : axes) {
        if (a >= t.rank() || b >= t.rank() || a == b || used[a] || used[b])
            throw DimensionError("bad contraction axes");
        if (t.shape()[a] != t.shape()[b])
            throw DimensionError("contracted axes differ in dimension");
        used[a] = used[b] = true;
    }
    std::vector<std::size_t> keep;
    std::vector<std::size_t> shape;
    for (std::size_t i = 0; i < t.rank(); ++i)
        if (!used[i]) {
            keep.push_back(i);
            shape.push_back(t.shape()[i]);
        }
    Tensor r(shape);
    for (std::size_t f = 0; f < t.size(); ++f) {
        auto idx = t.multi_index(f);
        bool diag = true;
        for (auto [a, b] : axes)
            if (idx[a] != idx[b]) {
                diag = false;
                break;
            }
        if (!diag || sgn(t[f]) == 0)
            continue;
        std::vector<std::size_t> out;
        for (auto k : keep)
            out.push_back(idx[k]);
        r.at(out) += t[f];
    }
    return r;
}

Tensor flip(const Tensor& t, const std::vector<std::size_t>& perm)
{
    if (perm.size() != t.rank())
        throw DimensionError("flip permutation has wrong length");
    std::vector<std::size_t> shape(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        shape[i] = t.shape().at(perm[i]);
    Tensor r(shape);
    for (std::size_t f = 0; f < r.size(); ++f) {
        auto idx = r.multi_index(f);
        std::vector<std::size_t> src(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i)
            src[perm[i]] = idx[i];
        r[f] = t.at(src);
    }
    return r;
}

// ---------------------------------------------------------------- LinearMap

LinearMap::LinearMap(std::size_t codomain_dim, std::size_t domain_dim)
    : rows_(codomain_dim), cols_(domain_dim), a_(codomain_dim * domain_dim)
{
}

LinearMap LinearMap::identity(std::size_t n)
{
    LinearMap m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

LinearMap LinearMap::zero(std::size_t codomain_dim, std::size_t domain_dim)
{
    return LinearMap(codomain_dim, domain_dim);
}

LinearMap LinearMap::from_columns(std::size_t codomain_dim, const std::vector<Vec>& cols)
{
    LinearMap m(codomain_dim, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        m.set_column(c, cols[c]);
    return m;
}

LinearMap LinearMap::from_tensor(const Tensor& t)
{
    if (t.rank() != 2)
        throw DimensionError("matrix tensor must have rank 2");
    LinearMap m(t.shape()[0], t.shape()[1]);
    for (std::size_t i = 0; i < t.size(); ++i)
        m.a_[i] = t[i];
    return m;
}

LinearMap LinearMap::column_vector(const Vec& v)
{
    return from_columns(v.size(), {v});
}

LinearMap LinearMap::row_vector(const Vec& v)
{
    LinearMap m(1, v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        m(0, i) = v[i];
    return m;
}

LinearMap LinearMap::operator*(const LinearMap& g) const
{
    if (cols_ != g.rows_)
        throw DimensionError("composition: " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                             " after " + std::to_string(g.rows_) + "x" + std::to_string(g.cols_));
    LinearMap r(rows_, g.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& x = (*this)(i, k);
            if (sgn(x) == 0)
                continue;
            const Scalar* grow = &g.a_[k * g.cols_];
            Scalar* rrow = &r.a_[i * g.cols_];
            for (std::size_t j = 0; j < g.cols_; ++j)
                if (sgn(grow[j]) != 0)
                    rrow[j] += x * grow[j];
        }
    return r;
}

LinearMap LinearMap::operator+(const LinearMap& g) const
{
    if (rows_ != g.rows_ || cols_ != g.cols_)
        throw DimensionError("sum of maps with different shapes");
    LinearMap r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i)
        r.a_[i] += g.a_[i];
    return r;
}

LinearMap LinearMap::operator-(const LinearMap& g) const
{
    if (rows_ != g.rows_ || cols_ != g.cols_)
        throw DimensionError("difference of maps with different shapes");
    LinearMap r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i)
        r.a_[i] -= g.a_[i];
    return r;
}

LinearMap LinearMap::scaled(const Scalar& s) const
{
    LinearMap r = *this;
    for (auto& x : r.a_)
        x *= s;
    return r;
}

Vec LinearMap::apply(const Vec& v) const
{
    if (v.size() != cols_)
        throw DimensionError("apply: vector length mismatch");
    Vec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
            if (sgn(v[k]) != 0 && sgn((*this)(i, k)) != 0)
                r[i] += (*this)(i, k) * v[k];
    return r;
}

Vec LinearMap::column(std::size_t c) const
{
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, c);
    return v;
}

Vec LinearMap::row(std::size_t r) const
{
    return Vec(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
}

void LinearMap::set_column(std::size_t c, const Vec& v)
{
    if (v.size() != rows_)
        throw DimensionError("set_column: length mismatch");
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, c) = v[i];
}

LinearMap LinearMap::select_columns(const std::vector<std::size_t>& idx) const
{
    LinearMap r(rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (std::size_t i = 0; i < rows_; ++i)
            r(i, j) = (*this)(i, idx[j]);
    return r;
}

LinearMap LinearMap::transpose() const
{
    LinearMap r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r(j, i) = (*this)(i, j);
    return r;
}

Tensor LinearMap::as_tensor() const
{
    Tensor t({rows_, cols_});
    for (std::size_t i = 0; i < a_.size(); ++i)
        t[i] = a_[i];
    return t;
}

bool LinearMap::is_zero() const
{
    return std::all_of(a_.begin(), a_.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

std::optional<std::size_t> LinearMap::first_nonzero_column() const
{
    for (std::size_t c = 0; c < cols_; ++c)
        for (std::size_t r = 0; r < rows_; ++r)
            if (sgn((*this)(r, c)) != 0)
                return c;
    return std::nullopt;
}

bool is_zero(const Vec& v)
{
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

Vec operator+(const Vec& a, const Vec& b)
{
    if (a.size() != b.size())
        throw DimensionError("vector sum length mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b)
{
    if (a.size() != b.size())
        throw DimensionError("vector difference length mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] -= b[i];
    return r;
}

Vec scaled(const Vec& v, const Scalar& s)
{
    Vec r = v;
    for (auto& x : r)
        x *= s;
    return r;
}

Vec unit_vector(std::size_t n, std::size_t i)
{
    Vec v(n);
    v.at(i) = 1;
    return v;
}

// ---------------------------------------------------------------- echelon forms

std::vector<std::size_t> rref(std::vector<Vec>& rows, std::size_t ncols)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && sgn(rows[p][c]) == 0)
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[r], rows[p]);
        Scalar inv = 1 / rows[r][c];
        for (std::size_t j = c; j < ncols; ++j)
            if (sgn(rows[r][j]) != 0)
                rows[r][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || sgn(rows[i][c]) == 0)
                continue;
            Scalar f = rows[i][c];
            for (std::size_t j = c; j < ncols; ++j)
                if (sgn(rows[r][j]) != 0)
                    rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vectors)
{
    Subspace s(ambient_dim);
    std::vector<Vec> rows;
    for (const auto& v : vectors) {
        if (v.size() != ambient_dim)
            throw DimensionError("span: vector length mismatch");
        if (!is_zero(v))
            rows.push_back(v);
    }
    s.pivots_ = rref(rows, ambient_dim);
    s.basis_ = std::move(rows);
    return s;
}

Subspace Subspace::span_columns(const LinearMap& m)
{
    std::vector<Vec> cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        cols.push_back(m.column(c));
    return span(m.rows(), cols);
}

Subspace Subspace::full(std::size_t n)
{
    Subspace s(n);
    for (std::size_t i = 0; i < n; ++i) {
        s.basis_.push_back(unit_vector(n, i));
        s.pivots_.push_back(i);
    }
    return s;
}

Vec Subspace::coordinates(const Vec& v) const
{
    Vec c(basis_.size());
    for (std::size_t i = 0; i < pivots_.size(); ++i)
        c[i] = v.at(pivots_[i]);
    return c;
}

bool Subspace::contains(const Vec& v) const
{
    if (v.size() != ambient_)
        throw DimensionError("membership: vector length mismatch");
    Vec r = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        Scalar f = r[pivots_[i]];
        if (sgn(f) == 0)
            continue;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (sgn(basis_[i][j]) != 0)
                r[j] -= f * basis_[i][j];
    }
    return is_zero(r);
}

bool Subspace::contains(const Subspace& w) const
{
    return std::all_of(w.basis_.begin(), w.basis_.end(), [&](const Vec& v) { return contains(v); });
}

LinearMap Subspace::basis_matrix() const
{
    return LinearMap::from_columns(ambient_, basis_);
}

LinearMap Subspace::coordinate_map() const
{
    LinearMap m(basis_.size(), ambient_);
    for (std::size_t i = 0; i < pivots_.size(); ++i)
        m(i, pivots_[i]) = 1;
    return m;
}

Subspace Subspace::sum(const Subspace& w) const
{
    std::vector<Vec> all = basis_;
    all.insert(all.end(), w.basis_.begin(), w.basis_.end());
    return span(ambient_, all);
}

Subspace Subspace::intersect(const Subspace& w) const
{
    if (w.ambient_ != ambient_)
        throw DimensionError("intersection of subspaces in different spaces");
    // Solve sum a_i u_i = sum b_j w_j.
    std::size_t n = basis_.size() + w.basis_.size();
    LinearMap m(ambient_, n);
    for (std::size_t i = 0; i < basis_.size(); ++i)
        m.set_column(i, basis_[i]);
    for (std::size_t j = 0; j < w.basis_.size(); ++j)
        m.set_column(basis_.size() + j, scaled(w.basis_[j], -1));
    Subspace k = kernel(m);
    std::vector<Vec> vs;
    for (const auto& c : k.basis()) {
        Vec v(ambient_);
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (sgn(c[i]) != 0)
                v = v + scaled(basis_[i], c[i]);
        vs.push_back(v);
    }
    return span(ambient_, vs);
}

Subspace kernel(const LinearMap& f)
{
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < f.rows(); ++r) {
        Vec v = f.row(r);
        if (!is_zero(v))
            rows.push_back(std::move(v));
    }
    auto piv = rref(rows, f.cols());
    std::vector<bool> is_piv(f.cols(), false);
    for (auto p : piv)
        is_piv[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < f.cols(); ++free) {
        if (is_piv[free])
            continue;
        Vec v(f.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i)
            v[piv[i]] = -rows[i][free];
        basis.push_back(std::move(v));
    }
    return Subspace::span(f.cols(), basis);
}

Subspace image(const LinearMap& f)
{
    return Subspace::span_columns(f);
}

std::size_t rank(const LinearMap& f)
{
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < f.rows(); ++r)
        rows.push_back(f.row(r));
    return rref(rows, f.cols()).size();
}

Quotient quotient(std::size_t v_dim, const Subspace& w)
{
    if (w.ambient_dim() != v_dim)
        throw DimensionError("quotient: ambient dimension mismatch");
    std::vector<bool> is_piv(v_dim, false);
    for (auto p : w.pivots())
        is_piv[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < v_dim; ++i)
        if (!is_piv[i])
            free.push_back(i);
    Quotient q;
    q.dim = free.size();
    q.section = LinearMap(v_dim, q.dim);
    for (std::size_t j = 0; j < free.size(); ++j)
        q.section(free[j], j) = 1;
    // v -> (v - sum v[pivot_i] w_i) restricted to free coordinates
    q.projection = LinearMap(q.dim, v_dim);
    for (std::size_t c = 0; c < v_dim; ++c) {
        Vec v = unit_vector(v_dim, c);
        for (std::size_t i = 0; i < w.dim(); ++i) {
            Scalar f = v[w.pivots()[i]];
            if (sgn(f) != 0)
                v = v - scaled(w.basis()[i], f);
        }
        for (std::size_t j = 0; j < free.size(); ++j)
            q.projection(j, c) = v[free[j]];
    }
    return q;
}

LinearMap tensor_product(const LinearMap& f, const LinearMap& g)
{
    LinearMap r(f.rows() * g.rows(), f.cols() * g.cols());
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j) {
            const Scalar& x = f(i, j);
            if (sgn(x) == 0)
                continue;
            for (std::size_t k = 0; k < g.rows(); ++k)
                for (std::size_t l = 0; l < g.cols(); ++l)
                    if (sgn(g(k, l)) != 0)
                        r(i * g.rows() + k, j * g.cols() + l) = x * g(k, l);
        }
    return r;
}

LinearMap tensor_product(const std::vector<LinearMap>& fs)
{
    LinearMap r = LinearMap::identity(1);
    for (const auto& f : fs)
        r = tensor_product(r, f);
    return r;
}

std::optional<LinearMap> solve(const LinearMap& a, const LinearMap& b)
{
    if (a.rows() != b.rows())
        throw DimensionError("solve: row count mismatch");
    std::size_t n = a.cols(), m = b.cols();
    std::vector<Vec> rows(a.rows(), Vec(n + m));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j)
            rows[i][j] = a(i, j);
        for (std::size_t j = 0; j < m; ++j)
            rows[i][n + j] = b(i, j);
    }
    auto piv = rref(rows, n + m);
    LinearMap x(n, m);
    for (std::size_t i = 0; i < piv.size(); ++i) {
        if (piv[i] >= n)
            return std::nullopt;
        for (std::size_t j = 0; j < m; ++j)
            x(piv[i], j) = rows[i][n + j];
    }
    return x;
}

std::optional<LinearMap> inverse(const LinearMap& a)
{
    if (a.rows() != a.cols())
        return std::nullopt;
    if (rank(a) != a.rows())
        return std::nullopt;
    return solve(a, LinearMap::identity(a.rows()));
}

LinearMap permutation_map(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& order)
{
    std::size_t k = dims.size();
    if (order.size() != k)
        throw DimensionError("permutation length mismatch");
    std::vector<std::size_t> new_dims(k);
    for (std::size_t i = 0; i < k; ++i)
        new_dims[i] = dims.at(order[i]);
    std::size_t total = product(dims);
    LinearMap p(total, total);
    std::vector<std::size_t> idx(k), out(k);
    for (std::size_t f = 0; f < total; ++f) {
        std::size_t rem = f;
        for (std::size_t i = k; i-- > 0;) {
            idx[i] = rem % dims[i];
            rem /= dims[i];
        }
        std::size_t g = 0;
        for (std::size_t i = 0; i < k; ++i)
            g = g * new_dims[i] + idx[order[i]];
        p(g, f) = 1;
    }
    return p;
}

LinearMap flip_map(std::size_t a, std::size_t b)
{
    return permutation_map({a, b}, {1, 0});
}

}  // namespace hopfpar
