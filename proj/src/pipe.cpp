#include "hopfpar/pipe.hpp"

namespace hopfpar {

namespace {

struct SparseCol {
    std::vector<std::size_t> idx;
    std::vector<Scalar> val;
};

std::vector<SparseCol> sparse_columns(const LinearMap& f)
{
    std::vector<SparseCol> out(f.cols());
    for (std::size_t r = 0; r < f.rows(); ++r)
        for (std::size_t c = 0; c < f.cols(); ++c)
            if (sgn(f(r, c)) != 0) {
                out[c].idx.push_back(r);
                out[c].val.push_back(f(r, c));
            }
    return out;
}

}  // namespace

Pipe::Pipe(std::size_t d) : Pipe(std::vector<std::size_t>{d}) {}

Pipe::Pipe(std::vector<std::size_t> dims) : dims_(std::move(dims))
{
    std::size_t n = product(dims_);
    cols_.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        cols_.push_back(unit_vector(n, i));
}

Pipe::Pipe(std::vector<std::size_t> dims, const LinearMap& value) : dims_(std::move(dims))
{
    if (value.rows() != product(dims_))
        throw DimensionError("pipe value does not live in the stated tensor product");
    for (std::size_t c = 0; c < value.cols(); ++c)
        cols_.push_back(value.column(c));
}

Pipe& Pipe::apply(std::size_t pos, std::size_t count, const LinearMap& f, std::vector<std::size_t> out_dims)
{
    if (pos + count > dims_.size())
        throw DimensionError("pipe: factor range out of bounds");
    std::size_t left = 1, mid = 1, right = 1;
    for (std::size_t i = 0; i < pos; ++i)
        left *= dims_[i];
    for (std::size_t i = pos; i < pos + count; ++i)
        mid *= dims_[i];
    for (std::size_t i = pos + count; i < dims_.size(); ++i)
        right *= dims_[i];
    std::size_t out_mid = product(out_dims);
    if (f.cols() != mid || f.rows() != out_mid)
        throw DimensionError("pipe: map shape " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
                             " does not fit factors of total dimension " + std::to_string(mid));
    auto sp = sparse_columns(f);
    std::size_t new_total = left * out_mid * right;
    for (auto& col : cols_) {
        Vec out(new_total);
        for (std::size_t r = 0; r < col.size(); ++r) {
            if (sgn(col[r]) == 0)
                continue;
            std::size_t rr = r % right;
            std::size_t mm = (r / right) % mid;
            std::size_t ll = r / (right * mid);
            const auto& s = sp[mm];
            for (std::size_t t = 0; t < s.idx.size(); ++t)
                out[(ll * out_mid + s.idx[t]) * right + rr] += col[r] * s.val[t];
        }
        col = std::move(out);
    }
    dims_.erase(dims_.begin() + pos, dims_.begin() + pos + count);
    dims_.insert(dims_.begin() + pos, out_dims.begin(), out_dims.end());
    return *this;
}

Pipe& Pipe::map(std::size_t pos, const LinearMap& f)
{
    return apply(pos, 1, f, {f.rows()});
}

Pipe& Pipe::split(std::size_t pos, const LinearMap& f, std::size_t a, std::size_t b)
{
    return apply(pos, 1, f, {a, b});
}

Pipe& Pipe::split(std::size_t pos, const LinearMap& f)
{
    std::size_t d = dims_.at(pos);
    if (f.rows() != d * d)
        throw DimensionError("pipe split: expected a map into V⊗V");
    return apply(pos, 1, f, {d, d});
}

Pipe& Pipe::merge(std::size_t pos, const LinearMap& f)
{
    return apply(pos, 2, f, {f.rows()});
}

Pipe& Pipe::kill(std::size_t pos, const LinearMap& f)
{
    if (f.rows() != 1)
        throw DimensionError("pipe kill: expected a functional");
    return apply(pos, 1, f, {});
}

Pipe& Pipe::insert(std::size_t pos, const Vec& v)
{
    if (pos > dims_.size())
        throw DimensionError("pipe insert: position out of range");
    // A map from the empty product (dimension 1) to V, then reorder.
    if (pos == dims_.size()) {
        dims_.push_back(1);
        apply(pos, 1, LinearMap::column_vector(v), {v.size()});
        return *this;
    }
    // Fold the scalar into the factor at pos: k ⊗ V_pos -> V ⊗ V_pos.
    std::size_t d = dims_[pos];
    LinearMap f(v.size() * d, d);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0)
            for (std::size_t j = 0; j < d; ++j)
                f(i * d + j, j) = v[i];
    return apply(pos, 1, f, {v.size(), d});
}

Pipe& Pipe::permute(const std::vector<std::size_t>& order)
{
    if (order.size() != dims_.size())
        throw DimensionError("pipe permute: order has wrong length");
    std::size_t k = dims_.size();
    std::vector<std::size_t> new_dims(k);
    for (std::size_t i = 0; i < k; ++i)
        new_dims[i] = dims_.at(order[i]);
    // stride of old factor j in the new layout
    std::vector<std::size_t> new_stride(k, 1), where(k);
    for (std::size_t i = 0; i < k; ++i)
        where[order[i]] = i;
    for (std::size_t i = k; i-- > 1;)
        new_stride[i - 1] = new_stride[i] * new_dims[i];
    std::size_t total = product(dims_);
    std::vector<std::size_t> target(total);
    std::vector<std::size_t> idx(k, 0);
    for (std::size_t f = 0; f < total; ++f) {
        std::size_t g = 0;
        for (std::size_t j = 0; j < k; ++j)
            g += idx[j] * new_stride[where[j]];
        target[f] = g;
        for (std::size_t j = k; j-- > 0;) {
            if (++idx[j] < dims_[j])
                break;
            idx[j] = 0;
        }
    }
    for (auto& col : cols_) {
        Vec out(total);
        for (std::size_t f = 0; f < total; ++f)
            if (sgn(col[f]) != 0)
                out[target[f]] = col[f];
        col = std::move(out);
    }
    dims_ = std::move(new_dims);
    return *this;
}

Pipe& Pipe::swap(std::size_t i, std::size_t j)
{
    std::vector<std::size_t> order(dims_.size());
    for (std::size_t t = 0; t < order.size(); ++t)
        order[t] = t;
    std::swap(order.at(i), order.at(j));
    return permute(order);
}

LinearMap Pipe::value() const
{
    return LinearMap::from_columns(product(dims_), cols_);
}

}  // namespace hopfpar
