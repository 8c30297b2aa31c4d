#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfpar {

using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

class DimensionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact "p/q" form, always with a denominator.
std::string to_string(const Scalar& s);
Scalar parse_scalar(const std::string& text);

class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<std::size_t> shape);

    const std::vector<std::size_t>& shape() const { return shape_; }
    std::size_t size() const { return data_.size(); }
    std::size_t rank() const { return shape_.size(); }

    std::size_t flat_index(const std::vector<std::size_t>& idx) const;
    std::vector<std::size_t> multi_index(std::size_t flat) const;

    Scalar& at(const std::vector<std::size_t>& idx) { return data_[flat_index(idx)]; }
    const Scalar& at(const std::vector<std::size_t>& idx) const { return data_[flat_index(idx)]; }
    Scalar& operator[](std::size_t flat) { return data_[flat]; }
    const Scalar& operator[](std::size_t flat) const { return data_[flat]; }

    bool operator==(const Tensor& other) const = default;

private:
    std::vector<std::size_t> shape_;
    std::vector<Scalar> data_;
};

Tensor outer(const Tensor& a, const Tensor& b);
// Sums over each listed pair of axes (a trace); remaining axes keep their order.
Tensor contract(const Tensor& t, const std::vector<std::pair<std::size_t, std::size_t>>& axes);
// Axis permutation: axis i of the result is axis perm[i] of t.
Tensor flip(const Tensor& t, const std::vector<std::size_t>& perm);

// Matrix of shape [codomain_dim, domain_dim].
class LinearMap {
public:
    LinearMap() = default;
    LinearMap(std::size_t codomain_dim, std::size_t domain_dim);

    static LinearMap identity(std::size_t n);
    static LinearMap zero(std::size_t codomain_dim, std::size_t domain_dim);
    static LinearMap from_columns(std::size_t codomain_dim, const std::vector<Vec>& cols);
    static LinearMap from_tensor(const Tensor& t);
    static LinearMap column_vector(const Vec& v);
    static LinearMap row_vector(const Vec& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t codomain_dim() const { return rows_; }
    std::size_t domain_dim() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    LinearMap operator*(const LinearMap& g) const;
    LinearMap operator+(const LinearMap& g) const;
    LinearMap operator-(const LinearMap& g) const;
    LinearMap scaled(const Scalar& s) const;
    bool operator==(const LinearMap& g) const = default;

    Vec apply(const Vec& v) const;
    Vec column(std::size_t c) const;
    Vec row(std::size_t r) const;
    void set_column(std::size_t c, const Vec& v);
    LinearMap select_columns(const std::vector<std::size_t>& idx) const;
    LinearMap transpose() const;
    Tensor as_tensor() const;
    bool is_zero() const;
    // First column index where the map is nonzero, if any.
    std::optional<std::size_t> first_nonzero_column() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> a_;
};

bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec scaled(const Vec& v, const Scalar& s);
Vec unit_vector(std::size_t n, std::size_t i);

// Row-reduced basis; leading coefficient 1 and increasing pivot columns.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

    static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors);
    static Subspace span_columns(const LinearMap& m);
    static Subspace full(std::size_t n);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& w) const;
    // Coordinates w.r.t. the reduced basis; only meaningful for members.
    Vec coordinates(const Vec& v) const;
    LinearMap basis_matrix() const;     // ambient x dim
    LinearMap coordinate_map() const;   // dim x ambient, reads pivot entries
    Subspace intersect(const Subspace& w) const;
    Subspace sum(const Subspace& w) const;

    bool operator==(const Subspace& w) const = default;

private:
    std::size_t ambient_ = 0;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Vec>& rows, std::size_t ncols);

Subspace kernel(const LinearMap& f);
Subspace image(const LinearMap& f);
std::size_t rank(const LinearMap& f);

struct Quotient {
    std::size_t dim = 0;
    LinearMap projection;   // V -> V/W
    LinearMap section;      // V/W -> V
};
Quotient quotient(std::size_t v_dim, const Subspace& w);

LinearMap tensor_product(const LinearMap& f, const LinearMap& g);
LinearMap tensor_product(const std::vector<LinearMap>& fs);

// Some X with a*X = b, if one exists.
std::optional<LinearMap> solve(const LinearMap& a, const LinearMap& b);
std::optional<LinearMap> inverse(const LinearMap& a);

// Linear map on V_0 ⊗ ... ⊗ V_{k-1} sending factor order[i] to slot i.
LinearMap permutation_map(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& order);
LinearMap flip_map(std::size_t a, std::size_t b);

std::size_t product(const std::vector<std::size_t>& dims);

}  // namespace hopfpar
