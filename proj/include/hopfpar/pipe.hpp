#pragma once

#include "hopfpar/linalg.hpp"

#include <vector>

namespace hopfpar {

// A batch of vectors in V_0 ⊗ ... ⊗ V_{k-1}. Maps act on a run of adjacent
// factors without ever forming the Kronecker product, so long Sweedler
// expressions stay cheap.
class Pipe {
public:
    // Identity on a single factor of dimension d.
    explicit Pipe(std::size_t d);
    // Identity on V_0 ⊗ ... ⊗ V_{k-1}.
    explicit Pipe(std::vector<std::size_t> dims);
    // Columns of value are vectors in ⊗dims.
    Pipe(std::vector<std::size_t> dims, const LinearMap& value);

    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t factors() const { return dims_.size(); }
    std::size_t batch() const { return cols_.size(); }

    // Replace factors [pos, pos+count) by out_dims via f (f.cols() must equal
    // the product of the replaced dims, f.rows() the product of out_dims).
    Pipe& apply(std::size_t pos, std::size_t count, const LinearMap& f, std::vector<std::size_t> out_dims);
    // One factor in, one factor out.
    Pipe& map(std::size_t pos, const LinearMap& f);
    // One factor in, two out (comultiplication style).
    Pipe& split(std::size_t pos, const LinearMap& f, std::size_t a, std::size_t b);
    Pipe& split(std::size_t pos, const LinearMap& f);
    // Two factors in, one out.
    Pipe& merge(std::size_t pos, const LinearMap& f);
    // One factor in, none out (f is a row vector).
    Pipe& kill(std::size_t pos, const LinearMap& f);
    // Insert a new factor holding the vector v before position pos.
    Pipe& insert(std::size_t pos, const Vec& v);
    // New factor i is old factor order[i].
    Pipe& permute(const std::vector<std::size_t>& order);
    Pipe& swap(std::size_t i, std::size_t j);

    LinearMap value() const;

private:
    std::vector<std::size_t> dims_;
    std::vector<Vec> cols_;
};

}  // namespace hopfpar
