#pragma once

#include "hopfpar/structures.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace hopfpar {

using json = nlohmann::ordered_json;

// Malformed input; the message carries a JSON-pointer style location.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Scalar scalar_from_json(const json& j, const std::string& where);
json scalar_to_json(const Scalar& s);
Vec vec_from_json(const json& j, std::size_t expected, const std::string& where);
LinearMap matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& where);
json matrix_to_json(const LinearMap& f);

// mult[k][i][j], unit[k]
Algebra algebra_from_json(const json& j, const std::string& where = "");
json algebra_to_json(const Algebra& a);
// comult[i][j][k], counit[k]
Coalgebra coalgebra_from_json(const json& j, const std::string& where = "");
json coalgebra_to_json(const Coalgebra& c);
HopfAlgebra hopf_from_json(const json& j, const std::string& where = "");
json hopf_to_json(const HopfAlgebra& h);

}  // namespace hopfpar
