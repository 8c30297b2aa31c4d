#include "hopfpar/json_io.hpp"

namespace hopfpar {

namespace {

const json& field(const json& j, const char* key, const std::string& where)
{
    if (!j.is_object())
        throw InputError((where.empty() ? std::string("/") : where) + ": expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw InputError((where.empty() ? std::string("/") : where) + ": missing field \"" + key + "\"");
    return *it;
}

std::size_t dim_from_json(const json& j, const std::string& where)
{
    const json& d = field(j, "dim", where);
    if (!d.is_number_integer() || d.get<long long>() <= 0)
        throw InputError(where + "/dim: expected a positive integer");
    return d.get<std::size_t>();
}

void expect_array(const json& j, std::size_t n, const std::string& where)
{
    if (!j.is_array())
        throw InputError(where + ": expected an array");
    if (j.size() != n)
        throw InputError(where + ": expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
}

}  // namespace

Scalar scalar_from_json(const json& j, const std::string& where)
{
    if (j.is_number_integer())
        return Scalar(j.get<long>());
    if (!j.is_string())
        throw InputError(where + ": expected a \"p/q\" string");
    try {
        return parse_scalar(j.get<std::string>());
    } catch (const std::exception& e) {
        throw InputError(where + ": " + e.what());
    }
}

json scalar_to_json(const Scalar& s)
{
    return to_string(s);
}

Vec vec_from_json(const json& j, std::size_t expected, const std::string& where)
{
    expect_array(j, expected, where);
    Vec v(expected);
    for (std::size_t i = 0; i < expected; ++i)
        v[i] = scalar_from_json(j[i], where + "/" + std::to_string(i));
    return v;
}

LinearMap matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& where)
{
    expect_array(j, rows, where);
    LinearMap f(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        Vec row = vec_from_json(j[r], cols, where + "/" + std::to_string(r));
        for (std::size_t c = 0; c < cols; ++c)
            f(r, c) = row[c];
    }
    return f;
}

json matrix_to_json(const LinearMap& f)
{
    return map_to_json(f);
}

Algebra algebra_from_json(const json& j, const std::string& where)
{
    Algebra a;
    a.dim = dim_from_json(j, where);
    std::size_t d = a.dim;
    const json& m = field(j, "mult", where);
    expect_array(m, d, where + "/mult");
    a.mult = LinearMap(d, d * d);
    for (std::size_t k = 0; k < d; ++k) {
        LinearMap slice = matrix_from_json(m[k], d, d, where + "/mult/" + std::to_string(k));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t l = 0; l < d; ++l)
                a.mult(k, i * d + l) = slice(i, l);
    }
    a.unit = vec_from_json(field(j, "unit", where), d, where + "/unit");
    return a;
}

json algebra_to_json(const Algebra& a)
{
    json j;
    j["dim"] = a.dim;
    json m = json::array();
    for (std::size_t k = 0; k < a.dim; ++k) {
        LinearMap slice(a.dim, a.dim);
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t l = 0; l < a.dim; ++l)
                slice(i, l) = a.mult(k, i * a.dim + l);
        m.push_back(matrix_to_json(slice));
    }
    j["mult"] = m;
    j["unit"] = vec_to_json(a.unit);
    return j;
}

Coalgebra coalgebra_from_json(const json& j, const std::string& where)
{
    Coalgebra c;
    c.dim = dim_from_json(j, where);
    std::size_t d = c.dim;
    const json& m = field(j, "comult", where);
    expect_array(m, d, where + "/comult");
    c.comult = LinearMap(d * d, d);
    for (std::size_t i = 0; i < d; ++i) {
        LinearMap slice = matrix_from_json(m[i], d, d, where + "/comult/" + std::to_string(i));
        for (std::size_t l = 0; l < d; ++l)
            for (std::size_t k = 0; k < d; ++k)
                c.comult(i * d + l, k) = slice(l, k);
    }
    c.counit = LinearMap::row_vector(vec_from_json(field(j, "counit", where), d, where + "/counit"));
    return c;
}

json coalgebra_to_json(const Coalgebra& c)
{
    json j;
    j["dim"] = c.dim;
    json m = json::array();
    for (std::size_t i = 0; i < c.dim; ++i) {
        LinearMap slice(c.dim, c.dim);
        for (std::size_t l = 0; l < c.dim; ++l)
            for (std::size_t k = 0; k < c.dim; ++k)
                slice(l, k) = c.comult(i * c.dim + l, k);
        m.push_back(matrix_to_json(slice));
    }
    j["comult"] = m;
    j["counit"] = vec_to_json(c.counit.row(0));
    return j;
}

HopfAlgebra hopf_from_json(const json& j, const std::string& where)
{
    HopfAlgebra h;
    h.alg = algebra_from_json(j, where);
    h.coalg = coalgebra_from_json(j, where);
    std::size_t d = h.alg.dim;
    h.antipode = matrix_from_json(field(j, "antipode", where), d, d, where + "/antipode");
    if (j.contains("antipode_inverse"))
        h.antipode_inverse = matrix_from_json(j["antipode_inverse"], d, d, where + "/antipode_inverse");
    if (j.contains("name") && j["name"].is_string())
        h.name = j["name"].get<std::string>();
    else
        h.name = "H";
    if (j.contains("labels")) {
        expect_array(j["labels"], d, where + "/labels");
        for (const auto& l : j["labels"]) {
            if (!l.is_string())
                throw InputError(where + "/labels: expected strings");
            h.labels.push_back(l.get<std::string>());
        }
    }
    return h;
}

json hopf_to_json(const HopfAlgebra& h)
{
    json j;
    j["name"] = h.name;
    j["dim"] = h.dim();
    if (!h.labels.empty())
        j["labels"] = h.labels;
    json a = algebra_to_json(h.alg);
    json c = coalgebra_to_json(h.coalg);
    j["mult"] = a["mult"];
    j["unit"] = a["unit"];
    j["comult"] = c["comult"];
    j["counit"] = c["counit"];
    j["antipode"] = matrix_to_json(h.antipode);
    if (h.antipode_inverse)
        j["antipode_inverse"] = matrix_to_json(*h.antipode_inverse);
    return j;
}

}  // namespace hopfpar
