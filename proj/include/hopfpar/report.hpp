#pragma once

#include "hopfpar/linalg.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hopfpar {

struct Check {
    std::string id;
    bool pass = true;
    std::vector<std::size_t> witness;   // multi-index of the first failing input
    Vec residual;                       // lhs - rhs at the witness
    std::string note;
};

struct VerificationReport {
    std::string subject;
    std::vector<std::string> header;    // interpretation notes
    std::vector<Check> checks;

    bool all_pass() const;
    std::size_t passed() const;
    std::size_t failed() const;
    const Check* find(const std::string& id) const;
    bool passed(const std::string& id) const;

    // Compare two maps column by column; domain_dims gives the factor
    // dimensions used to express the witness as a multi-index.
    Check& expect_equal(const std::string& id, const LinearMap& lhs, const LinearMap& rhs,
                        const std::vector<std::size_t>& domain_dims = {});
    Check& expect(const std::string& id, bool ok, const std::string& note = {});
    void absorb(const VerificationReport& other, const std::string& prefix = {});

    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

nlohmann::ordered_json vec_to_json(const Vec& v);
nlohmann::ordered_json map_to_json(const LinearMap& f);

}  // namespace hopfpar
