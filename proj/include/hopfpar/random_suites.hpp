#pragma once

#include "hopfpar/universal.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace hopfpar {

struct RandomOptions {
    std::uint64_t seed = 1;
    std::size_t count = 200;
    std::size_t max_summands = 3;
};

struct SuiteOutcome {
    std::string id;
    std::size_t total = 0;
    std::size_t agreed = 0;
    std::size_t valid = 0;                // candidates satisfying the axioms
    std::vector<std::string> failures;    // first few disagreements
    bool pass() const { return total > 0 && agreed == total; }
};

// Direct sums of one-dimensional comodules m -> m⊗h, h from `values`, moved by a
// random invertible base change. With `perturb` one entry of rho is shifted.
PartialComoduleCandidate random_comodule(const HopfAlgebra& h, const std::vector<Vec>& values, std::mt19937_64& rng,
                                         std::size_t max_summands, bool perturb);

// PCM, PC and PR equivalences, duality transport, comodule/corep round trips and
// round trips through comodules over H^par, on count candidates each.
std::vector<SuiteOutcome> run_random_suites(const UniversalCorepCoalgebra& u, const RandomOptions& opt = {});

}  // namespace hopfpar
