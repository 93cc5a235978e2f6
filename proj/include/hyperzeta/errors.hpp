#pragma once

#include <stdexcept>
#include <string>

namespace hyperzeta {

// Budget exhausted or a tail bound could not be met at the requested tolerance.
class NonConvergence : public std::runtime_error {
public:
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation requested exactly at a non-integrable singularity or a divergent
// configuration (e.g. the tanh density at the origin for order <= 1).
class SingularityError : public std::domain_error {
public:
    explicit SingularityError(const std::string& what) : std::domain_error(what) {}
};

} // namespace hyperzeta
