#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mrank {

/// Malformed or invalid input: bad files, out-of-range parameters, broken invariants.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The eigenvalue 1 of the transition matrix is not simple, so the ranking is undefined.
class MultiplicityError : public std::runtime_error {
public:
    explicit MultiplicityError(std::size_t multiplicity)
        : std::runtime_error("The multiplicity of the eigenvalue 1 is not one (found " +
                             std::to_string(multiplicity) + ")"),
          multiplicity_(multiplicity) {}

    std::size_t multiplicity() const noexcept { return multiplicity_; }

private:
    std::size_t multiplicity_;
};

/// Power iteration hit max_iterations; carries the last iterate.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(std::size_t iterations, double last_difference, std::vector<double> last_iterate)
        : std::runtime_error("power iteration did not converge after " + std::to_string(iterations) +
                             " iterations (last max difference " + std::to_string(last_difference) + ")"),
          iterations_(iterations),
          last_difference_(last_difference),
          last_iterate_(std::move(last_iterate)) {}

    std::size_t iterations() const noexcept { return iterations_; }
    double last_difference() const noexcept { return last_difference_; }
    const std::vector<double>& last_iterate() const noexcept { return last_iterate_; }

private:
    std::size_t iterations_;
    double last_difference_;
    std::vector<double> last_iterate_;
};

/// The eigenvalue-1 representative sums to zero and cannot be normalized.
class DegenerateEigenvector : public std::runtime_error {
public:
    DegenerateEigenvector() : std::runtime_error("degenerate eigenvector: entry sum is zero") {}
};

}  // namespace mrank
