#ifndef PCGEN_ERROR_LAB_HPP
#define PCGEN_ERROR_LAB_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pcgen/matrix.hpp"
#include "pcgen/reconstruct.hpp"

namespace pcgen {

enum class PerturbMode {
    WorstCase,      // every generator scaled by 1+eps, deterministic
    RandomUniform,  // each generator scaled by an independent U[1-eps, 1+eps] draw
};

const char* to_string(PerturbMode m);

/// eps is a relative error magnitude (0.2 == 20%), 0 <= eps < 1.
/// seed/trials apply to random mode only; the random stream is indexed by
/// (seed, trial, k), so extending the trial count never reshuffles results
/// already produced.
struct PerturbationSpec {
    double epsilon = 0.0;
    PerturbMode mode = PerturbMode::WorstCase;
    std::uint64_t seed = 0;
    int trials = 1;
};

void validate(const PerturbationSpec& spec);  // throws std::domain_error

/// Scale each generator by its perturbation factor for the given trial.
/// Bitwise reproducible from (seed, trial, k) in random mode.
PrincipalGenerators perturb_pgs(const PrincipalGenerators& p, const PerturbationSpec& spec,
                                int trial);

/// Closed-form relative error of the far corner m(0,n-1) when every
/// generator carries +eps relative error: (1+eps)^(n-1) - 1. The corner is
/// the product of all n-1 generators, so the factors compound.
double worst_corner_error(int n, double epsilon);

/// Entrywise maximum relative errors |m'(i,j)/m(i,j) - 1| across trials.
struct ErrorReport {
    int n;
    std::vector<double> entrywise_max;  // n*n row-major, zero diagonal
    double corner_error;                // value at (0, n-1)
    int argmax_row;                     // first position attaining the global max, row-major
    int argmax_col;

    double at(int i, int j) const {
        return entrywise_max[static_cast<std::size_t>(i) * n + j];
    }
    double max_error() const { return at(argmax_row, argmax_col); }
};

/// Reconstruct from p, then from perturbed copies of p, and record the
/// entrywise maximum relative error. Worst-case mode is a single
/// deterministic evaluation with error (1+eps)^(j-i) - 1 at (i,j), i < j;
/// random mode runs spec.trials independent draws.
ErrorReport propagate(const PrincipalGenerators& p, const PerturbationSpec& spec);

}  // namespace pcgen

#endif  // PCGEN_ERROR_LAB_HPP
