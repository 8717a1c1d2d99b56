#include "pcgen/error_lab.hpp"

#include <cmath>
#include <stdexcept>

namespace pcgen {

namespace {

// SplitMix64 finalizer (Steele/Lea/Flood), used here as a keyed hash: one
// independent uniform draw per (seed, trial, k), so results never depend
// on evaluation order or on how many trials run in total.
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double unit_uniform(std::uint64_t seed, int trial, int k) {
    std::uint64_t h = mix64(seed);
    h = mix64(h ^ (0xA0761D6478BD642FULL * static_cast<std::uint64_t>(trial + 1)));
    h = mix64(h ^ (0xE7037ED1A0B428DBULL * static_cast<std::uint64_t>(k + 1)));
    return static_cast<double>(h >> 11) * 0x1.0p-53;  // [0, 1)
}

}  // namespace

const char* to_string(PerturbMode m) {
    return m == PerturbMode::WorstCase ? "worst" : "random";
}

void validate(const PerturbationSpec& spec) {
    if (!(spec.epsilon >= 0.0) || spec.epsilon >= 1.0) {
        throw std::domain_error("epsilon must satisfy 0 <= epsilon < 1");
    }
    if (spec.trials < 1) throw std::domain_error("trials must be positive");
}

PrincipalGenerators perturb_pgs(const PrincipalGenerators& p, const PerturbationSpec& spec,
                                int trial) {
    validate(spec);
    std::vector<double> values = p.values();
    if (spec.mode == PerturbMode::WorstCase) {
        for (double& v : values) v *= 1.0 + spec.epsilon;
    } else {
        for (std::size_t k = 0; k < values.size(); ++k) {
            const double u = unit_uniform(spec.seed, trial, static_cast<int>(k));
            values[k] *= 1.0 - spec.epsilon + 2.0 * spec.epsilon * u;
        }
    }
    return PrincipalGenerators(p.order(), std::move(values));
}

double worst_corner_error(int n, double epsilon) {
    if (n < 2) throw std::domain_error("order must be at least 2");
    if (!(epsilon >= 0.0) || epsilon >= 1.0) {
        throw std::domain_error("epsilon must satisfy 0 <= epsilon < 1");
    }
    return std::pow(1.0 + epsilon, n - 1) - 1.0;
}

ErrorReport propagate(const PrincipalGenerators& p, const PerturbationSpec& spec) {
    validate(spec);
    const int n = p.order();
    const PCMatrix reference = reconstruct_from_pgs(p);

    ErrorReport report;
    report.n = n;
    report.entrywise_max.assign(static_cast<std::size_t>(n) * n, 0.0);

    const int trials = spec.mode == PerturbMode::WorstCase ? 1 : spec.trials;
    for (int trial = 0; trial < trials; ++trial) {
        const PCMatrix perturbed = reconstruct_from_pgs(perturb_pgs(p, spec, trial));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                const double err = std::abs(perturbed(i, j) / reference(i, j) - 1.0);
                double& cell = report.entrywise_max[static_cast<std::size_t>(i) * n + j];
                if (err > cell) cell = err;
            }
        }
    }

    report.corner_error = report.entrywise_max[static_cast<std::size_t>(n - 1)];  // (0, n-1)
    report.argmax_row = 0;
    report.argmax_col = 0;
    double best = -1.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double err = report.entrywise_max[static_cast<std::size_t>(i) * n + j];
            if (err > best) {
                best = err;
                report.argmax_row = i;
                report.argmax_col = j;
            }
        }
    }
    return report;
}

}  // namespace pcgen
