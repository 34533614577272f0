#pragma once

#include <vector>

#include "puritydyn/bipartition.hpp"
#include "puritydyn/circuit.hpp"

namespace puritydyn::mc {

// Mean purity and standard error over R independent circuit realizations,
// per time t = 0..t_max and per requested cut.
struct PuritySeries {
    int d = 0;
    int n = 0;
    int realizations = 0;
    std::vector<int> cuts;               // contiguous cut positions k
    std::vector<std::vector<double>> mean;    // [t][cut index]
    std::vector<std::vector<double>> stderr_; // [t][cut index], 0 for R = 1
};

// Realization r draws its gates from the substream of (seed, r), so the
// aggregate is reproducible for any thread count.
PuritySeries mc_purity_series(const CircuitConfig& config, const std::vector<int>& cuts, int realizations);

}  // namespace puritydyn::mc
