#pragma once

#include <map>
#include <vector>

#include "puritydyn/circuit.hpp"

namespace puritydyn::markov {

// Jordan structure of the zero eigenvalue of the transfer matrix restricted
// to the spin-flip-even sector: block sizes with multiplicities, recovered
// from exact ranks of matrix powers (Weyr characteristic).
struct KernelCensus {
    std::map<int, int> blocks;   // block size -> count
    long algebraic = 0;          // multiplicity of eigenvalue 0
    long geometric = 0;          // kernel dimension
    long nonzero_count = 0;      // dimension left after the nilpotent part dies
    std::vector<long> ranks;     // rank(M_even^p), p = 0, 1, ...
};

// Exact census for the staircase transfer matrix on n sites (n even).
// Everything is integer arithmetic: the 2-site matrices scaled by d^2+1.
KernelCensus even_sector_kernel_census(int n, int d, Protocol protocol = Protocol::kStaircase);

}  // namespace puritydyn::markov
