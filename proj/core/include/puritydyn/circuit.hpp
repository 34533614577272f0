#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace puritydyn {

enum class Protocol { kStaircase, kBrickWall };
enum class GatePolicy { kIIDPerGateAndStep, kSingleRepeatedGate };

struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CircuitConfig {
    int d = 2;
    int n = 2;
    Protocol protocol = Protocol::kStaircase;
    GatePolicy gate_policy = GatePolicy::kIIDPerGateAndStep;
    int t_max = 0;
    std::uint64_t seed = 0;

    void validate() const {
        if (d < 2) throw std::invalid_argument("circuit: d must be >= 2");
        if (n < 2) throw std::invalid_argument("circuit: n must be >= 2");
        if (t_max < 0) throw std::invalid_argument("circuit: t_max must be >= 0");
    }
};

// Number of state-vector amplitudes d^n, or -1 on overflow past `limit`.
inline long long amplitude_count(int d, int n, long long limit = (1LL << 62)) {
    long long a = 1;
    for (int i = 0; i < n; ++i) {
        if (a > limit / d) return -1;
        a *= d;
    }
    return a;
}

// Desk-scale cap on brute-force Monte Carlo state vectors (~2e6 amplitudes).
inline constexpr long long kMaxStateAmplitudes = 1LL << 21;
// propagate_full works on 2^n purity vectors.
inline constexpr int kMaxFullFloatSites = 26;
inline constexpr int kMaxFullRationalSites = 16;
inline constexpr int kMaxCensusSites = 12;

// Gate order of one circuit step: staircase sweeps (1,2),(2,3),...,(n-1,n);
// brick-wall applies all odd pairs, then all even pairs.
inline std::vector<std::pair<int, int>> gate_sequence(int n, Protocol protocol) {
    std::vector<std::pair<int, int>> seq;
    if (protocol == Protocol::kStaircase) {
        for (int j = 1; j < n; ++j) seq.emplace_back(j, j + 1);
    } else {
        for (int j = 1; j < n; j += 2) seq.emplace_back(j, j + 1);
        for (int j = 2; j < n; j += 2) seq.emplace_back(j, j + 1);
    }
    return seq;
}

inline std::string to_string(Protocol p) {
    return p == Protocol::kStaircase ? "staircase" : "brickwall";
}
inline std::string to_string(GatePolicy g) {
    return g == GatePolicy::kIIDPerGateAndStep ? "iid" : "single";
}

}  // namespace puritydyn
