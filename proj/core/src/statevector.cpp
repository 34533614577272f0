#include "puritydyn/statevector.hpp"

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "puritydyn/haar.hpp"
#include "puritydyn/rng.hpp"

namespace puritydyn::mc {

namespace {
constexpr std::uint64_t kTagGate = 0x67617465ULL;  // gate-draw substream tag
}

StateVector::StateVector(int d, int n) : d_(d), n_(n) {
    if (d < 2 || n < 2) throw std::invalid_argument("StateVector: need d >= 2 and n >= 2");
    const long long dim = amplitude_count(d, n, kMaxStateAmplitudes);
    if (dim < 0)
        throw capacity_error("StateVector: d^n exceeds the state-vector capacity of " +
                             std::to_string(kMaxStateAmplitudes) + " amplitudes");
    amps_ = Eigen::VectorXcd::Zero(dim);
    amps_(0) = 1.0;
}

void StateVector::apply_two_site_gate(const Eigen::MatrixXcd& gate, int j) {
    if (j < 1 || j >= n_) throw std::invalid_argument("apply_two_site_gate: site index outside 1..n-1");
    const int dsq = d_ * d_;
    if (gate.rows() != dsq || gate.cols() != dsq) throw std::invalid_argument("apply_two_site_gate: gate shape mismatch");
    long long low_size = 1;
    for (int s = 1; s < j; ++s) low_size *= d_;
    const long long pair_size = low_size * dsq;
    const long long high_size = amps_.size() / pair_size;

    // local index = digit_j + d * digit_{j+1}
    std::vector<std::complex<double>> buf(static_cast<std::size_t>(dsq));
    for (long long h = 0; h < high_size; ++h) {
        const long long base_h = h * pair_size;
        for (long long l = 0; l < low_size; ++l) {
            const long long base = base_h + l;
            for (int loc = 0; loc < dsq; ++loc) buf[static_cast<std::size_t>(loc)] = amps_(base + loc * low_size);
            for (int row = 0; row < dsq; ++row) {
                std::complex<double> acc = 0.0;
                for (int col = 0; col < dsq; ++col) acc += gate(row, col) * buf[static_cast<std::size_t>(col)];
                amps_(base + row * low_size) = acc;
            }
        }
    }
}

double StateVector::purity(const Bipartition& cut) const {
    if (cut.n != n_) throw std::invalid_argument("purity: bipartition size mismatch");
    const int w = cut.weight();
    if (w == 0 || w == n_) return 1.0;

    // canonical factor: smaller side, ties to the side containing site 1
    const bool use_mask_side = (w < n_ - w) || (w == n_ - w && (cut.mask & 1u));
    const std::uint64_t side = use_mask_side ? cut.mask : (~cut.mask & ((std::uint64_t(1) << n_) - 1));
    const int ws = std::popcount(side);

    long long rows = 1, cols = 1;
    for (int s = 0; s < n_; ++s) ((side >> s) & 1u ? rows : cols) *= d_;

    Eigen::MatrixXcd G = Eigen::MatrixXcd::Zero(rows, rows);
    const bool bottom_contiguous = (side == (std::uint64_t(1) << ws) - 1);
    if (bottom_contiguous) {
        Eigen::Map<const Eigen::MatrixXcd> psi(amps_.data(), rows, cols);
        G.selfadjointView<Eigen::Lower>().rankUpdate(psi);
    } else {
        // gather strides per site for the (row, col) split
        Eigen::MatrixXcd psi(rows, cols);
        std::vector<long long> row_stride(static_cast<std::size_t>(n_), 0), col_stride(static_cast<std::size_t>(n_), 0);
        long long r = 1, c = 1;
        for (int s = 0; s < n_; ++s) {
            if ((side >> s) & 1u) {
                row_stride[static_cast<std::size_t>(s)] = r;
                r *= d_;
            } else {
                col_stride[static_cast<std::size_t>(s)] = c;
                c *= d_;
            }
        }
        std::vector<int> digits(static_cast<std::size_t>(n_), 0);
        long long row = 0, col = 0;
        for (long long idx = 0; idx < amps_.size(); ++idx) {
            psi(row, col) = amps_(idx);
            for (int s = 0; s < n_; ++s) {  // odometer increment
                if (++digits[static_cast<std::size_t>(s)] < d_) {
                    row += row_stride[static_cast<std::size_t>(s)];
                    col += col_stride[static_cast<std::size_t>(s)];
                    break;
                }
                digits[static_cast<std::size_t>(s)] = 0;
                row -= row_stride[static_cast<std::size_t>(s)] * (d_ - 1);
                col -= col_stride[static_cast<std::size_t>(s)] * (d_ - 1);
            }
        }
        G.selfadjointView<Eigen::Lower>().rankUpdate(psi);
    }
    double purity = 0.0;
    for (long long i = 0; i < rows; ++i) {
        purity += std::norm(G(i, i));
        for (long long jj = i + 1; jj < rows; ++jj) purity += 2.0 * std::norm(G(jj, i));
    }
    return purity;
}

void apply_circuit_step(StateVector& state, const CircuitConfig& config, std::uint64_t realization, int t) {
    const int dsq = config.d * config.d;
    const auto seq = gate_sequence(config.n, config.protocol);
    for (std::size_t slot = 0; slot < seq.size(); ++slot) {
        Eigen::MatrixXcd gate;
        if (config.gate_policy == GatePolicy::kSingleRepeatedGate) {
            auto eng = substream(config.seed, {kTagGate, realization, 0, 0});
            gate = sample_haar_unitary(dsq, eng);
        } else {
            auto eng = substream(config.seed, {kTagGate, realization, static_cast<std::uint64_t>(t), slot});
            gate = sample_haar_unitary(dsq, eng);
        }
        state.apply_two_site_gate(gate, seq[slot].first);
    }
}

std::vector<StateVector> run_circuit(const CircuitConfig& config, std::uint64_t realization) {
    config.validate();
    std::vector<StateVector> snaps;
    snaps.reserve(static_cast<std::size_t>(config.t_max) + 1);
    StateVector state(config.d, config.n);
    snaps.push_back(state);
    for (int t = 0; t < config.t_max; ++t) {
        apply_circuit_step(state, config, realization, t);
        snaps.push_back(state);
    }
    return snaps;
}

}  // namespace puritydyn::mc
