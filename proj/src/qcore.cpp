#include "entcc/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace entcc {

namespace {

void require_qubit_count(int qubit_count) {
    if (qubit_count < 1 || qubit_count > kMaxQubits) {
        throw std::domain_error("qubit count must be in 1.." + std::to_string(kMaxQubits));
    }
}

}  // namespace

std::string basis_label(int index, int qubit_count) {
    require_qubit_count(qubit_count);
    if (index < 0 || index >= (1 << qubit_count)) {
        throw std::domain_error("basis index out of range");
    }
    std::string s(static_cast<std::size_t>(qubit_count), '0');
    for (int q = 0; q < qubit_count; ++q) {
        if (index >> (qubit_count - 1 - q) & 1) s[static_cast<std::size_t>(q)] = '1';
    }
    return s;
}

int basis_index(std::string_view basis) {
    if (basis.empty() || basis.size() > kMaxQubits) {
        throw std::domain_error("basis string must name 1..4 qubits");
    }
    int index = 0;
    for (char c : basis) {
        if (c != '0' && c != '1') throw std::domain_error("basis string must be binary");
        index = index << 1 | (c - '0');
    }
    return index;
}

const Complex& StateVector::amp(std::string_view basis) const {
    if (static_cast<int>(basis.size()) != qubit_count) {
        throw std::domain_error("basis string length does not match qubit count");
    }
    return amplitudes.at(static_cast<std::size_t>(basis_index(basis)));
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const Complex& a : amplitudes) total += std::norm(a);
    return total;
}

StateVector basis_state(int qubit_count, int index) {
    require_qubit_count(qubit_count);
    if (index < 0 || index >= (1 << qubit_count)) {
        throw std::domain_error("basis index out of range");
    }
    StateVector state{qubit_count, std::vector<Complex>(1u << qubit_count)};
    state.amplitudes[static_cast<std::size_t>(index)] = 1.0;
    return state;
}

StateVector ghz_state() {
    StateVector state{3, std::vector<Complex>(8)};
    state.amplitudes[0b000] = 0.5;
    state.amplitudes[0b011] = -0.5;
    state.amplitudes[0b101] = -0.5;
    state.amplitudes[0b110] = -0.5;
    return state;
}

StateVector epr_state() {
    StateVector state{2, std::vector<Complex>(4)};
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    state.amplitudes[0b00] = inv_sqrt2;
    state.amplitudes[0b11] = -inv_sqrt2;
    return state;
}

SingleQubitGate hadamard() {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    return SingleQubitGate{{inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2}};
}

SingleQubitGate rotation(double theta) {
    if (!std::isfinite(theta)) throw std::domain_error("rotation angle must be finite");
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return SingleQubitGate{{c, -s, s, c}};
}

bool is_unitary(const SingleQubitGate& gate, double tol) {
    // gate * conj-transpose == identity, entrywise
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            Complex sum = 0.0;
            for (int k = 0; k < 2; ++k) sum += gate.at(r, k) * std::conj(gate.at(c, k));
            const Complex want = (r == c) ? 1.0 : 0.0;
            if (std::abs(sum - want) > tol) return false;
        }
    }
    return true;
}

StateVector apply_gate(const StateVector& state, const SingleQubitGate& gate, int target) {
    if (target < 0 || target >= state.qubit_count) {
        throw std::domain_error("gate target out of range");
    }
    if (!is_unitary(gate)) throw std::domain_error("gate is not unitary");
    StateVector out = state;
    const int bit = 1 << (state.qubit_count - 1 - target);
    for (int i = 0; i < state.dim(); ++i) {
        if (i & bit) continue;
        const int j = i | bit;
        const Complex a0 = state.amplitudes[static_cast<std::size_t>(i)];
        const Complex a1 = state.amplitudes[static_cast<std::size_t>(j)];
        out.amplitudes[static_cast<std::size_t>(i)] = gate.at(0, 0) * a0 + gate.at(0, 1) * a1;
        out.amplitudes[static_cast<std::size_t>(j)] = gate.at(1, 0) * a0 + gate.at(1, 1) * a1;
    }
    return out;
}

double OutcomeDistribution::at(std::string_view basis) const {
    const auto it = probabilities.find(std::string(basis));
    return it == probabilities.end() ? 0.0 : it->second;
}

OutcomeDistribution measure_distribution(const StateVector& state) {
    OutcomeDistribution dist{state.qubit_count, {}};
    for (int i = 0; i < state.dim(); ++i) {
        dist.probabilities[basis_label(i, state.qubit_count)] =
            std::norm(state.amplitudes[static_cast<std::size_t>(i)]);
    }
    return dist;
}

std::string sample(const OutcomeDistribution& dist, RandomStream& rng) {
    if (dist.probabilities.empty()) throw std::domain_error("empty distribution");
    const double u = rng.next_unit();
    double cumulative = 0.0;
    for (const auto& [label, p] : dist.probabilities) {
        cumulative += p;
        if (u < cumulative) return label;
    }
    // u landed in the rounding slack past the last positive entry
    return dist.probabilities.rbegin()->first;
}

double DensityMatrix::trace_real() const {
    double t = 0.0;
    for (int i = 0; i < dim(); ++i) t += at(i, i).real();
    return t;
}

DensityMatrix reduced_density_matrix(const StateVector& state, const std::vector<int>& keep) {
    if (keep.empty()) throw std::domain_error("keep set must be nonempty");
    std::vector<int> kept = keep;
    std::sort(kept.begin(), kept.end());
    for (std::size_t i = 0; i < kept.size(); ++i) {
        if (kept[i] < 0 || kept[i] >= state.qubit_count) {
            throw std::domain_error("keep index out of range");
        }
        if (i > 0 && kept[i] == kept[i - 1]) throw std::domain_error("duplicate keep index");
    }
    std::vector<int> discarded;
    for (int q = 0; q < state.qubit_count; ++q) {
        if (!std::binary_search(kept.begin(), kept.end(), q)) discarded.push_back(q);
    }

    // Spread a sub-register value onto the full index; qubit qubits[slot]
    // owns full-index bit (n-1-qubits[slot]) and sub-index bit (k-1-slot).
    const auto scatter = [&](int sub, const std::vector<int>& qubits) {
        int full = 0;
        const int k = static_cast<int>(qubits.size());
        for (int slot = 0; slot < k; ++slot) {
            if (sub >> (k - 1 - slot) & 1) {
                full |= 1 << (state.qubit_count - 1 - qubits[static_cast<std::size_t>(slot)]);
            }
        }
        return full;
    };

    const int kept_dim = 1 << kept.size();
    const int disc_dim = 1 << discarded.size();
    std::vector<int> kept_index(static_cast<std::size_t>(kept_dim));
    std::vector<int> disc_index(static_cast<std::size_t>(disc_dim));
    for (int a = 0; a < kept_dim; ++a) kept_index[static_cast<std::size_t>(a)] = scatter(a, kept);
    for (int e = 0; e < disc_dim; ++e) disc_index[static_cast<std::size_t>(e)] = scatter(e, discarded);

    DensityMatrix rho{static_cast<int>(kept.size()),
                      std::vector<Complex>(static_cast<std::size_t>(kept_dim) * kept_dim)};
    for (int a = 0; a < kept_dim; ++a) {
        for (int b = 0; b < kept_dim; ++b) {
            Complex sum = 0.0;
            for (int e = 0; e < disc_dim; ++e) {
                const auto ia = static_cast<std::size_t>(kept_index[a] | disc_index[e]);
                const auto ib = static_cast<std::size_t>(kept_index[b] | disc_index[e]);
                sum += state.amplitudes[ia] * std::conj(state.amplitudes[ib]);
            }
            rho.entries[static_cast<std::size_t>(a * kept_dim + b)] = sum;
        }
    }
    return rho;
}

}  // namespace entcc
