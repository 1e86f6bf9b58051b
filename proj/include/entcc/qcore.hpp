#pragma once

#include <array>
#include <complex>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "entcc/random.hpp"

namespace entcc {

using Complex = std::complex<double>;

inline constexpr double kAmplitudeTolerance = 1e-12;
inline constexpr int kMaxQubits = 4;

// Pure state of 1..4 qubits. Ket convention: the leftmost symbol of a ket
// is qubit 0 and carries the highest bit weight, so a basis string read as
// a big-endian binary number is its amplitude index (|011> of a 3-qubit
// state sits at index 3; its qubit 0 is in state |0>).
struct StateVector {
    int qubit_count = 0;
    std::vector<Complex> amplitudes;

    int dim() const { return 1 << qubit_count; }
    const Complex& amp(int index) const { return amplitudes.at(static_cast<std::size_t>(index)); }
    const Complex& amp(std::string_view basis) const;
    double norm_squared() const;
};

// "011" <-> 3 for a 3-qubit register.
std::string basis_label(int index, int qubit_count);
int basis_index(std::string_view basis);

StateVector basis_state(int qubit_count, int index);

// 1/2 (|000> - |011> - |101> - |110>)
StateVector ghz_state();

// 1/sqrt(2) (|00> - |11>)
StateVector epr_state();

// 2x2 unitary, row-major.
struct SingleQubitGate {
    std::array<Complex, 4> m{};
    const Complex& at(int row, int col) const { return m[static_cast<std::size_t>(2 * row + col)]; }
};

SingleQubitGate hadamard();

// [[cos t, -sin t], [sin t, cos t]]
SingleQubitGate rotation(double theta);

bool is_unitary(const SingleQubitGate& gate, double tol = kAmplitudeTolerance);

// (I x ... x gate x ... x I) |state> with the gate acting on `target`.
StateVector apply_gate(const StateVector& state, const SingleQubitGate& gate, int target);

// Standard-basis outcome probabilities keyed by basis string. Holds all
// 2^n strings and iterates in lexicographic order.
struct OutcomeDistribution {
    int qubit_count = 0;
    std::map<std::string, double> probabilities;

    double at(std::string_view basis) const;
};

OutcomeDistribution measure_distribution(const StateVector& state);

// Inverse-CDF draw over the lexicographically ordered basis strings.
std::string sample(const OutcomeDistribution& dist, RandomStream& rng);

struct DensityMatrix {
    int qubit_count = 0;           // kept qubits
    std::vector<Complex> entries;  // row-major, dim() x dim()

    int dim() const { return 1 << qubit_count; }
    const Complex& at(int row, int col) const {
        return entries.at(static_cast<std::size_t>(row * dim() + col));
    }
    double trace_real() const;
};

// Partial trace over the qubits not listed in `keep`. The reduced matrix
// indexes the kept qubits in ascending original order.
DensityMatrix reduced_density_matrix(const StateVector& state, const std::vector<int>& keep);

}  // namespace entcc
