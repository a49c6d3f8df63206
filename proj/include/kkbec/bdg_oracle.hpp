#pragma once

#include <vector>

#include <Eigen/Dense>

#include "kkbec/model.hpp"

namespace kkbec {

// Brute-force Bogoliubov-de Gennes check. Nothing here uses the closed-form
// spectrum: the blocks are assembled from the linearized Hamiltonian and
// handed to dense eigen-solvers.

struct BdGSystem {
    double momentum;
    Eigen::MatrixXd block_a;   ///< (p^2/2m + nU - 2 Omega) I + (nU' + Omega) C
    Eigen::MatrixXd block_b;   ///< nU I + nU' C
    Eigen::MatrixXd coupling;  ///< C_ij = delta_{i,j+1} + delta_{i+1,j}, indices mod N
};

struct OracleSpectrum {
    std::vector<double> energy_sq;  ///< length N, eigenvalues of (A+B)(A-B)
    bool stable;
};

struct OracleAmplitudes {
    int j;
    double energy;
    double u;
    double v;
};

/// Absolute threshold below which a negative E^2 is treated as round-off.
inline constexpr double kOracleStabilityTolerance = 1e-10;

BdGSystem build_bdg(const ModelParams& params, double p);

/// Full 2N x 2N dynamical matrix [[A, B], [-B, -A]].
Eigen::MatrixXd bdg_matrix(const BdGSystem& system);

/// E_j^2 from (A+B)(A-B). When A-B is positive semidefinite the symmetric form
/// sqrt(A-B) (A+B) sqrt(A-B) is diagonalized; otherwise the plain product goes
/// through a general eigen-solver and imaginary parts below 1e-10 are dropped.
/// Throws OracleError on non-convergence or a genuinely complex eigenvalue.
OracleSpectrum oracle_energies(const BdGSystem& system);

/// Per-mode amplitudes from the 2x2 problem [[a, b], [-b, -a]] obtained by
/// projecting the dense blocks onto each ring Fourier vector. Amplitudes are
/// per-component (carrying the 1/sqrt(N) of an extended mode) and normalized
/// to u^2 - v^2 = 1/N. Throws DegenerateModeError if mode_energy <= 0 for the
/// requested mode.
OracleAmplitudes oracle_amplitudes(const BdGSystem& system, int j);

/// Same for every mode with positive energy; zero-energy modes are skipped.
std::vector<OracleAmplitudes> oracle_amplitudes(const BdGSystem& system);

}  // namespace kkbec
