#include "kkbec/bdg_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "kkbec/errors.hpp"

namespace kkbec {

namespace {

int kronecker(int a, int b) { return a == b ? 1 : 0; }

}  // namespace

BdGSystem build_bdg(const ModelParams& params, double p) {
    const int N = params.species_count;
    if (N < 1) {
        throw PreconditionError("species count must be positive");
    }
    BdGSystem sys;
    sys.momentum = p;
    sys.coupling = Eigen::MatrixXd::Zero(N, N);
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            sys.coupling(i, j) = kronecker(i, (j + 1) % N) + kronecker((i + 1) % N, j);
        }
    }
    const auto identity = Eigen::MatrixXd::Identity(N, N);
    const double kinetic = p * p / (2.0 * params.atom_mass);
    const double nU = params.nU();
    const double nUp = params.nUprime();
    const double omega = params.rabi;
    sys.block_a = (kinetic + nU - 2.0 * omega) * identity + (nUp + omega) * sys.coupling;
    sys.block_b = nU * identity + nUp * sys.coupling;
    return sys;
}

Eigen::MatrixXd bdg_matrix(const BdGSystem& system) {
    const Eigen::Index N = system.block_a.rows();
    Eigen::MatrixXd m(2 * N, 2 * N);
    m.topLeftCorner(N, N) = system.block_a;
    m.topRightCorner(N, N) = system.block_b;
    m.bottomLeftCorner(N, N) = -system.block_b;
    m.bottomRightCorner(N, N) = -system.block_a;
    return m;
}

OracleSpectrum oracle_energies(const BdGSystem& system) {
    const Eigen::MatrixXd plus = system.block_a + system.block_b;
    const Eigen::MatrixXd minus = system.block_a - system.block_b;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> minus_eig(minus);
    if (minus_eig.info() != Eigen::Success) {
        throw OracleError("eigen-solver failed on A - B");
    }

    OracleSpectrum out;
    const double scale = std::max(1.0, minus_eig.eigenvalues().cwiseAbs().maxCoeff());
    if (minus_eig.eigenvalues().minCoeff() >= -1e-14 * scale) {
        const Eigen::VectorXd roots = minus_eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
        const Eigen::MatrixXd& q = minus_eig.eigenvectors();
        const Eigen::MatrixXd sqrt_minus = q * roots.asDiagonal() * q.transpose();
        const Eigen::MatrixXd sym = sqrt_minus * plus * sqrt_minus;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(0.5 * (sym + sym.transpose()),
                                                           Eigen::EigenvaluesOnly);
        if (eig.info() != Eigen::Success) {
            throw OracleError("eigen-solver failed on the symmetrized product");
        }
        out.energy_sq.assign(eig.eigenvalues().data(),
                             eig.eigenvalues().data() + eig.eigenvalues().size());
    } else {
        Eigen::EigenSolver<Eigen::MatrixXd> eig(plus * minus, false);
        if (eig.info() != Eigen::Success) {
            throw OracleError("eigen-solver failed on (A+B)(A-B)");
        }
        for (const std::complex<double>& z : eig.eigenvalues()) {
            if (std::abs(z.imag()) > 1e-10 * std::max(1.0, std::abs(z))) {
                throw OracleError("complex E^2 eigenvalue, imaginary part " +
                                  std::to_string(z.imag()));
            }
            out.energy_sq.push_back(z.real());
        }
    }
    out.stable = std::none_of(out.energy_sq.begin(), out.energy_sq.end(),
                              [](double e) { return e < -kOracleStabilityTolerance; });
    return out;
}

OracleAmplitudes oracle_amplitudes(const BdGSystem& system, int j) {
    const Eigen::Index N = system.block_a.rows();
    if (j < 0 || j >= N) {
        throw PreconditionError("mode index out of range: " + std::to_string(j));
    }
    Eigen::VectorXcd f(N);
    for (Eigen::Index i = 0; i < N; ++i) {
        f(i) = std::polar(1.0 / std::sqrt(static_cast<double>(N)),
                          2.0 * std::numbers::pi * static_cast<double>(j * i) / static_cast<double>(N));
    }
    // Rayleigh quotients of the dense blocks; both are real for symmetric real blocks.
    const double a = (f.adjoint() * system.block_a.cast<std::complex<double>>() * f)(0).real();
    const double b = (f.adjoint() * system.block_b.cast<std::complex<double>>() * f)(0).real();

    Eigen::Matrix2d reduced;
    reduced << a, b, -b, -a;
    Eigen::EigenSolver<Eigen::Matrix2d> eig(reduced);
    if (eig.info() != Eigen::Success) {
        throw OracleError("2x2 eigen-solver failed for mode " + std::to_string(j));
    }
    int best = -1;
    double energy = 0.0;
    for (int k = 0; k < 2; ++k) {
        const std::complex<double> lambda = eig.eigenvalues()(k);
        if (std::abs(lambda.imag()) <= 1e-12 * std::max(1.0, std::abs(lambda)) &&
            lambda.real() > energy) {
            energy = lambda.real();
            best = k;
        }
    }
    if (best < 0) {
        throw DegenerateModeError("no positive-energy eigenvector for mode " + std::to_string(j));
    }
    Eigen::Vector2d vec = eig.eigenvectors().col(best).real();
    const double para_norm = vec(0) * vec(0) - vec(1) * vec(1);
    if (!(para_norm > 0.0)) {
        throw OracleError("eigenvector with non-positive symplectic norm for mode " +
                          std::to_string(j));
    }
    vec /= std::sqrt(para_norm);
    if (vec(0) < 0.0) {
        vec = -vec;
    }
    const double per_component = 1.0 / std::sqrt(static_cast<double>(N));
    return {j, energy, vec(0) * per_component, vec(1) * per_component};
}

std::vector<OracleAmplitudes> oracle_amplitudes(const BdGSystem& system) {
    std::vector<OracleAmplitudes> out;
    for (int j = 0; j < system.block_a.rows(); ++j) {
        try {
            out.push_back(oracle_amplitudes(system, j));
        } catch (const DegenerateModeError&) {
        }
    }
    return out;
}

}  // namespace kkbec
