#include "spinbit/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spinbit/constants.hpp"
#include "spinbit/operators.hpp"

namespace spinbit {

namespace {

// Stable post-processing shared by all solves: ascending energies with
// degenerate groups re-sorted by descending <Sz>, canonical vector phase.
void order_and_normalize(const Eigen::MatrixXcd& sz, Eigen::VectorXd& values,
                         Eigen::MatrixXcd& vectors) {
    const int n = static_cast<int>(values.size());
    const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
    const double tie_tol = 1e-13 * scale;

    int i = 0;
    while (i < n) {
        int j = i + 1;
        while (j < n && values(j) - values(i) <= tie_tol) ++j;
        if (j - i > 1) {
            std::vector<std::pair<double, int>> keyed;
            keyed.reserve(j - i);
            for (int k = i; k < j; ++k) {
                const double sz_exp =
                    (vectors.col(k).adjoint() * sz * vectors.col(k))(0).real();
                keyed.emplace_back(-sz_exp, k);
            }
            std::stable_sort(keyed.begin(), keyed.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            Eigen::MatrixXcd cols(vectors.rows(), j - i);
            Eigen::VectorXd vals(j - i);
            for (int k = 0; k < j - i; ++k) {
                cols.col(k) = vectors.col(keyed[k].second);
                vals(k) = values(keyed[k].second);
            }
            vectors.middleCols(i, j - i) = cols;
            values.segment(i, j - i) = vals;
        }
        i = j;
    }

    for (int c = 0; c < n; ++c) {
        int imax = 0;
        double best = -1.0;
        for (int r = 0; r < n; ++r) {
            const double a = std::abs(vectors(r, c));
            if (a > best) {
                best = a;
                imax = r;
            }
        }
        const std::complex<double> pivot = vectors(imax, c);
        if (std::abs(pivot) > 0.0) vectors.col(c) *= std::conj(pivot) / std::abs(pivot);
    }
}

}  // namespace

void eigensolve(const Eigen::MatrixXcd& h, const Eigen::MatrixXcd& sz,
                Eigen::VectorXd& values, Eigen::MatrixXcd& vectors) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success)
        throw NumericalError("eigensolve: solver did not converge",
                             std::numeric_limits<double>::quiet_NaN());
    values = solver.eigenvalues();
    vectors = solver.eigenvectors();
    order_and_normalize(sz, values, vectors);

    const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
    const double residual =
        (h * vectors - vectors * values.asDiagonal()).cwiseAbs().maxCoeff();
    if (residual > 1e-9 * scale)
        throw NumericalError("eigensolve: reconstruction residual above contract", residual);
}

Spectrum diagonalize(const HamiltonianModel& model, const FieldVector& field) {
    Spectrum spec;
    spec.field = field;
    spec.system = model.system();
    eigensolve(model.at(field), model.sz(), spec.energies, spec.states);
    return spec;
}

Spectrum diagonalize(const SpinSystem& sys, const FieldVector& field) {
    return diagonalize(HamiltonianModel(sys), field);
}

double tunnel_splitting(const Spectrum& spec, int pair_index) {
    if (pair_index < 0 || 2 * pair_index + 1 >= spec.dimension())
        throw std::invalid_argument("tunnel_splitting: pair index out of range");
    return spec.energies(2 * pair_index + 1) - spec.energies(2 * pair_index);
}

ParityBlocks parity_blocks(const SpinSystem& sys, const FieldVector& field) {
    sys.validate();
    if (field.bx != 0.0 || field.by != 0.0)
        throw std::invalid_argument("parity_blocks: transverse field breaks m-parity");

    const Eigen::MatrixXcd h = build_hamiltonian(sys, field);
    const int dim = sys.dimension();

    // index i holds m = S - i; block membership by parity of (S - m) = i
    std::vector<int> even_idx, odd_idx;
    for (int i = 0; i < dim; ++i) (i % 2 == 0 ? even_idx : odd_idx).push_back(i);

    auto extract = [&h](const std::vector<int>& idx) {
        const int n = static_cast<int>(idx.size());
        Eigen::MatrixXcd block(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) block(r, c) = h(idx[r], idx[c]);
        return block;
    };

    return {extract(even_idx), extract(odd_idx)};
}

std::vector<double> parity_block_energies(const SpinSystem& sys, const FieldVector& field) {
    const ParityBlocks blocks = parity_blocks(sys, field);
    std::vector<double> all;
    for (const Eigen::MatrixXcd* b : {&blocks.even, &blocks.odd}) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(*b);
        if (solver.info() != Eigen::Success)
            throw NumericalError("parity_block_energies: solver did not converge",
                                 std::numeric_limits<double>::quiet_NaN());
        for (int i = 0; i < solver.eigenvalues().size(); ++i)
            all.push_back(solver.eigenvalues()(i));
    }
    std::sort(all.begin(), all.end());
    return all;
}

double ground_splitting_blocked(const SpinSystem& sys, double bz) {
    const std::vector<double> e = parity_block_energies(sys, {0.0, 0.0, bz});
    return e[1] - e[0];
}

double resonance_field(const SpinSystem& sys, int n) {
    sys.validate();
    if (n < 0) throw std::invalid_argument("resonance_field: n must be >= 0");
    return n * sys.axial_anisotropy / zeeman_kelvin_per_tesla(sys.g_factor);
}

}  // namespace spinbit
