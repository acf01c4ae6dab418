#include "spinbit/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace spinbit {

SpinOperators spin_operators(double spin) {
    const double two_s = 2.0 * spin;
    if (spin < 0.5 || std::abs(two_s - std::lround(two_s)) > 1e-9)
        throw std::invalid_argument("spin_operators: 2S must be a positive integer");

    const int dim = static_cast<int>(std::lround(two_s)) + 1;
    SpinOperators op;
    op.sx = Eigen::MatrixXcd::Zero(dim, dim);
    op.sy = Eigen::MatrixXcd::Zero(dim, dim);
    op.sz = Eigen::MatrixXcd::Zero(dim, dim);

    for (int i = 0; i < dim; ++i) {
        const double m = spin - i;
        op.sz(i, i) = m;
        // S+ |m> = sqrt(S(S+1) - m(m+1)) |m+1>; |m+1> sits at row i-1.
        if (i > 0) {
            const double amp = std::sqrt(spin * (spin + 1.0) - m * (m + 1.0));
            op.sx(i - 1, i) += 0.5 * amp;
            op.sy(i - 1, i) += std::complex<double>(0.0, -0.5) * amp;
        }
        // S- |m> = sqrt(S(S+1) - m(m-1)) |m-1>; |m-1> sits at row i+1.
        if (i < dim - 1) {
            const double amp = std::sqrt(spin * (spin + 1.0) - m * (m - 1.0));
            op.sx(i + 1, i) += 0.5 * amp;
            op.sy(i + 1, i) += std::complex<double>(0.0, 0.5) * amp;
        }
    }
    return op;
}

}  // namespace spinbit
