// jacobi_oracle.hpp — test-only reference eigensolver: cyclic complex Jacobi
// sweeps in long double precision, with its own spin-matrix assembly. Kept
// deliberately independent of the library's Eigen-based path so the two can
// cross-check each other.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using cld = std::complex<long double>;

class HermitianMatrix {
  public:
    explicit HermitianMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

    int size() const { return n_; }
    cld& at(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
    const cld& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }

  private:
    int n_;
    std::vector<cld> a_;
};

// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations, ascending.
inline std::vector<long double> jacobi_eigenvalues(HermitianMatrix m,
                                                   long double tol = 1e-30L,
                                                   int max_sweeps = 200) {
    const int n = m.size();
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        long double off = 0.0L;
        long double diag = 0.0L;
        for (int p = 0; p < n; ++p) {
            diag += std::norm(m.at(p, p));
            for (int q = p + 1; q < n; ++q) off += std::norm(m.at(p, q));
        }
        if (off <= tol * tol * (diag + off)) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cld apq = m.at(p, q);
                if (std::abs(apq) == 0.0L) continue;
                const long double app = m.at(p, p).real();
                const long double aqq = m.at(q, q).real();
                // unitary 2x2 rotation annihilating the (p,q) element:
                // phase e^{i arg(apq)} folded into the q column
                const long double mag = std::abs(apq);
                const cld phase = apq / mag;
                const long double theta = 0.5L * std::atan2(2.0L * mag, aqq - app);
                const long double c = std::cos(theta);
                const long double s = std::sin(theta);

                for (int r = 0; r < n; ++r) {
                    const cld vp = m.at(r, p);
                    const cld vq = m.at(r, q);
                    m.at(r, p) = c * vp - s * std::conj(phase) * vq;
                    m.at(r, q) = s * phase * vp + c * vq;
                }
                for (int r = 0; r < n; ++r) {
                    const cld vp = m.at(p, r);
                    const cld vq = m.at(q, r);
                    m.at(p, r) = c * vp - s * phase * vq;
                    m.at(q, r) = s * std::conj(phase) * vp + c * vq;
                }
                m.at(p, q) = cld(0.0L, 0.0L);
                m.at(q, p) = cld(0.0L, 0.0L);
            }
        }
    }
    std::vector<long double> values(n);
    for (int i = 0; i < n; ++i) values[i] = m.at(i, i).real();
    std::sort(values.begin(), values.end());
    return values;
}

// Giant-spin Hamiltonian assembled from scratch in long double:
// H = -D Sz^2 + E (Sx^2 - Sy^2) - zeeman (Sx bx + Sy by + Sz bz),
// zeeman = g mu_B / k_B per tesla, fields in tesla, energies in kelvin.
inline HermitianMatrix spin_hamiltonian(long double spin, long double d_axial,
                                        long double e_rhombic, long double g_factor,
                                        long double bx, long double by, long double bz) {
    const int dim = static_cast<int>(2.0L * spin) + 1;
    const long double zeeman = g_factor * 9.274e-21L * 1.0e4L / 1.380649e-16L;

    std::vector<std::vector<cld>> sx(dim, std::vector<cld>(dim)), sy = sx, sz = sx;
    for (int i = 0; i < dim; ++i) {
        const long double mval = spin - i;
        sz[i][i] = mval;
        if (i > 0) {
            const long double amp = std::sqrt(spin * (spin + 1.0L) - mval * (mval + 1.0L));
            sx[i - 1][i] += 0.5L * amp;
            sy[i - 1][i] += cld(0.0L, -0.5L) * amp;
        }
        if (i < dim - 1) {
            const long double amp = std::sqrt(spin * (spin + 1.0L) - mval * (mval - 1.0L));
            sx[i + 1][i] += 0.5L * amp;
            sy[i + 1][i] += cld(0.0L, 0.5L) * amp;
        }
    }

    HermitianMatrix h(dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            cld sx2(0.0L), sy2(0.0L);
            for (int k = 0; k < dim; ++k) {
                sx2 += sx[r][k] * sx[k][c];
                sy2 += sy[r][k] * sy[k][c];
            }
            cld val = e_rhombic * (sx2 - sy2);
            if (r == c) {
                const long double mval = spin - r;
                val += -d_axial * mval * mval - zeeman * bz * mval;
            }
            val -= zeeman * (bx * sx[r][c] + by * sy[r][c]);
            h.at(r, c) = val;
        }
    }
    return h;
}

}  // namespace oracle
