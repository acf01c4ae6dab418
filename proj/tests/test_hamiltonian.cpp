#include <doctest.h>

#include "spinbit/constants.hpp"
#include "spinbit/hamiltonian.hpp"

using namespace spinbit;

TEST_SUITE_BEGIN("core");

TEST_CASE("zero-field easy-axis Hamiltonian is diagonal with -D m^2 entries") {
    SpinSystem sys;
    sys.rhombic_anisotropy = 0.0;
    const Eigen::MatrixXcd h = build_hamiltonian(sys, {0, 0, 0});
    for (int r = 0; r < 21; ++r) {
        for (int c = 0; c < 21; ++c) {
            if (r == c) continue;
            CHECK(std::abs(h(r, c)) < 1e-15);
        }
    }
    // minimum diagonal entry at m = +-10
    CHECK(h(0, 0).real() == doctest::Approx(-29.4).epsilon(1e-12));
    CHECK(h(20, 20).real() == doctest::Approx(-29.4).epsilon(1e-12));
}

TEST_CASE("longitudinal Zeeman shifts the m = +10 entry by the g mu_B factor") {
    SpinSystem sys;
    sys.rhombic_anisotropy = 0.0;
    const Eigen::MatrixXcd h = build_hamiltonian(sys, {0, 0, 0.21});
    const double expected = -29.4 - zeeman_kelvin_per_tesla(2.0) * 10.0 * 0.21;
    CHECK(h(0, 0).real() == doctest::Approx(expected).epsilon(1e-14));
    CHECK(expected == doctest::Approx(-32.22).epsilon(1e-3));
}

TEST_CASE("Hermiticity for generic fields") {
    const SpinSystem sys;
    for (const FieldVector f : {FieldVector{0.3, -1.2, 0.7}, FieldVector{0, 2, 0.21},
                                FieldVector{-0.5, 0.1, -0.9}}) {
        const Eigen::MatrixXcd h = build_hamiltonian(sys, f);
        CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("trace is independent of the longitudinal field when E = 0") {
    SpinSystem sys;
    sys.rhombic_anisotropy = 0.0;
    const double t0 = build_hamiltonian(sys, {0, 0, 0}).trace().real();
    const double t1 = build_hamiltonian(sys, {0, 0, 1.7}).trace().real();
    CHECK(std::abs(t0 - t1) < 1e-10);
}

TEST_CASE("the model caches match the direct build") {
    const SpinSystem sys;
    const HamiltonianModel model(sys);
    const FieldVector f{0.11, -0.7, 0.4};
    CHECK((model.at(f) - build_hamiltonian(sys, f)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("non-finite fields and invalid systems are rejected") {
    const SpinSystem sys;
    CHECK_THROWS_AS(build_hamiltonian(sys, {std::nan(""), 0, 0}), std::invalid_argument);
    SpinSystem bad;
    bad.rhombic_anisotropy = 0.2;  // E >= D/3
    CHECK_THROWS_AS(build_hamiltonian(bad, {0, 0, 0}), std::invalid_argument);
    SpinSystem negative_d;
    negative_d.axial_anisotropy = -1.0;
    CHECK_THROWS_AS(build_hamiltonian(negative_d, {0, 0, 0}), std::invalid_argument);
}

TEST_SUITE_END();
