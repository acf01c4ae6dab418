#include <doctest.h>

#include <cmath>
#include <random>

#include "spinbit/constants.hpp"
#include "spinbit/metrology.hpp"
#include "spinbit/spectrum.hpp"

using namespace spinbit;
using namespace spinbit::metrology;

TEST_SUITE_BEGIN("metrology");

TEST_CASE("averaging sweeps") {
    SUBCASE("identical samples have zero spread") {
        const Measurement m = average_sweeps(std::vector<double>(15, 3.25));
        CHECK(m.mean == doctest::Approx(3.25));
        CHECK(m.sigma == doctest::Approx(0.0));
        CHECK(m.count == 15);
    }
    SUBCASE("hand-computed case") {
        const Measurement m = average_sweeps({1.0, 2.0, 3.0});
        CHECK(m.mean == doctest::Approx(2.0));
        CHECK(m.sigma == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
    }
    SUBCASE("permutation invariance") {
        const Measurement a = average_sweeps({0.3, 1.9, -2.5, 0.7});
        const Measurement b = average_sweeps({1.9, 0.7, 0.3, -2.5});
        CHECK(a.mean == b.mean);
        CHECK(a.sigma == b.sigma);
    }
    SUBCASE("needs at least two samples") {
        CHECK_THROWS_AS(average_sweeps({1.0}), std::invalid_argument);
    }
}

TEST_CASE("uncertainty propagation in quadrature") {
    CHECK(propagate_sigma_m(2.0, 0.5, 1.0, 0.0) == doctest::Approx(1.0));
    CHECK(propagate_sigma_m(1.0, 0.0, 1.0, 0.0) == 0.0);
    CHECK(propagate_sigma_m(1.0, 3.0, 1.0, 4.0) == doctest::Approx(5.0));
    CHECK_THROWS_AS(propagate_sigma_m(1.0, -0.1, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("work confidence bounds") {
    SUBCASE("zero sigma collapses the bounds") {
        const std::vector<double> m = {1.0, 2.0, 3.0};
        const std::vector<double> s = {0.0, 0.0, 0.0};
        const std::vector<double> h = {0.0, 0.1, 0.2};
        const WorkBounds w = work_confidence_bounds(m, s, h);
        CHECK(w.work == doctest::Approx(0.4));
        CHECK(w.work_plus == w.work);
        CHECK(w.work_minus == w.work);
        CHECK(w.sigma == 0.0);
    }
    SUBCASE("constant sigma scales with the absolute path length") {
        // closed loop: up then down, net field displacement zero
        const std::vector<double> m = {0.0, 1.0, 2.0, 1.5, 0.5};
        const std::vector<double> s(5, 0.25);
        const std::vector<double> h = {0.0, 0.1, 0.2, 0.1, 0.0};
        const WorkBounds w = work_confidence_bounds(m, s, h);
        // direct sum of sigma |dH| over the four intervals
        CHECK(w.sigma == doctest::Approx(0.25 * 0.4).epsilon(1e-12));
        CHECK(w.work_plus - w.work == doctest::Approx(w.sigma));
        CHECK(w.work - w.work_minus == doctest::Approx(w.sigma));
    }
    SUBCASE("mismatched grids are rejected") {
        CHECK_THROWS_AS(work_confidence_bounds({1.0}, {0.0}, {0.0, 0.1}),
                        std::invalid_argument);
    }
}

TEST_CASE("loop sigmas combine in quadrature to the reported total") {
    CHECK(combined_sigma(0.17712e-16, 0.28107e-16) ==
          doctest::Approx(0.3322e-16).epsilon(1e-3));
    CHECK(combined_sigma(3.0, 4.0) == doctest::Approx(5.0));
}

TEST_CASE("molecule count from the crystal mass") {
    const double n = molecule_count_mass(0.411e-3, 2262.45);
    CHECK(n == doctest::Approx(1.094e17).epsilon(1e-3));
    CHECK(molecule_count_mass(2.0 * 0.411e-3, 2262.45) == doctest::Approx(2.0 * n));
    CHECK(molecule_count_mass(2262.45, 2262.45) == doctest::Approx(constants.avogadro));
    CHECK_THROWS_AS(molecule_count_mass(0.0, 1.0), std::invalid_argument);
}

TEST_CASE("molecule count from the saturation magnetization") {
    const Measurement n = molecule_count_saturation(2.029e-2, 0.006e-2);
    CHECK(n.mean == doctest::Approx(1.0939e17).epsilon(1e-3));
    CHECK(n.sigma == doctest::Approx(0.0032e17).epsilon(0.02));
    CHECK(molecule_count_saturation(20.0 * constants.bohr_magneton).mean ==
          doctest::Approx(1.0));
    SUBCASE("both counting routes agree on the reference crystal") {
        CHECK(molecule_count_mass(0.411e-3, 2262.45) ==
              doctest::Approx(n.mean).epsilon(0.002));
    }
}

TEST_CASE("energy-time cost and the quantum speed limit") {
    CHECK(energy_time_cost(1.1828e-16, 1.96e-7) == doctest::Approx(2.318e-23).epsilon(1e-3));
    CHECK(energy_time_cost(0.0, 1.0) == 0.0);
    CHECK(quantum_limit_product() == doctest::Approx(1.656e-27).epsilon(1e-3));
    CHECK(quantum_speed_limit_tau(quantum_limit_product()) == doctest::Approx(1.0));
    // tau at the 1 K erasure energy scale
    const double delta = constants.k_boltzmann * std::log(2.0);
    CHECK(quantum_speed_limit_tau(delta) == doctest::Approx(1.73e-11).epsilon(2e-3));
    CHECK(quantum_speed_limit_tau(2.0 * delta) ==
          doctest::Approx(0.5 * quantum_speed_limit_tau(delta)).epsilon(1e-12));
    CHECK_THROWS_AS(quantum_speed_limit_tau(0.0), std::invalid_argument);
}

TEST_CASE("comparison chart") {
    SUBCASE("bundled defaults rank the spin bit just above the quantum limit") {
        const auto chart = comparison_chart(default_device_chart());
        REQUIRE(chart.size() == 5);
        CHECK(chart[0].name == "quantum_limit");
        CHECK(chart[1].name == "Fe8");
        CHECK(chart[1].product_erg_s == doctest::Approx(2.31e-23).epsilon(0.01));
        CHECK(chart[0].product_erg_s == doctest::Approx(1.65e-27).epsilon(0.01));
        for (std::size_t i = 1; i < chart.size(); ++i)
            CHECK(chart[i].product_erg_s > chart[i - 1].product_erg_s);
        // flip-flop order of magnitude
        CHECK(chart.back().name == "flip_flop");
        CHECK(chart.back().product_erg_s == doctest::Approx(1e-9).epsilon(0.01));
    }
    SUBCASE("single entry passes through") {
        const auto chart = comparison_chart({make_device("solo", 1e-10, 1e-3, 300.0)});
        CHECK(chart.size() == 1);
    }
    SUBCASE("inconsistent products are rejected") {
        DeviceEntry bad = make_device("bad", 1.0, 1.0, 300.0);
        bad.product_erg_s = 2.0;
        CHECK_THROWS_AS(comparison_chart({bad}), std::invalid_argument);
    }
    SUBCASE("empty charts are rejected") {
        CHECK_THROWS_AS(comparison_chart({}), std::invalid_argument);
    }
}

TEST_CASE("crystal orientation rotations") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> angle(-180.0, 180.0);
    for (int i = 0; i < 100; ++i) {
        const CrystalOrientation o{angle(rng), angle(rng), angle(rng)};
        const Eigen::Matrix3d r = o.rotation();
        CHECK((r * r.transpose() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-10);
        CHECK(r.determinant() == doctest::Approx(1.0).epsilon(1e-10));

        const Eigen::Vector3d lab(0.3, -1.1, 0.7);
        const FieldVector mol = lab_to_molecular(lab, o);
        CHECK(mol.norm() == doctest::Approx(lab.norm()).epsilon(1e-12));
        const Eigen::Vector3d back = molecular_to_lab(mol, o);
        CHECK((back - lab).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("identity leaves vectors unchanged") {
        const CrystalOrientation id{};
        const FieldVector mol = lab_to_molecular({0.1, 0.2, 0.3}, id);
        CHECK(mol.bx == doctest::Approx(0.1));
        CHECK(mol.by == doctest::Approx(0.2));
        CHECK(mol.bz == doctest::Approx(0.3));
    }
    SUBCASE("quarter turn about Z maps lab X onto lab Y") {
        const CrystalOrientation quarter{90.0, 0.0, 0.0};
        // molecular x expressed in the lab frame is the rotated X axis
        const Eigen::Vector3d lab_image = molecular_to_lab({1, 0, 0}, quarter);
        CHECK(lab_image.x() == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
        CHECK(lab_image.y() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("easy axis from two hard-plane vectors") {
    SUBCASE("orthogonal basis gives the pole") {
        const EasyAxisResult r =
            find_easy_axis(Eigen::Vector3d::UnitX(), Eigen::Vector3d::UnitY());
        CHECK(r.theta_deg == doctest::Approx(0.0).scale(1.0).epsilon(1e-10));
    }
    SUBCASE("reference crossing angles reproduce the published axis") {
        const Eigen::Vector3d v1 = plane_direction(LabPlane::xz, 5.70);
        const Eigen::Vector3d v2 = plane_direction(LabPlane::xy, 22.72);
        const EasyAxisResult r = find_easy_axis(v1, v2);
        CHECK(r.theta_deg == doctest::Approx(87.79).epsilon(0.0005));
        CHECK(r.phi_deg == doctest::Approx(112.72).epsilon(0.0005));
    }
    SUBCASE("parallel inputs are degenerate") {
        CHECK_THROWS_AS(find_easy_axis(Eigen::Vector3d::UnitX(), Eigen::Vector3d::UnitX()),
                        std::invalid_argument);
    }
}

TEST_CASE("plane sweep profiles") {
    const SpinSystem fe8;
    PlaneSweepSettings settings;
    settings.angular_step_deg = 2.0;

    SUBCASE("identity orientation peaks where the field leaves the easy axis") {
        const auto profile = sweep_plane_chi(fe8, {}, LabPlane::xz, settings);
        // easy axis along lab Z: hard-plane crossings at theta = 90 and 270
        std::size_t best = 0;
        for (std::size_t i = 0; i < profile.size(); ++i)
            if (profile[i].second > profile[best].second) best = i;
        const double peak = std::fmod(profile[best].first, 180.0);
        CHECK(std::abs(peak - 90.0) <= 2.0);
    }
    SUBCASE("profile is 180-degree periodic") {
        const auto profile = sweep_plane_chi(fe8, {30.0, 60.0, 20.0}, LabPlane::xy, settings);
        const std::size_t half = profile.size() / 2;
        for (std::size_t i = 0; i < half; ++i) {
            CHECK(profile[i].second ==
                  doctest::Approx(profile[i + half].second).epsilon(1e-8));
        }
    }
    SUBCASE("angular step must divide the full turn") {
        PlaneSweepSettings bad = settings;
        bad.angular_step_deg = 7.0;
        CHECK_THROWS_AS(sweep_plane_chi(fe8, {}, LabPlane::xz, bad), std::invalid_argument);
    }
}

TEST_CASE("axis recovery on reference and random orientations") {
    const SpinSystem fe8;
    const PlaneSweepSettings settings;

    SUBCASE("published fixture") {
        const CrystalOrientation o = CrystalOrientation::from_easy_axis(87.79, 112.72);
        const AxisRecovery rec = recover_axes(fe8, o, settings, 0.1);
        CHECK(std::abs(rec.easy.theta_deg - 87.79) < 0.5);
        CHECK(std::abs(rec.easy.phi_deg - 112.72) < 0.5);
        // crossing angles land at the reference values modulo half turns
        const double xz = std::fmod(rec.xz_crossing_deg, 180.0);
        CHECK(std::abs(xz - 5.70) < 0.5);
        const double xy = std::fmod(rec.xy_crossing_deg, 180.0);
        CHECK(std::abs(xy - 22.72) < 0.5);
    }
    SUBCASE("random orientations recover within half a degree") {
        std::mt19937 rng(31);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int i = 0; i < 5; ++i) {
            const double theta = std::acos(2.0 * u(rng) - 1.0) * 180.0 / M_PI;
            const double phi = 360.0 * u(rng);
            const CrystalOrientation o =
                CrystalOrientation::from_easy_axis(theta, phi, 360.0 * u(rng));
            const AxisRecovery rec = recover_axes(fe8, o, settings, 0.1);
            const Eigen::Vector3d truth = o.easy_axis_lab();
            const double dot = std::abs(truth.dot(rec.easy.unit));
            const double err_deg = std::acos(std::min(1.0, dot)) * 180.0 / M_PI;
            CHECK(err_deg < 0.5);
        }
    }
}

TEST_CASE("interference pattern along the hard axis") {
    const SpinSystem fe8;
    // reference minima from the extended-precision oracle sweep at 1e-3 T;
    // the double-precision sweep uses a 5e-3 step, wide enough that the
    // splitting at neighbouring samples sits above the eigensolver noise
    const double expected[] = {0.122, 0.365, 0.608, 0.852, 1.095};

    const InterferencePattern pattern = interference_pattern(fe8, 1.2, 5e-3);
    REQUIRE(pattern.minima_fields.size() >= 3);
    REQUIRE(pattern.minima_fields.size() <= 6);
    for (std::size_t i = 0; i < std::min<std::size_t>(5, pattern.minima_fields.size()); ++i)
        CHECK(std::abs(pattern.minima_fields[i] - expected[i]) <= 6e-3);

    SUBCASE("zero-field point matches the tunnel splitting") {
        CHECK(pattern.samples.front().second ==
              doctest::Approx(tunnel_splitting(diagonalize(fe8, {0, 0, 0}), 0))
                  .epsilon(1e-6));
    }
    SUBCASE("spacing of the first intervals is nearly uniform") {
        std::vector<double> gaps;
        for (std::size_t i = 1; i < pattern.minima_fields.size(); ++i)
            gaps.push_back(pattern.minima_fields[i] - pattern.minima_fields[i - 1]);
        double mean = 0.0;
        for (double g : gaps) mean += g;
        mean /= gaps.size();
        double var = 0.0;
        for (double g : gaps) var += (g - mean) * (g - mean);
        const double cv = std::sqrt(var / gaps.size()) / mean;
        CHECK(cv < 0.10);
    }
    SUBCASE("no oscillation without the rhombic term") {
        // with E = 0 the splitting grows monotonically; below ~0.9 T it sits
        // under the eigensolver noise floor, so only resolved samples count
        SpinSystem axial = fe8;
        axial.rhombic_anisotropy = 0.0;
        const double floor = 1e-11;
        const InterferencePattern smooth = interference_pattern(axial, 6.0, 0.1);
        for (double minimum : smooth.minima_fields) {
            const std::size_t idx = static_cast<std::size_t>(std::llround(minimum / 0.1));
            CHECK(smooth.samples[idx].second < floor);  // noise, not structure
        }
        double previous = 0.0;
        for (const auto& [hx, delta] : smooth.samples) {
            if (delta < floor) continue;
            CHECK(delta >= previous * (1.0 - 1e-12));
            previous = delta;
        }
        CHECK(previous > 1.0);  // the resolved tail really was exercised
    }
}

TEST_SUITE_END();
