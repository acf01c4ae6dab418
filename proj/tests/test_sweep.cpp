#include <doctest.h>

#include <vector>

#include "spinbit/kinetics.hpp"
#include "spinbit/spectrum.hpp"
#include "spinbit/statmech.hpp"
#include "spinbit/sweep.hpp"

using namespace spinbit;

namespace {

std::vector<FieldVector> mixed_grid(int n) {
    std::vector<FieldVector> grid;
    grid.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double t = double(i) / (n - 1);
        grid.push_back({0.25 * t, 2.0 * t, 0.21 * (1.0 - t)});
    }
    return grid;
}

}  // namespace

TEST_SUITE_BEGIN("sweep");

TEST_CASE("parallel kernels reproduce the serial reference bitwise") {
    const SpinSystem fe8;
    const auto grid = mixed_grid(64);

    SUBCASE("field points") {
        const auto serial = sweep_field_points(fe8, grid, 1.0, 0.06, Exec::serial);
        const auto parallel = sweep_field_points(fe8, grid, 1.0, 0.06, Exec::parallel);
        REQUIRE(serial.size() == parallel.size());
        for (std::size_t i = 0; i < serial.size(); ++i) {
            CHECK(serial[i].m_z_eq == parallel[i].m_z_eq);
            CHECK(serial[i].m_y_eq == parallel[i].m_y_eq);
            CHECK(serial[i].chi_t_z == parallel[i].chi_t_z);
            CHECK(serial[i].barrier == parallel[i].barrier);
        }
    }
    SUBCASE("barriers") {
        CHECK(sweep_barriers(fe8, grid, 0.06, Exec::serial) ==
              sweep_barriers(fe8, grid, 0.06, Exec::parallel));
    }
    SUBCASE("energies") {
        const auto serial = sweep_energies(fe8, grid, Exec::serial);
        const auto parallel = sweep_energies(fe8, grid, Exec::parallel);
        for (std::size_t i = 0; i < serial.size(); ++i)
            CHECK(serial[i] == parallel[i]);
    }
    SUBCASE("ground splittings") {
        CHECK(sweep_ground_splittings(fe8, grid, Exec::serial) ==
              sweep_ground_splittings(fe8, grid, Exec::parallel));
    }
}

TEST_CASE("sweep values match the scalar evaluation path") {
    const SpinSystem fe8;
    const auto grid = mixed_grid(8);
    const auto points = sweep_field_points(fe8, grid, 1.3, 0.06);
    const auto barriers = sweep_barriers(fe8, grid, 0.06);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const Spectrum spec = diagonalize(fe8, grid[i]);
        CHECK(points[i].m_z_eq ==
              doctest::Approx(magnetization(spec, 1.3, Axis::z)).epsilon(1e-14));
        CHECK(points[i].m_y_eq ==
              doctest::Approx(magnetization(spec, 1.3, Axis::y)).epsilon(1e-14));
        CHECK(points[i].chi_t_z ==
              doctest::Approx(susceptibility_from_spectrum(spec, 1.3, Axis::z)).epsilon(1e-14));
        CHECK(barriers[i] ==
              doctest::Approx(effective_barrier_from_spectrum(spec, 0.06)).epsilon(1e-14));
    }
}

TEST_CASE("empty grids are fine") {
    const SpinSystem fe8;
    CHECK(sweep_field_points(fe8, {}, 1.0, 0.06).empty());
    CHECK(sweep_energies(fe8, {}).empty());
}

TEST_SUITE_END();
