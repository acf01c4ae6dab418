// bench_sweeps — times the serial reference against the OpenMP kernels and
// verifies they produce identical bits
#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "spinbit/sweep.hpp"
#include "spinbit/types.hpp"

using namespace spinbit;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <typename Fn>
double timed(const Fn& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return seconds_since(t0);
}

}  // namespace

int main(int argc, char** argv) {
    int points = 2000;
    if (argc > 1) points = std::atoi(argv[1]);

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel path degrades to serial\n");
#endif
    std::printf("grid points: %d\n\n", points);

    const SpinSystem sys;
    std::vector<FieldVector> grid;
    grid.reserve(points);
    for (int i = 0; i < points; ++i) {
        const double t = double(i) / (points - 1);
        grid.push_back({0.3 * t, 2.0 * t, 0.21 * (1.0 - t)});
    }

    {
        std::vector<FieldPointData> serial, parallel;
        const double ts = timed([&] { serial = sweep_field_points(sys, grid, 1.0, 0.06, Exec::serial); });
        const double tp = timed([&] { parallel = sweep_field_points(sys, grid, 1.0, 0.06, Exec::parallel); });
        bool identical = true;
        for (int i = 0; i < points; ++i) {
            identical = identical && serial[i].m_z_eq == parallel[i].m_z_eq &&
                        serial[i].m_y_eq == parallel[i].m_y_eq &&
                        serial[i].chi_t_z == parallel[i].chi_t_z &&
                        serial[i].barrier == parallel[i].barrier;
        }
        std::printf("field points   serial %7.3f s   parallel %7.3f s   speedup %.2fx   %s\n",
                    ts, tp, ts / tp, identical ? "bitwise equal" : "MISMATCH");
    }
    {
        std::vector<double> serial, parallel;
        const double ts = timed([&] { serial = sweep_barriers(sys, grid, 0.06, Exec::serial); });
        const double tp = timed([&] { parallel = sweep_barriers(sys, grid, 0.06, Exec::parallel); });
        bool identical = serial == parallel;
        std::printf("barriers       serial %7.3f s   parallel %7.3f s   speedup %.2fx   %s\n",
                    ts, tp, ts / tp, identical ? "bitwise equal" : "MISMATCH");
    }
    {
        std::vector<double> serial, parallel;
        const double ts = timed([&] { serial = sweep_ground_splittings(sys, grid, Exec::serial); });
        const double tp = timed([&] { parallel = sweep_ground_splittings(sys, grid, Exec::parallel); });
        bool identical = serial == parallel;
        std::printf("splittings     serial %7.3f s   parallel %7.3f s   speedup %.2fx   %s\n",
                    ts, tp, ts / tp, identical ? "bitwise equal" : "MISMATCH");
    }
    return 0;
}
