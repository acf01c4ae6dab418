// schedule.hpp — piecewise-linear vector-field paths in time
#pragma once

#include <array>
#include <vector>

#include "spinbit/constants.hpp"
#include "spinbit/types.hpp"

namespace spinbit {

struct ScheduleSegment {
    FieldVector start;
    FieldVector end;
    double duration = 10.0;  // seconds
    int substeps = 512;
};

// Ordered field segments plus the environment they run in. Segment endpoints
// must chain continuously.
struct FieldSchedule {
    std::vector<ScheduleSegment> segments;
    double temperature = 1.0;                    // kelvin
    double omega = 2.0 * 3.14159265358979323846 * 333.0;  // rad/s, probe frequency

    void validate() const;

    double total_duration() const;

    // The four-step erasure-storage cycle:
    //   1. ramp the medium-axis field 0 -> hy_max
    //   2. ramp the easy-axis field 0 -> hz_max at constant hy_max
    //   3. ramp the medium-axis field back to 0 at constant hz_max
    //   4. ramp the easy-axis field back to 0
    static FieldSchedule erasure_storage_cycle(
        double hy_max = 2.0, double hz_max = 0.21,
        std::array<double, 4> durations = {10.0, 10.0, 10.0, 10.0}, int substeps = 512,
        double temperature = 1.0, double omega = 2.0 * 3.14159265358979323846 * 333.0);
};

}  // namespace spinbit
