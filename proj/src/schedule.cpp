#include "spinbit/schedule.hpp"

#include <cmath>
#include <stdexcept>

namespace spinbit {

void FieldSchedule::validate() const {
    if (segments.empty())
        throw std::invalid_argument("FieldSchedule: needs at least one segment");
    if (!(temperature > 0.0))
        throw std::invalid_argument("FieldSchedule: temperature must be positive");
    if (omega < 0.0) throw std::invalid_argument("FieldSchedule: omega must be non-negative");
    for (std::size_t i = 0; i < segments.size(); ++i) {
        const ScheduleSegment& s = segments[i];
        if (!(s.duration > 0.0))
            throw std::invalid_argument("FieldSchedule: segment durations must be positive");
        if (s.substeps < 2)
            throw std::invalid_argument("FieldSchedule: segments need at least 2 substeps");
        if (!s.start.finite() || !s.end.finite())
            throw std::invalid_argument("FieldSchedule: fields must be finite");
        if (i > 0) {
            const FieldVector gap = s.start - segments[i - 1].end;
            if (gap.norm() > 1e-12)
                throw std::invalid_argument("FieldSchedule: segment endpoints must chain");
        }
    }
}

double FieldSchedule::total_duration() const {
    double t = 0.0;
    for (const ScheduleSegment& s : segments) t += s.duration;
    return t;
}

FieldSchedule FieldSchedule::erasure_storage_cycle(double hy_max, double hz_max,
                                                   std::array<double, 4> durations,
                                                   int substeps, double temperature,
                                                   double omega) {
    const FieldVector a{0.0, 0.0, 0.0};
    const FieldVector b{0.0, hy_max, 0.0};
    const FieldVector c{0.0, hy_max, hz_max};
    const FieldVector d{0.0, 0.0, hz_max};
    FieldSchedule sched;
    sched.segments = {{a, b, durations[0], substeps},
                      {b, c, durations[1], substeps},
                      {c, d, durations[2], substeps},
                      {d, a, durations[3], substeps}};
    sched.temperature = temperature;
    sched.omega = omega;
    sched.validate();
    return sched;
}

}  // namespace spinbit
