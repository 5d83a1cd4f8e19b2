#include "gatesim/bus.hpp"

#include <cmath>
#include <string>

#include "gatesim/errors.hpp"

namespace gatesim {

void validate(const BusConfig& cfg) {
    if (!(cfg.clock_hz > 0.0)) throw ValidationError("bus clock_hz must be > 0");
    if (cfg.payload_bytes < 1) throw ValidationError("bus payload_bytes must be >= 1");
    if (cfg.addressing_bytes < 0) throw ValidationError("bus addressing_bytes must be >= 0");
    if (cfg.framing_clocks < 0) throw ValidationError("bus framing_clocks must be >= 0");
}

double transaction_duration_us(const BusConfig& cfg) {
    validate(cfg);
    const int clocks = 9 * (cfg.addressing_bytes + cfg.payload_bytes) + cfg.framing_clocks;
    return static_cast<double>(clocks) * 1e6 / cfg.clock_hz;
}

std::vector<SampleEvent> sampling_schedule(const MotionTrace& trace, std::int64_t period_us,
                                           const BusConfig& cfg) {
    validate(trace);
    if (period_us <= 0) throw ValidationError("sampling period_us must be > 0");
    const double duration = transaction_duration_us(cfg);
    if (!(duration < static_cast<double>(period_us))) {
        throw ScheduleInfeasibleError("bus transaction " + std::to_string(duration) +
                                      " us does not fit in sampling period " +
                                      std::to_string(period_us) + " us");
    }
    const std::int64_t duration_us = std::llround(duration);

    std::vector<SampleEvent> events;
    if (trace.empty()) return events;

    const std::int64_t first_t = trace.samples.front().t_us;
    const std::int64_t last_t = trace.samples.back().t_us;
    // First poll that has a trace value to hold.
    std::int64_t request = (first_t + period_us - 1) / period_us * period_us;
    events.reserve(static_cast<std::size_t>((last_t - request) / period_us + 1));

    std::size_t held = 0;  // index of the most recent sample at or before request
    for (; request <= last_t; request += period_us) {
        while (held + 1 < trace.samples.size() && trace.samples[held + 1].t_us <= request) {
            ++held;
        }
        SampleEvent ev;
        ev.request_us = request;
        ev.ready_us = request + duration_us;
        ev.sample = trace.samples[held];
        events.push_back(ev);
    }
    return events;
}

}  // namespace gatesim
