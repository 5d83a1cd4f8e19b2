#pragma once

#include <cstdint>
#include <vector>

#include "gatesim/trace.hpp"

namespace gatesim {

// IIC transaction layout used to fetch one gyro reading. Defaults model a
// register read of the three 16-bit axes: write(addr)+write(reg), repeated
// start, read(addr)+6 data bytes, at 9 clocks per byte (8 bits + ACK) and
// 3 clocks charged for START/RESTART/STOP combined.
struct BusConfig {
    double clock_hz = 200000.0;
    int payload_bytes = 6;
    int addressing_bytes = 3;
    int framing_clocks = 3;
};

void validate(const BusConfig& cfg);

// Wall time one full read occupies on the wire. 420 us with defaults.
double transaction_duration_us(const BusConfig& cfg);

// One polled read: the processor initiates at request_us and the value is
// available to the detector at ready_us. The value is the trace
// sampled-and-held at request time.
struct SampleEvent {
    std::int64_t request_us = 0;
    std::int64_t ready_us = 0;
    GyroSample sample;
};

// Polls the trace every period_us starting at the first multiple of the
// period covered by the trace. Throws ScheduleInfeasibleError when the
// transaction does not fit inside the period.
std::vector<SampleEvent> sampling_schedule(const MotionTrace& trace, std::int64_t period_us,
                                           const BusConfig& cfg);

}  // namespace gatesim
