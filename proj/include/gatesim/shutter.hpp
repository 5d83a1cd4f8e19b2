#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gatesim/detector.hpp"

namespace gatesim {

// The H-bridge square wave. Carried for reporting; the optics model treats
// the drive as a binary on/off transparency control.
struct DriveSignal {
    double frequency_hz = 1000.0;
    double vpp = 80.0;
};

// Liquid-crystal sheet optics. Undriven transparency stays below 10%
// (diffusing glass included); the driven value is a configurable model
// default, only constrained to be at least 10%.
struct ShutterModel {
    double transparency_clear = 0.70;
    double transparency_blur = 0.08;
    std::int64_t rise_us = 0;  // blur -> clear optical transition
    std::int64_t fall_us = 0;  // clear -> blur optical transition
    DriveSignal drive;
};

void validate(const ShutterModel& model);

// One piece of the transparency curve over [start_us, end_us); linear
// between the endpoint values, constant when they are equal.
struct OpticalSegment {
    std::int64_t start_us = 0;
    std::int64_t end_us = 0;
    double transparency_start = 0.0;
    double transparency_end = 0.0;

    bool is_constant() const { return transparency_start == transparency_end; }
};

struct OpticalTimeline {
    std::vector<OpticalSegment> segments;

    std::int64_t start_us() const { return segments.empty() ? 0 : segments.front().start_us; }
    std::int64_t end_us() const { return segments.empty() ? 0 : segments.back().end_us; }
    std::int64_t duration_us() const { return end_us() - start_us(); }
};

// Plays a command sequence through the optics: the timeline starts at t=0
// in the initial state, switches transparency at each effective command
// (ramped over rise_us/fall_us when nonzero) and covers [0, session_end_us].
// Commands whose drive state matches the current one are no-ops.
OpticalTimeline apply_commands(const ShutterModel& model, std::span<const GateCommand> commands,
                               std::int64_t session_end_us, bool initial_drive_on);

// Transparency at an instant. Segments are half-open [start, end); the very
// last instant returns the final value. Outside [0, end] throws RangeError.
double transparency_at(const OpticalTimeline& timeline, std::int64_t t_us);

}  // namespace gatesim
