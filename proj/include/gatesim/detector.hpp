#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gatesim/bus.hpp"
#include "gatesim/trace.hpp"

namespace gatesim {

// Threshold gate parameters. The 6.1 deg/s per-axis threshold decides
// clear vs blurred; clear_dwell_us > 0 debounces the return to clear on
// noisy data (0 reproduces the memoryless rule).
struct DetectorConfig {
    double threshold_dps = 6.1;
    std::int64_t clear_dwell_us = 0;
    std::int64_t processing_delay_us = 50;  // sample-ready to command-issue
};

void validate(const DetectorConfig& cfg);

// True when any axis is at or above threshold in absolute value.
// Equality counts as motion: never show a clear image during possible motion.
bool classify_sample(const GyroSample& sample, const DetectorConfig& cfg);

enum class GateMode { kClear, kBlurred };

// Drive decision for the shutter. drive_on=true emits the square wave
// (clear optics); false stops it (blurred optics).
struct GateCommand {
    std::int64_t issue_us = 0;
    bool drive_on = true;

    bool operator==(const GateCommand&) const = default;
};

struct GateState {
    GateMode mode = GateMode::kClear;
    // Ready time of the first below-threshold sample of the current
    // all-below run; absent while any axis is at/above threshold (or before
    // the first event).
    std::optional<std::int64_t> below_since_us;
    // Ready time of the last processed event, for sequencing checks.
    std::optional<std::int64_t> last_event_us;
};

struct StepResult {
    GateState state;
    std::optional<GateCommand> command;  // present only on mode change
};

// Advances the gate by one sample event. Events must arrive in strictly
// increasing ready-time order.
StepResult step(const GateState& state, const SampleEvent& event, const DetectorConfig& cfg);

// Folds step over a whole schedule and collects the emitted commands.
std::vector<GateCommand> run_detector(std::span<const SampleEvent> events, const DetectorConfig& cfg,
                                      GateState initial = {});

}  // namespace gatesim
