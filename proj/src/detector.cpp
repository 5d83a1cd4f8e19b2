#include "gatesim/detector.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gatesim/errors.hpp"

namespace gatesim {

void validate(const DetectorConfig& cfg) {
    if (!(cfg.threshold_dps > 0.0)) throw ValidationError("threshold_dps must be > 0");
    if (cfg.clear_dwell_us < 0) throw ValidationError("clear_dwell_us must be >= 0");
    if (cfg.processing_delay_us < 0) throw ValidationError("processing_delay_us must be >= 0");
}

bool classify_sample(const GyroSample& sample, const DetectorConfig& cfg) {
    validate(cfg);
    if (!sample_is_finite(sample)) {
        throw ValidationError("classify_sample: non-finite velocity component");
    }
    const double peak = std::max({std::fabs(sample.wx_dps), std::fabs(sample.wy_dps),
                                  std::fabs(sample.wz_dps)});
    return peak >= cfg.threshold_dps;
}

StepResult step(const GateState& state, const SampleEvent& event, const DetectorConfig& cfg) {
    if (state.last_event_us && event.ready_us <= *state.last_event_us) {
        throw SequencingError("detector event at " + std::to_string(event.ready_us) +
                              " us not after previous event at " +
                              std::to_string(*state.last_event_us) + " us");
    }
    const bool motion = classify_sample(event.sample, cfg);

    StepResult res;
    res.state = state;
    res.state.last_event_us = event.ready_us;

    if (motion) {
        res.state.below_since_us.reset();
        if (state.mode == GateMode::kClear) {
            res.state.mode = GateMode::kBlurred;
            res.command = GateCommand{event.ready_us + cfg.processing_delay_us, false};
        }
        return res;
    }

    res.state.below_since_us = state.below_since_us.value_or(event.ready_us);
    if (state.mode == GateMode::kBlurred &&
        event.ready_us - *res.state.below_since_us >= cfg.clear_dwell_us) {
        res.state.mode = GateMode::kClear;
        res.command = GateCommand{event.ready_us + cfg.processing_delay_us, true};
    }
    return res;
}

std::vector<GateCommand> run_detector(std::span<const SampleEvent> events, const DetectorConfig& cfg,
                                      GateState initial) {
    std::vector<GateCommand> commands;
    GateState state = initial;
    for (const SampleEvent& ev : events) {
        StepResult res = step(state, ev, cfg);
        state = res.state;
        if (res.command) commands.push_back(*res.command);
    }
    return commands;
}

}  // namespace gatesim
