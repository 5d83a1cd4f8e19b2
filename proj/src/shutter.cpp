#include "gatesim/shutter.hpp"

#include <algorithm>
#include <string>

#include "gatesim/errors.hpp"

namespace gatesim {

void validate(const ShutterModel& model) {
    if (!(model.transparency_blur >= 0.0 && model.transparency_blur < 0.10)) {
        throw ValidationError("transparency_blur must be in [0, 0.10)");
    }
    if (!(model.transparency_clear >= 0.10 && model.transparency_clear <= 1.0)) {
        throw ValidationError("transparency_clear must be in [0.10, 1]");
    }
    if (model.rise_us < 0 || model.fall_us < 0) {
        throw ValidationError("rise_us/fall_us must be >= 0");
    }
    if (!(model.drive.frequency_hz > 0.0)) throw ValidationError("drive frequency_hz must be > 0");
    if (!(model.drive.vpp > 0.0)) throw ValidationError("drive vpp must be > 0");
}

namespace {

double lerp_in(const OpticalSegment& s, std::int64_t t) {
    if (s.is_constant() || s.end_us == s.start_us) return s.transparency_start;
    const double frac = static_cast<double>(t - s.start_us) / static_cast<double>(s.end_us - s.start_us);
    return s.transparency_start + frac * (s.transparency_end - s.transparency_start);
}

}  // namespace

OpticalTimeline apply_commands(const ShutterModel& model, std::span<const GateCommand> commands,
                               std::int64_t session_end_us, bool initial_drive_on) {
    validate(model);
    if (session_end_us <= 0) {
        throw ValidationError("session_end_us must be > 0");
    }
    if (!commands.empty() && commands.back().issue_us > session_end_us) {
        throw ValidationError("session_end_us precedes the last command");
    }

    const auto level = [&](bool on) {
        return on ? model.transparency_clear : model.transparency_blur;
    };

    OpticalTimeline tl;
    bool driven = initial_drive_on;
    double cur_v = level(driven);
    std::int64_t pos = 0;  // time up to which geometry is final
    std::int64_t prev_issue = -1;

    const auto emit = [&tl](std::int64_t a, std::int64_t b, double va, double vb) {
        if (b > a) tl.segments.push_back({a, b, va, vb});
    };

    for (const GateCommand& cmd : commands) {
        if (cmd.issue_us < 0) throw ValidationError("command before session start");
        if (cmd.issue_us <= prev_issue) {
            throw SequencingError("commands not in strictly increasing issue order at " +
                                  std::to_string(cmd.issue_us) + " us");
        }
        prev_issue = cmd.issue_us;
        if (cmd.drive_on == driven) continue;  // redundant command, no switch

        const std::int64_t c = cmd.issue_us;
        // Establish the value at time c, cutting short a ramp still in flight.
        if (c < pos) {
            while (!tl.segments.empty() && tl.segments.back().start_us >= c) {
                tl.segments.pop_back();
            }
            if (!tl.segments.empty() && tl.segments.back().end_us > c) {
                OpticalSegment& s = tl.segments.back();
                cur_v = lerp_in(s, c);
                s.end_us = c;
                s.transparency_end = cur_v;
            }
            pos = c;
        } else {
            emit(pos, c, cur_v, cur_v);
            pos = c;
        }

        const std::int64_t ramp = cmd.drive_on ? model.rise_us : model.fall_us;
        const double target = level(cmd.drive_on);
        if (ramp > 0) {
            const std::int64_t ramp_end = std::min(c + ramp, session_end_us);
            const double end_v = (ramp_end == c + ramp)
                                     ? target
                                     : cur_v + (target - cur_v) *
                                                   (static_cast<double>(ramp_end - c) /
                                                    static_cast<double>(ramp));
            emit(c, ramp_end, cur_v, end_v);
            pos = ramp_end;
            cur_v = end_v;
        } else {
            cur_v = target;
        }
        driven = cmd.drive_on;
    }

    emit(pos, session_end_us, cur_v, cur_v);
    return tl;
}

double transparency_at(const OpticalTimeline& timeline, std::int64_t t_us) {
    if (timeline.segments.empty()) {
        throw RangeError("transparency_at: empty timeline");
    }
    if (t_us < timeline.start_us() || t_us > timeline.end_us()) {
        throw RangeError("transparency_at: " + std::to_string(t_us) + " us outside [" +
                         std::to_string(timeline.start_us()) + ", " +
                         std::to_string(timeline.end_us()) + "]");
    }
    if (t_us == timeline.end_us()) {
        return timeline.segments.back().transparency_end;
    }
    // Last segment whose start is <= t.
    auto it = std::upper_bound(timeline.segments.begin(), timeline.segments.end(), t_us,
                               [](std::int64_t t, const OpticalSegment& s) { return t < s.start_us; });
    --it;
    return lerp_in(*it, t_us);
}

}  // namespace gatesim
