#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace gatesim {

// One gyroscope reading: time from session start plus angular velocity on
// the three body axes, already converted to degrees per second.
struct GyroSample {
    std::int64_t t_us = 0;
    double wx_dps = 0.0;
    double wy_dps = 0.0;
    double wz_dps = 0.0;

    bool operator==(const GyroSample&) const = default;
};

bool sample_is_finite(const GyroSample& s);

// Angular-velocity time series. Timestamps are strictly increasing;
// nominal_rate_hz records the rate the underlying signal was produced at
// (samples need not be uniformly spaced).
struct MotionTrace {
    std::vector<GyroSample> samples;
    double nominal_rate_hz = 1000.0;

    bool empty() const { return samples.empty(); }
    std::int64_t last_t_us() const { return samples.empty() ? 0 : samples.back().t_us; }

    bool operator==(const MotionTrace&) const = default;
};

void validate(const MotionTrace& trace);

// Synthetic session parameters. Defaults mirror a 20-minute guided session:
// the wearer fixates for at most 20 s at a time, then turns their head.
struct TraceGenConfig {
    double session_s = 1200.0;
    double sample_rate_hz = 1000.0;
    double max_fixation_s = 20.0;        // longest dwell between turns
    double fixation_noise_dps = 1.0;     // sd of idle angular velocity, per axis
    double turn_peak_dps = 100.0;        // trapezoid plateau speed
    double turn_duration_ms = 800.0;
    std::uint64_t seed = 0;
};

void validate(const TraceGenConfig& cfg);

// CSV form: header `t_us,wx_dps,wy_dps,wz_dps`, one sample per row,
// velocities at 6 decimal places, LF line endings.
MotionTrace parse_trace(std::istream& in);
MotionTrace parse_trace(const std::string& text);
MotionTrace load_trace(const std::filesystem::path& path);

void serialize_trace(const MotionTrace& trace, std::ostream& out);
std::string serialize_trace(const MotionTrace& trace);
void save_trace(const MotionTrace& trace, const std::filesystem::path& path);

// Deterministic per seed: alternating Gaussian fixation noise and
// single-axis trapezoidal turns, starting at rest.
MotionTrace generate_session_trace(const TraceGenConfig& cfg);

}  // namespace gatesim
