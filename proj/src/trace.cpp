#include "gatesim/trace.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "gatesim/errors.hpp"
#include "gatesim/rng.hpp"

namespace gatesim {

namespace {

constexpr const char* kHeader = "t_us,wx_dps,wy_dps,wz_dps";

std::string line_msg(std::size_t line_no, const std::string& what) {
    return "trace csv line " + std::to_string(line_no) + ": " + what;
}

// Splits on ',' without allocation-per-field surprises; returns field count.
std::size_t split_fields(const std::string& line, std::array<std::string_view, 5>& out) {
    std::size_t n = 0;
    std::size_t start = 0;
    const std::string_view sv(line);
    while (n < out.size()) {
        const std::size_t comma = sv.find(',', start);
        if (comma == std::string_view::npos) {
            out[n++] = sv.substr(start);
            return n;
        }
        out[n++] = sv.substr(start, comma - start);
        start = comma + 1;
    }
    return n;  // more fields than expected; caller reports the mismatch
}

std::int64_t parse_i64(std::string_view f, std::size_t line_no, const char* name) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
    if (ec != std::errc{} || ptr != f.data() + f.size()) {
        throw ParseError(line_msg(line_no, std::string("non-integer ") + name + " '" + std::string(f) + "'"));
    }
    return v;
}

double parse_f64(std::string_view f, std::size_t line_no, const char* name) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
    if (ec != std::errc{} || ptr != f.data() + f.size()) {
        throw ParseError(line_msg(line_no, std::string("non-numeric ") + name + " '" + std::string(f) + "'"));
    }
    return v;
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

bool sample_is_finite(const GyroSample& s) {
    return std::isfinite(s.wx_dps) && std::isfinite(s.wy_dps) && std::isfinite(s.wz_dps);
}

void validate(const MotionTrace& trace) {
    if (!(trace.nominal_rate_hz > 0.0)) {
        throw ValidationError("trace nominal_rate_hz must be > 0");
    }
    std::int64_t prev = -1;
    for (std::size_t i = 0; i < trace.samples.size(); ++i) {
        const GyroSample& s = trace.samples[i];
        if (s.t_us < 0) {
            throw ValidationError("trace sample " + std::to_string(i) + ": negative timestamp");
        }
        if (s.t_us <= prev) {
            throw ValidationError("trace sample " + std::to_string(i) + ": timestamps not strictly increasing (" +
                                  std::to_string(s.t_us) + " after " + std::to_string(prev) + ")");
        }
        if (!sample_is_finite(s)) {
            throw ValidationError("trace sample " + std::to_string(i) + ": non-finite velocity");
        }
        prev = s.t_us;
    }
}

void validate(const TraceGenConfig& cfg) {
    if (!(cfg.session_s > 0.0)) throw ValidationError("session_s must be > 0");
    if (!(cfg.sample_rate_hz > 0.0) || cfg.sample_rate_hz > 1e6) {
        throw ValidationError("sample_rate_hz must be in (0, 1e6]");
    }
    if (!(cfg.max_fixation_s > 0.0)) throw ValidationError("max_fixation_s must be > 0");
    if (cfg.fixation_noise_dps < 0.0) throw ValidationError("fixation_noise_dps must be >= 0");
    if (!(cfg.turn_peak_dps > cfg.fixation_noise_dps)) {
        throw ValidationError("turn_peak_dps must exceed fixation_noise_dps");
    }
    if (!(cfg.turn_duration_ms > 0.0)) throw ValidationError("turn_duration_ms must be > 0");
}

MotionTrace parse_trace(std::istream& in) {
    MotionTrace trace;
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line)) {
        throw ParseError("trace csv: empty input, expected header");
    }
    strip_cr(line);
    if (line != kHeader) {
        throw ParseError(line_msg(1, "bad header, expected '" + std::string(kHeader) + "'"));
    }
    std::array<std::string_view, 5> f;
    while (std::getline(in, line)) {
        ++line_no;
        strip_cr(line);
        if (line.empty()) continue;  // tolerate a trailing blank line
        const std::size_t nf = split_fields(line, f);
        if (nf != 4) {
            throw ParseError(line_msg(line_no, "expected 4 fields, got " + std::to_string(nf)));
        }
        GyroSample s;
        s.t_us = parse_i64(f[0], line_no, "t_us");
        s.wx_dps = parse_f64(f[1], line_no, "wx_dps");
        s.wy_dps = parse_f64(f[2], line_no, "wy_dps");
        s.wz_dps = parse_f64(f[3], line_no, "wz_dps");
        if (s.t_us < 0) {
            throw ValidationError(line_msg(line_no, "negative timestamp"));
        }
        if (!sample_is_finite(s)) {
            throw ValidationError(line_msg(line_no, "non-finite velocity"));
        }
        if (!trace.samples.empty() && s.t_us <= trace.samples.back().t_us) {
            throw ValidationError(line_msg(line_no, "timestamps not strictly increasing"));
        }
        trace.samples.push_back(s);
    }
    return trace;
}

MotionTrace parse_trace(const std::string& text) {
    std::istringstream in(text);
    return parse_trace(in);
}

MotionTrace load_trace(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open trace file '" + path.string() + "'");
    }
    return parse_trace(in);
}

void serialize_trace(const MotionTrace& trace, std::ostream& out) {
    validate(trace);
    out << kHeader << '\n';
    char buf[128];
    for (const GyroSample& s : trace.samples) {
        std::snprintf(buf, sizeof buf, "%lld,%.6f,%.6f,%.6f\n",
                      static_cast<long long>(s.t_us), s.wx_dps, s.wy_dps, s.wz_dps);
        out << buf;
    }
}

std::string serialize_trace(const MotionTrace& trace) {
    std::ostringstream out;
    serialize_trace(trace, out);
    return out.str();
}

void save_trace(const MotionTrace& trace, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    serialize_trace(trace, out);
    if (!out) {
        throw IoError("write failed for '" + path.string() + "'");
    }
}

namespace {

struct TurnSegment {
    double start_s = 0.0;
    double duration_s = 0.0;
    int axis = 0;       // 0=x 1=y 2=z
    double peak_dps = 0.0;  // signed
};

// Trapezoid: quarter ramp up, half plateau, quarter ramp down.
double trapezoid_value(const TurnSegment& turn, double t_s) {
    const double tau = t_s - turn.start_s;
    if (tau < 0.0 || tau >= turn.duration_s) return 0.0;
    const double ramp = 0.25 * turn.duration_s;
    if (tau < ramp) return turn.peak_dps * (tau / ramp);
    if (tau < turn.duration_s - ramp) return turn.peak_dps;
    return turn.peak_dps * ((turn.duration_s - tau) / ramp);
}

}  // namespace

MotionTrace generate_session_trace(const TraceGenConfig& cfg) {
    validate(cfg);
    Rng rng(cfg.seed);

    // Lay out the alternating fixation/turn plan over the whole session
    // before drawing any noise, so the plan draws and the per-sample draws
    // never interleave.
    const double turn_s = cfg.turn_duration_ms / 1000.0;
    const double min_fix_s = std::min(1.0, 0.5 * cfg.max_fixation_s);
    std::vector<TurnSegment> turns;
    double cursor_s = 0.0;
    while (cursor_s < cfg.session_s) {
        cursor_s += rng.uniform(min_fix_s, cfg.max_fixation_s);
        if (cursor_s >= cfg.session_s) break;
        TurnSegment turn;
        turn.start_s = cursor_s;
        turn.duration_s = turn_s;
        turn.axis = static_cast<int>(rng.uniform_index(3));
        turn.peak_dps = rng.coin_flip() ? cfg.turn_peak_dps : -cfg.turn_peak_dps;
        turns.push_back(turn);
        cursor_s += turn_s;
    }

    const auto n_samples =
        static_cast<std::int64_t>(std::max<double>(1.0, std::llround(cfg.session_s * cfg.sample_rate_hz)));

    MotionTrace trace;
    trace.nominal_rate_hz = cfg.sample_rate_hz;
    trace.samples.reserve(static_cast<std::size_t>(n_samples));

    std::size_t turn_idx = 0;
    for (std::int64_t k = 0; k < n_samples; ++k) {
        const double t_s = static_cast<double>(k) / cfg.sample_rate_hz;
        GyroSample s;
        s.t_us = std::llround(t_s * 1e6);
        s.wx_dps = rng.gaussian(0.0, cfg.fixation_noise_dps);
        s.wy_dps = rng.gaussian(0.0, cfg.fixation_noise_dps);
        s.wz_dps = rng.gaussian(0.0, cfg.fixation_noise_dps);
        while (turn_idx < turns.size() && t_s >= turns[turn_idx].start_s + turns[turn_idx].duration_s) {
            ++turn_idx;
        }
        if (turn_idx < turns.size()) {
            const TurnSegment& turn = turns[turn_idx];
            const double w = trapezoid_value(turn, t_s);
            if (w != 0.0) {
                if (turn.axis == 0) s.wx_dps += w;
                else if (turn.axis == 1) s.wy_dps += w;
                else s.wz_dps += w;
            }
        }
        trace.samples.push_back(s);
    }
    return trace;
}

}  // namespace gatesim
