#include "gatesim/ssq.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "gatesim/errors.hpp"
#include "gatesim/student_t.hpp"

namespace gatesim {

namespace {

constexpr std::array<std::string_view, kSymptomCount> kSymptomNames = {
    "GeneralDiscomfort",
    "Fatigue",
    "Headache",
    "EyeStrain",
    "DifficultFocusing",
    "Nausea",
    "DifficultyConcentrating",
    "StomachAwareness",
    "BlurredVision",
    "IncreasedSalivation",
    "DizzyEyesOpen",
    "DizzyEyesClosed",
    "Vertigo",
    "FullnessOfHead",
};

std::string row_msg(std::size_t line_no, const std::string& what) {
    return "ssq csv line " + std::to_string(line_no) + ": " + what;
}

std::vector<std::string_view> split(std::string_view sv) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = sv.find(',', start);
        if (comma == std::string_view::npos) {
            out.push_back(sv.substr(start));
            return out;
        }
        out.push_back(sv.substr(start, comma - start));
        start = comma + 1;
    }
}

std::string expected_header() {
    std::string h = "participant_id,condition";
    for (const auto name : kSymptomNames) {
        h += ',';
        h += name;
    }
    return h;
}

}  // namespace

std::span<const std::string_view, kSymptomCount> symptom_names() {
    return kSymptomNames;
}

std::string_view symptom_name(Symptom s) {
    return kSymptomNames[static_cast<std::size_t>(s)];
}

void validate(const SsqResponse& r) {
    if (r.participant_id.empty()) throw ValidationError("empty participant_id");
    for (int i = 0; i < kSymptomCount; ++i) {
        const int score = r.scores[static_cast<std::size_t>(i)];
        if (score < 0 || score > 3) {
            throw ValidationError("score " + std::to_string(score) + " for " +
                                  std::string(kSymptomNames[static_cast<std::size_t>(i)]) +
                                  " outside 0..3");
        }
    }
}

std::vector<SsqResponse> parse_ssq_csv(std::istream& in) {
    std::vector<SsqResponse> responses;
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line)) {
        throw ParseError("ssq csv: empty input, expected header");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != expected_header()) {
        throw ParseError(row_msg(1, "bad header, expected '" + expected_header() + "'"));
    }

    std::set<std::pair<std::string, Condition>> seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split(line);
        if (fields.size() != 2 + kSymptomCount) {
            throw ParseError(row_msg(line_no, "expected " + std::to_string(2 + kSymptomCount) +
                                                  " fields, got " + std::to_string(fields.size())));
        }
        SsqResponse r;
        r.participant_id = std::string(fields[0]);
        if (r.participant_id.empty()) {
            throw ValidationError(row_msg(line_no, "empty participant_id"));
        }
        if (fields[1] == "experimental") {
            r.condition = Condition::kExperimental;
        } else if (fields[1] == "control") {
            r.condition = Condition::kControl;
        } else {
            throw ValidationError(row_msg(line_no, "condition must be 'experimental' or 'control', got '" +
                                                       std::string(fields[1]) + "'"));
        }
        for (int i = 0; i < kSymptomCount; ++i) {
            const auto f = fields[static_cast<std::size_t>(2 + i)];
            int score = 0;
            const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), score);
            if (ec != std::errc{} || ptr != f.data() + f.size()) {
                throw ParseError(row_msg(line_no, "non-integer score '" + std::string(f) + "' for " +
                                                      std::string(kSymptomNames[static_cast<std::size_t>(i)])));
            }
            if (score < 0 || score > 3) {
                throw ValidationError(row_msg(line_no, "score " + std::to_string(score) + " for " +
                                                           std::string(kSymptomNames[static_cast<std::size_t>(i)]) +
                                                           " outside 0..3"));
            }
            r.scores[static_cast<std::size_t>(i)] = score;
        }
        if (!seen.insert({r.participant_id, r.condition}).second) {
            throw ValidationError(row_msg(line_no, "duplicate (participant '" + r.participant_id +
                                                       "', condition '" + std::string(fields[1]) + "')"));
        }
        responses.push_back(std::move(r));
    }
    return responses;
}

std::vector<SsqResponse> parse_ssq_csv(const std::string& text) {
    std::istringstream in(text);
    return parse_ssq_csv(in);
}

std::vector<SsqResponse> load_ssq_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open ssq csv '" + path.string() + "'");
    }
    return parse_ssq_csv(in);
}

void serialize_ssq_csv(std::span<const SsqResponse> responses, std::ostream& out) {
    out << expected_header() << '\n';
    for (const SsqResponse& r : responses) {
        validate(r);
        out << r.participant_id << ','
            << (r.condition == Condition::kExperimental ? "experimental" : "control");
        for (const int score : r.scores) out << ',' << score;
        out << '\n';
    }
}

std::string serialize_ssq_csv(std::span<const SsqResponse> responses) {
    std::ostringstream out;
    serialize_ssq_csv(responses, out);
    return out.str();
}

std::pair<std::vector<SsqResponse>, std::vector<SsqResponse>>
split_by_condition(std::span<const SsqResponse> responses) {
    std::pair<std::vector<SsqResponse>, std::vector<SsqResponse>> out;
    for (const SsqResponse& r : responses) {
        (r.condition == Condition::kExperimental ? out.first : out.second).push_back(r);
    }
    return out;
}

SymptomDiffs diff_scores(std::span<const SsqResponse> experimental,
                         std::span<const SsqResponse> control) {
    std::map<std::string, const SsqResponse*> by_id;
    for (const SsqResponse& r : control) {
        if (r.condition != Condition::kControl) {
            throw PairingError("response for '" + r.participant_id + "' in the control set is not control");
        }
        if (!by_id.emplace(r.participant_id, &r).second) {
            throw PairingError("participant '" + r.participant_id + "' appears twice in the control condition");
        }
    }
    SymptomDiffs diffs;
    std::set<std::string> seen_exp;
    for (const SsqResponse& e : experimental) {
        if (e.condition != Condition::kExperimental) {
            throw PairingError("response for '" + e.participant_id + "' in the experimental set is not experimental");
        }
        if (!seen_exp.insert(e.participant_id).second) {
            throw PairingError("participant '" + e.participant_id + "' appears twice in the experimental condition");
        }
        const auto it = by_id.find(e.participant_id);
        if (it == by_id.end()) {
            throw PairingError("participant '" + e.participant_id + "' has no control response");
        }
        const SsqResponse& c = *it->second;
        for (int i = 0; i < kSymptomCount; ++i) {
            const auto idx = static_cast<std::size_t>(i);
            diffs[idx].push_back(static_cast<double>(e.scores[idx] - c.scores[idx]));
        }
        by_id.erase(it);
    }
    if (!by_id.empty()) {
        throw PairingError("participant '" + by_id.begin()->first + "' has no experimental response");
    }
    return diffs;
}

namespace {

PairedTestResult t_test_from_moments(double mean, double sd, int n) {
    PairedTestResult r;
    r.n = n;
    r.mean = mean;
    r.sd = sd;
    r.df = n - 1;
    r.se = sd / std::sqrt(static_cast<double>(n));
    if (sd == 0.0) {
        // Degenerate: all differences identical.
        if (mean == 0.0) {
            r.t = 0.0;
            r.p = 1.0;
        } else {
            r.t = std::copysign(std::numeric_limits<double>::infinity(), mean);
            r.p = 0.0;
        }
        r.ci_low = r.ci_high = mean;
        return r;
    }
    r.t = mean / r.se;
    r.p = two_tailed_p(r.t, static_cast<double>(r.df));
    const double margin = t_critical(0.975, static_cast<double>(r.df)) * r.se;
    r.ci_low = mean - margin;
    r.ci_high = mean + margin;
    return r;
}

}  // namespace

PairedTestResult paired_t_from_raw(std::span<const double> diffs) {
    const int n = static_cast<int>(diffs.size());
    if (n < 2) {
        throw InsufficientDataError("paired t-test needs at least 2 pairs, got " + std::to_string(n));
    }
    double sum = 0.0;
    for (const double d : diffs) {
        if (!std::isfinite(d)) throw ValidationError("non-finite difference value");
        sum += d;
    }
    const double mean = sum / n;
    double ssq = 0.0;
    for (const double d : diffs) {
        const double dev = d - mean;
        ssq += dev * dev;
    }
    const double sd = std::sqrt(ssq / (n - 1));
    return t_test_from_moments(mean, sd, n);
}

PairedTestResult paired_t_from_summary(double mean, double sd, int n) {
    if (n < 2) {
        throw InsufficientDataError("paired t-test needs at least 2 pairs, got " + std::to_string(n));
    }
    if (!std::isfinite(mean) || !std::isfinite(sd) || sd < 0.0) {
        throw ValidationError("paired_t_from_summary: mean must be finite and sd >= 0");
    }
    return t_test_from_moments(mean, sd, n);
}

SymptomReport build_symptom_report(std::span<const SsqResponse> experimental,
                                   std::span<const SsqResponse> control) {
    const SymptomDiffs diffs = diff_scores(experimental, control);
    SymptomReport report;
    for (int i = 0; i < kSymptomCount; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        SymptomTest& row = report.rows[idx];
        row.symptom = static_cast<Symptom>(i);
        row.result = paired_t_from_raw(diffs[idx]);
        row.significant = row.result.p < 0.05;
    }
    return report;
}

}  // namespace gatesim
