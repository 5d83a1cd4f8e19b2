#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gatesim {

inline constexpr int kSymptomCount = 14;

// The 14 questionnaire symptoms, in questionnaire order.
enum class Symptom {
    kGeneralDiscomfort = 0,
    kFatigue,
    kHeadache,
    kEyeStrain,
    kDifficultFocusing,
    kNausea,
    kDifficultyConcentrating,
    kStomachAwareness,
    kBlurredVision,
    kIncreasedSalivation,
    kDizzyEyesOpen,
    kDizzyEyesClosed,
    kVertigo,
    kFullnessOfHead,
};

std::span<const std::string_view, kSymptomCount> symptom_names();
std::string_view symptom_name(Symptom s);

enum class Condition { kExperimental, kControl };

// One filled-in questionnaire: every symptom rated 0..3.
struct SsqResponse {
    std::string participant_id;
    Condition condition = Condition::kExperimental;
    std::array<int, kSymptomCount> scores{};

    bool operator==(const SsqResponse&) const = default;
};

void validate(const SsqResponse& r);

// CSV form: header `participant_id,condition,<14 symptom names>`;
// condition is `experimental` or `control`; scores are integers 0..3.
std::vector<SsqResponse> parse_ssq_csv(std::istream& in);
std::vector<SsqResponse> parse_ssq_csv(const std::string& text);
std::vector<SsqResponse> load_ssq_csv(const std::filesystem::path& path);
void serialize_ssq_csv(std::span<const SsqResponse> responses, std::ostream& out);
std::string serialize_ssq_csv(std::span<const SsqResponse> responses);

// Matched-samples t-test output for one difference vector.
struct PairedTestResult {
    int n = 0;
    double mean = 0.0;
    double sd = 0.0;  // sample standard deviation, n-1 denominator
    double se = 0.0;  // sd / sqrt(n)
    double t = 0.0;
    int df = 0;       // n - 1
    double p = 0.0;   // two-tailed
    double ci_low = 0.0;   // 95% confidence interval of the mean difference
    double ci_high = 0.0;
};

// Per-symptom vectors of (experimental - control), participants ordered as
// they appear in the experimental collection.
using SymptomDiffs = std::array<std::vector<double>, kSymptomCount>;
SymptomDiffs diff_scores(std::span<const SsqResponse> experimental,
                         std::span<const SsqResponse> control);

// t-test on a raw difference vector (length >= 2). sd == 0 is reported as
// degenerate rather than dividing by zero: t = +/-inf with p = 0 when the
// mean is nonzero, t = 0 with p = 1 when it is zero.
PairedTestResult paired_t_from_raw(std::span<const double> diffs);

// Same formulas applied to precomputed moments.
PairedTestResult paired_t_from_summary(double mean, double sd, int n);

struct SymptomTest {
    Symptom symptom = Symptom::kGeneralDiscomfort;
    PairedTestResult result;
    bool significant = false;  // p < 0.05
};

struct SymptomReport {
    std::array<SymptomTest, kSymptomCount> rows;
};

SymptomReport build_symptom_report(std::span<const SsqResponse> experimental,
                                   std::span<const SsqResponse> control);

// Partition a mixed collection by its condition column (experimental first).
std::pair<std::vector<SsqResponse>, std::vector<SsqResponse>>
split_by_condition(std::span<const SsqResponse> responses);

}  // namespace gatesim
