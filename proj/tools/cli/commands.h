// Copyright 2026 The qduadic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef QDUADIC_CLI_COMMANDS_H
#define QDUADIC_CLI_COMMANDS_H

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cli/report.h"

namespace qduadic::cli {

/// Stable process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitNonexistence = 2,
    kExitPartial = 3,
    kExitAssertion = 4,
};

class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Checks n odd and >= 3, q a prime power and gcd(n, q) = 1.
void require_admissible(std::uint64_t n, std::uint64_t q);

struct ExistsResult {
    bool exists = false;
    std::optional<std::uint32_t> witness;  // largest x < n with x^2 = q mod n
    std::vector<std::uint32_t> square_roots;
    std::vector<std::uint32_t> coset_representatives;
    std::vector<std::size_t> coset_sizes;
};

ExistsResult run_exists(std::uint32_t n, std::uint64_t q);
std::string render_exists(std::uint32_t n, std::uint64_t q, const ExistsResult& r, const std::string& format);

struct BuildRequest {
    Construction construction = Construction::kCss;
    std::uint32_t n = 0;
    std::uint64_t q = 0;
    std::optional<std::string> splitting_id;
    StabilizerOptions options;
};

/// Full pipeline. Throws UsageError, NonexistenceError or ConsistencyError.
Report run_build(const BuildRequest& request);

/// 0 when d and purity are exact, kExitPartial otherwise.
int build_exit_code(const Report& report);

std::string render_build_text(const Report& report);

struct SurveyRow {
    std::uint32_t n = 0;
    bool exists = false;
    std::uint64_t order = 0;  // ord_n(q)
    bool mu_minus_one = false;
    std::optional<bool> mu_minus_q;
    std::string status;  // ok, partial, nonexistent, refused
    std::string splitting_id;
    std::optional<StabilizerParams> params;
};

struct SurveyTable {
    std::uint64_t q = 0;
    std::uint32_t max_n = 0;
    Construction construction = Construction::kCss;
    std::uint64_t budget = 0;
    std::vector<SurveyRow> rows;
};

inline constexpr std::uint32_t kSurveyMaxN = 1023;

SurveyTable run_survey(std::uint64_t q, std::uint32_t max_n, Construction construction,
                       const StabilizerOptions& options, std::ostream* progress = nullptr);
std::string render_survey_json(const SurveyTable& table);
std::string render_survey_csv(const SurveyTable& table);

struct Tally {
    std::uint64_t pass = 0;
    std::uint64_t fail = 0;
    std::uint64_t skipped = 0;
    std::vector<std::string> failures;
};

struct VerifySummary {
    std::uint64_t q = 0;
    std::uint32_t max_n = 0;
    std::uint64_t budget = 0;
    std::map<std::string, Tally> tallies;

    bool ok() const;
};

/// Runs the property suites over every admissible n <= max_n. Work beyond
/// the budget is counted as skipped.
VerifySummary run_verify(std::uint64_t q, std::uint32_t max_n, const StabilizerOptions& options,
                         std::ostream* progress = nullptr);
std::string render_verify(const VerifySummary& summary, const std::string& format);

}  // namespace qduadic::cli

#endif  // QDUADIC_CLI_COMMANDS_H
