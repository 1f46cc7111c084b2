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
#ifndef QDUADIC_CLI_REPORT_H
#define QDUADIC_CLI_REPORT_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qduadic/duadic.h"
#include "qduadic/stabilizer.h"

namespace qduadic {

void to_json(nlohmann::json& j, const DistanceResult& r);
void from_json(const nlohmann::json& j, DistanceResult& r);
void to_json(nlohmann::json& j, const SquareRootReport& r);
void from_json(const nlohmann::json& j, SquareRootReport& r);
void to_json(nlohmann::json& j, const PrimeCertificate& c);
void from_json(const nlohmann::json& j, PrimeCertificate& c);
void to_json(nlohmann::json& j, const DegeneracyCertificate& c);
void from_json(const nlohmann::json& j, DegeneracyCertificate& c);
void to_json(nlohmann::json& j, const StabilizerParams& p);
void from_json(const nlohmann::json& j, StabilizerParams& p);

namespace cli {

inline constexpr int kSchemaVersion = 1;

struct CodeSummary {
    std::size_t dimension = 0;
    std::vector<std::uint32_t> defining_set;
    std::vector<std::uint32_t> coset_representatives;
    std::vector<std::uint64_t> generator_polynomial;  // little-endian field element indices

    bool operator==(const CodeSummary&) const = default;
};

struct SplittingSummary {
    std::string id;
    std::uint32_t a = 0;
    std::vector<std::uint32_t> s0;
    std::vector<std::uint32_t> s1;
    std::vector<std::uint32_t> s0_representatives;
    std::vector<std::uint32_t> s1_representatives;
    bool mu_minus_one = false;
    std::optional<bool> mu_minus_q;  // Hermitian only

    bool operator==(const SplittingSummary&) const = default;
};

struct QuartetSummary {
    CodeSummary d0;
    CodeSummary d1;
    CodeSummary c0;
    CodeSummary c1;

    bool operator==(const QuartetSummary&) const = default;
};

/// Output of `build`. Everything except timing is deterministic.
struct Report {
    int schema_version = kSchemaVersion;
    std::uint32_t n = 0;
    std::uint64_t q = 0;
    Construction construction = Construction::kCss;
    std::string code_field;
    std::string parameters;  // e.g. [[7,1,3]]_2
    std::uint64_t budget = 0;
    std::uint64_t support_budget = 0;
    SplittingSummary splitting;
    std::optional<QuartetSummary> quartet;  // absent when only theory bounds were available
    StabilizerParams params;
    DegeneracyCertificate certificate;
    double seconds = 0.0;

    bool operator==(const Report&) const = default;
};

void to_json(nlohmann::json& j, const CodeSummary& c);
void from_json(const nlohmann::json& j, CodeSummary& c);
void to_json(nlohmann::json& j, const SplittingSummary& s);
void from_json(const nlohmann::json& j, SplittingSummary& s);
void to_json(nlohmann::json& j, const QuartetSummary& q);
void from_json(const nlohmann::json& j, QuartetSummary& q);
void to_json(nlohmann::json& j, const Report& r);
void from_json(const nlohmann::json& j, Report& r);

CodeSummary summarize(const CyclicCode& code);
SplittingSummary summarize(const Splitting& s, Construction construction);
QuartetSummary summarize(const DuadicQuartet& quartet);

/// "[[n,k,d]]_q", with "lo..hi" in place of d for intervals.
std::string parameter_string(const StabilizerParams& p);

std::string serialize(const Report& r);
Report parse_report(const std::string& text);

/// Drops the timing object so reports can be compared byte for byte.
std::string serialize_without_timing(const Report& r);

}  // namespace cli
}  // namespace qduadic

#endif  // QDUADIC_CLI_REPORT_H
