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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "cli/commands.h"
#include "qduadic/errors.h"

namespace {

using namespace qduadic;
using namespace qduadic::cli;

unsigned default_workers() {
    if (const char* env = std::getenv("QDUADIC_WORKERS")) {
        try {
            const unsigned long v = std::stoul(env);
            if (v >= 1 && v <= 1024) {
                return static_cast<unsigned>(v);
            }
        } catch (const std::exception&) {
        }
        std::cerr << "qduadic: ignoring invalid QDUADIC_WORKERS='" << env << "'\n";
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

struct Flags {
    std::string budget = "2^26";
    unsigned workers = default_workers();
    std::string format;
    std::string output;
};

StabilizerOptions make_options(const Flags& f) {
    StabilizerOptions o;
    try {
        o.distance.budget = parse_budget(f.budget);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    o.distance.support_budget = o.distance.budget;
    o.distance.workers = f.workers;
    return o;
}

void emit(const Flags& f, const std::string& text) {
    if (f.output.empty()) {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream out(f.output, std::ios::binary);
    if (!out) {
        throw UsageError("cannot open output file '" + f.output + "'");
    }
    out << text;
}

void add_common(CLI::App* cmd, Flags& f, bool with_budget, std::initializer_list<std::string> formats) {
    if (with_budget) {
        cmd->add_option("--budget", f.budget, "Enumeration and support-search budget, e.g. 2^26")
            ->capture_default_str();
        cmd->add_option("--workers", f.workers, "Worker threads (default: QDUADIC_WORKERS or all cores)")
            ->check(CLI::Range(1U, 1024U));
    }
    cmd->add_option("--format", f.format, "Output format")
        ->check(CLI::IsMember(std::vector<std::string>(formats)))
        ->default_str(*formats.begin());
    cmd->add_option("--output", f.output, "Write to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Duadic codes and the quantum codes built from them"};
    app.require_subcommand(1);

    Flags exists_flags, build_flags, survey_flags, verify_flags;
    std::uint32_t n = 0;
    std::uint64_t q = 0;
    std::uint32_t max_n = 0;
    std::string construction;
    std::string splitting_id;

    auto* exists = app.add_subcommand("exists", "Do duadic codes of length n exist over GF(q)?");
    exists->add_option("n", n, "Code length")->required();
    exists->add_option("q", q, "Field order")->required();
    add_common(exists, exists_flags, false, {"text", "json"});

    auto* build = app.add_subcommand("build", "Build a duadic quantum code and report its parameters");
    build->add_option("construction", construction, "css or hermitian")
        ->required()
        ->check(CLI::IsMember({"css", "hermitian"}));
    build->add_option("n", n, "Code length")->required();
    build->add_option("q", q, "Field order of the quantum code")->required();
    build->add_option("--splitting-id", splitting_id, "Use the splitting with this id");
    add_common(build, build_flags, true, {"json", "text"});

    auto* survey = app.add_subcommand("survey", "Tabulate every admissible length up to --max-n");
    survey->add_option("--q", q, "Field order")->required();
    survey->add_option("--max-n", max_n, "Largest length")->required();
    survey->add_option("--construction", construction, "css or hermitian")
        ->check(CLI::IsMember({"css", "hermitian"}))
        ->default_str("css");
    add_common(survey, survey_flags, true, {"json", "csv"});

    auto* verify = app.add_subcommand("verify", "Run the property suites up to --max-n");
    verify->add_option("--q", q, "Field order")->required();
    verify->add_option("--max-n", max_n, "Largest length")->required();
    add_common(verify, verify_flags, true, {"text", "json"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    auto format_or = [](const Flags& f, const char* fallback) { return f.format.empty() ? fallback : f.format; };
    try {
        if (*exists) {
            ExistsResult r = run_exists(n, q);
            emit(exists_flags, render_exists(n, q, r, format_or(exists_flags, "text")));
            return r.exists ? kExitOk : kExitNonexistence;
        }
        if (*build) {
            BuildRequest req;
            req.construction = construction_from_string(construction);
            req.n = n;
            req.q = q;
            if (!splitting_id.empty()) {
                req.splitting_id = splitting_id;
            }
            req.options = make_options(build_flags);
            Report report = run_build(req);
            emit(build_flags,
                 format_or(build_flags, "json") == "text" ? render_build_text(report) : serialize(report));
            return build_exit_code(report);
        }
        if (*survey) {
            const Construction c = construction_from_string(construction.empty() ? "css" : construction);
            SurveyTable table = run_survey(q, max_n, c, make_options(survey_flags), &std::cerr);
            emit(survey_flags, format_or(survey_flags, "json") == "csv" ? render_survey_csv(table)
                                                                        : render_survey_json(table));
            return kExitOk;
        }
        if (*verify) {
            VerifySummary summary = run_verify(q, max_n, make_options(verify_flags), &std::cerr);
            emit(verify_flags, render_verify(summary, format_or(verify_flags, "text")));
            return summary.ok() ? kExitOk : kExitAssertion;
        }
    } catch (const NonexistenceError& e) {
        std::cerr << "qduadic: " << e.what() << "\n";
        return kExitNonexistence;
    } catch (const ConsistencyError& e) {
        std::cerr << "qduadic: internal consistency failure: " << e.what() << "\n";
        return kExitAssertion;
    } catch (const std::invalid_argument& e) {
        std::cerr << "qduadic: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "qduadic: " << e.what() << "\n";
        return kExitAssertion;
    }
    return kExitUsage;
}
