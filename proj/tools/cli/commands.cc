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

#include "cli/commands.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "qduadic/errors.h"
#include "qduadic/number_theory.h"

namespace qduadic::cli {

using nlohmann::json;

void require_admissible(std::uint64_t n, std::uint64_t q) {
    if (n < 3 || n % 2 == 0 || n > UINT32_MAX) {
        throw UsageError("length n=" + std::to_string(n) + " must be odd and at least 3");
    }
    try {
        prime_power_decomposition(q);
    } catch (const std::invalid_argument&) {
        throw UsageError("field order q=" + std::to_string(q) + " is not a prime power");
    }
    if (std::gcd(n, q) != 1) {
        throw UsageError("gcd(n, q) = gcd(" + std::to_string(n) + ", " + std::to_string(q) + ") must be 1");
    }
}

ExistsResult run_exists(std::uint32_t n, std::uint64_t q) {
    require_admissible(n, q);
    ExistsResult r;
    r.square_roots = square_roots_mod(q, n);
    std::sort(r.square_roots.begin(), r.square_roots.end());
    r.exists = !r.square_roots.empty();
    if (r.exists) {
        r.witness = r.square_roots.back();
    }
    CosetStructure cs(n, q);
    for (const auto& coset : cs.cosets()) {
        r.coset_representatives.push_back(coset.front());
        r.coset_sizes.push_back(coset.size());
    }
    return r;
}

std::string render_exists(std::uint32_t n, std::uint64_t q, const ExistsResult& r, const std::string& format) {
    if (format == "json") {
        json j{{"schema_version", kSchemaVersion},
               {"n", n},
               {"q", q},
               {"exists", r.exists},
               {"witness", r.witness ? json(*r.witness) : json(nullptr)},
               {"square_roots", r.square_roots},
               {"coset_representatives", r.coset_representatives},
               {"coset_sizes", r.coset_sizes}};
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "exists: " << (r.exists ? "yes" : "no") << "\n";
    if (r.witness) {
        out << "witness: " << *r.witness << " (" << *r.witness << "^2 = " << q << " mod " << n << ")\n";
        out << "square roots:";
        for (std::uint32_t x : r.square_roots) {
            out << " " << x;
        }
        out << "\n";
    }
    out << "cosets: " << r.coset_representatives.size() << "\n";
    for (std::size_t i = 0; i < r.coset_representatives.size(); ++i) {
        out << "  C" << r.coset_representatives[i] << " size " << r.coset_sizes[i] << "\n";
    }
    return out.str();
}

namespace {

std::uint64_t code_field_order(Construction construction, std::uint64_t q) {
    return construction == Construction::kCss ? q : checked_pow(q, 2);
}

Splitting choose_splitting(const BuildRequest& req, std::uint64_t code_q) {
    if (req.splitting_id) {
        for (const auto& s : find_splittings(req.n, code_q)) {
            if (s.id() == *req.splitting_id) {
                return s;
            }
        }
        throw UsageError("no splitting of n=" + std::to_string(req.n) + " over GF(" + std::to_string(code_q) +
                         ") has id " + *req.splitting_id);
    }
    if (req.construction == Construction::kCss) {
        auto found = find_splittings(req.n, code_q, 1);
        if (found.empty()) {
            throw NonexistenceError("no splitting of n=" + std::to_string(req.n) + " over GF(" +
                                    std::to_string(code_q) + ")");
        }
        return found.front();
    }
    auto by_minus_q = splitting_by(req.n, code_q, -static_cast<std::int64_t>(req.q % req.n));
    if (!by_minus_q) {
        throw NonexistenceError("mu_{-" + std::to_string(req.q) + "} does not give a splitting of n=" +
                                std::to_string(req.n) + " over GF(" + std::to_string(code_q) +
                                "); the Hermitian construction is refused");
    }
    return *by_minus_q;
}

}  // namespace

Report run_build(const BuildRequest& req) {
    const auto start = std::chrono::steady_clock::now();
    require_admissible(req.n, req.q);
    if (req.construction == Construction::kCss && !duadic_exists(req.n, req.q)) {
        throw NonexistenceError("no duadic codes of length " + std::to_string(req.n) + " over GF(" +
                                std::to_string(req.q) + "): q is not a square mod n");
    }
    const std::uint64_t code_q = code_field_order(req.construction, req.q);
    const Splitting s = choose_splitting(req, code_q);

    Report report;
    report.n = req.n;
    report.q = req.q;
    report.construction = req.construction;
    report.budget = req.options.distance.budget;
    report.support_budget = req.options.distance.support_budget;
    report.splitting = summarize(s, req.construction);
    FieldPtr field = make_field_of_order(code_q);
    report.code_field = field->name();
    try {
        DuadicQuartet quartet = build_quartet(s, field);
        report.quartet = summarize(quartet);
        report.params = req.construction == Construction::kCss ? css_from_quartet(quartet, req.options)
                                                               : hermitian_from_quartet(quartet, req.options);
    } catch (const FieldTooLargeError&) {
        report.params = theory_params(s, req.construction, req.options);
    }
    report.certificate = degeneracy_certificate(req.n, req.q, req.construction);
    report.params = degeneracy_verdict(std::move(report.params), report.certificate);
    report.parameters = parameter_string(report.params);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

int build_exit_code(const Report& report) {
    return report.params.d.is_exact() && report.params.purity.is_exact() ? kExitOk : kExitPartial;
}

namespace {

std::string describe(const DistanceResult& r) {
    std::string range = r.is_exact() ? std::to_string(r.lo) : "[" + std::to_string(r.lo) + ", " + std::to_string(r.hi) + "]";
    return to_string(r.kind) + " " + range + " (" + to_string(r.method) + ", work " + std::to_string(r.work) + ")";
}

std::string join(const std::vector<std::uint32_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? " " : "") + std::to_string(v[i]);
    }
    return out;
}

}  // namespace

std::string render_build_text(const Report& r) {
    std::ostringstream out;
    const auto& p = r.params;
    out << r.parameters << " " << to_string(r.construction) << " over " << r.code_field << "\n";
    out << "splitting  " << r.splitting.id << " a=" << r.splitting.a << " S0 cosets {" << join(r.splitting.s0_representatives)
        << "} S1 cosets {" << join(r.splitting.s1_representatives) << "}\n";
    out << "d          " << describe(p.d) << "\n";
    if (p.d_direct) {
        out << "d direct   " << describe(*p.d_direct) << "\n";
    }
    out << "purity     " << describe(p.purity) << "\n";
    out << "degenerate " << to_string(p.degenerate) << " (certificate " << to_string(p.reconciliation)
        << ", predicted bound " << r.certificate.purity_bound << ")\n";
    out << "bounds     d^2>=n " << to_string(p.bound_checks.square_bound) << ", d^2-d+1>=n "
        << to_string(p.bound_checks.mu_minus_one_bound) << "\n";
    if (p.hermitian_dual_by_defining_sets) {
        out << "herm. dual defining sets " << (*p.hermitian_dual_by_defining_sets ? "match" : "differ");
        if (p.hermitian_dual_by_matrices) {
            out << ", matrices " << (*p.hermitian_dual_by_matrices ? "match" : "differ");
        }
        out << "\n";
    }
    for (const auto& note : p.notes) {
        out << "note       " << note << "\n";
    }
    return out.str();
}

SurveyTable run_survey(std::uint64_t q, std::uint32_t max_n, Construction construction,
                       const StabilizerOptions& options, std::ostream* progress) {
    require_admissible(3, q);
    if (max_n < 3 || max_n > kSurveyMaxN) {
        throw UsageError("--max-n must lie in [3, " + std::to_string(kSurveyMaxN) + "]");
    }
    SurveyTable table{q, max_n, construction, options.distance.budget, {}};
    const std::uint64_t code_q = code_field_order(construction, q);
    for (std::uint32_t n = 3; n <= max_n; n += 2) {
        if (std::gcd<std::uint64_t>(n, q) != 1) {
            continue;
        }
        if (progress) {
            *progress << "survey: n=" << n << "\n" << std::flush;
        }
        SurveyRow row;
        row.n = n;
        row.exists = duadic_exists(n, code_q);
        row.order = ord_mod(n, q);
        row.mu_minus_one = splitting_by(n, code_q, -1).has_value();
        if (construction == Construction::kHermitian) {
            row.mu_minus_q = splitting_by(n, code_q, -static_cast<std::int64_t>(q % n)).has_value();
        }
        if (!row.exists) {
            row.status = "nonexistent";
        } else if (row.mu_minus_q && !*row.mu_minus_q) {
            row.status = "refused";
        } else {
            BuildRequest req{construction, n, q, std::nullopt, options};
            Report report = run_build(req);
            row.splitting_id = report.splitting.id;
            row.status = build_exit_code(report) == kExitOk ? "ok" : "partial";
            row.params = std::move(report.params);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

namespace {

std::vector<std::pair<std::string, json>> flatten(const SurveyRow& row) {
    auto opt = [](bool present, auto value) { return present ? json(value) : json(nullptr); };
    const bool has = row.params.has_value();
    const StabilizerParams p = has ? *row.params : StabilizerParams{};
    return {
        {"n", row.n},
        {"exists", row.exists},
        {"order", row.order},
        {"mu_minus_one", row.mu_minus_one},
        {"mu_minus_q", row.mu_minus_q ? json(*row.mu_minus_q) : json(nullptr)},
        {"status", row.status},
        {"splitting_id", opt(has, row.splitting_id)},
        {"k", opt(has, p.k)},
        {"d_kind", opt(has, to_string(p.d.kind))},
        {"d_lo", opt(has, p.d.lo)},
        {"d_hi", opt(has, p.d.hi)},
        {"purity_kind", opt(has, to_string(p.purity.kind))},
        {"purity_lo", opt(has, p.purity.lo)},
        {"purity_hi", opt(has, p.purity.hi)},
        {"degenerate", opt(has, to_string(p.degenerate))},
        {"square_bound", opt(has, to_string(p.bound_checks.square_bound))},
        {"mu_minus_one_bound", opt(has, to_string(p.bound_checks.mu_minus_one_bound))},
    };
}

}  // namespace

std::string render_survey_json(const SurveyTable& table) {
    json rows = json::array();
    for (const auto& row : table.rows) {
        json j = json::object();
        for (auto& [key, value] : flatten(row)) {
            j[key] = value;
        }
        rows.push_back(std::move(j));
    }
    json j{{"schema_version", kSchemaVersion},
           {"q", table.q},
           {"max_n", table.max_n},
           {"construction", to_string(table.construction)},
           {"budget", table.budget},
           {"rows", rows}};
    return j.dump(2) + "\n";
}

std::string render_survey_csv(const SurveyTable& table) {
    std::ostringstream out;
    bool header = false;
    for (const auto& row : table.rows) {
        auto cells = flatten(row);
        if (!header) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                out << (i ? "," : "") << cells[i].first;
            }
            out << "\n";
            header = true;
        }
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const json& v = cells[i].second;
            out << (i ? "," : "") << (v.is_null() ? "" : v.is_string() ? v.get<std::string>() : v.dump());
        }
        out << "\n";
    }
    return out.str();
}

bool VerifySummary::ok() const {
    return std::all_of(tallies.begin(), tallies.end(), [](const auto& kv) { return kv.second.fail == 0; });
}

namespace {

constexpr std::size_t kMaxPartitionsPerLength = 64;
constexpr std::uint32_t kDualCheckMaxN = 35;
constexpr std::uint32_t kEquivalenceMaxN = 21;

class Verifier {
   public:
    Verifier(std::uint64_t q, const StabilizerOptions& options, VerifySummary& summary, std::ostream* progress)
        : q_(q), options_(options), summary_(summary), progress_(progress) {
        options_.strict = false;
        for (const char* name : {"a_existence_iff_square", "b_odd_like_weights_equal", "c_square_root_bound",
                                 "c_minus_one_bound", "d_dual_defining_sets", "e_mu_images_same_weights",
                                 "f_minus_one_and_minus_q_agree", "hermitian_dual_is_odd_like",
                                 "difference_set_path_agrees", "swap_symmetry", "degenerate_family"}) {
            summary_.tallies[name];
        }
    }

    void run_length(std::uint32_t n) {
        const std::uint64_t q2 = checked_pow(q_, 2);
        const bool square = is_quadratic_residue(q_, n);
        const auto first = find_splittings(n, q_, 1);
        record("a_existence_iff_square", square == !first.empty(), "n=" + std::to_string(n));

        auto by_minus_q = splitting_by(n, q2, -static_cast<std::int64_t>(q_ % n));
        if (ord_mod(n, q_) % 2 == 1) {
            auto by_minus_one = splitting_by(n, q2, -1);
            record("f_minus_one_and_minus_q_agree",
                   by_minus_one && by_minus_q && same_partition(*by_minus_one, *by_minus_q), "n=" + std::to_string(n));
        }

        if (!first.empty()) {
            const auto partitions = distinct_partitions(n);
            if (progress_) {
                *progress_ << "verify: n=" << n << " (" << partitions.size() << " CSS partitions)\n" << std::flush;
            }
            std::vector<StabilizerParams> decided;
            for (const auto& s : partitions) {
                if (auto p = check_instance(s, Construction::kCss)) {
                    decided.push_back(*p);
                }
            }
            check_degenerate_family(n, Construction::kCss, decided);
        }
        if (by_minus_q) {
            std::vector<StabilizerParams> decided;
            if (auto p = check_instance(*by_minus_q, Construction::kHermitian)) {
                decided.push_back(*p);
            }
            check_degenerate_family(n, Construction::kHermitian, decided);
        }
    }

   private:
    void record(const std::string& name, bool ok, const std::string& where) {
        Tally& t = summary_.tallies[name];
        if (ok) {
            ++t.pass;
        } else {
            ++t.fail;
            t.failures.push_back(where);
        }
    }

    void record(const std::string& name, CheckOutcome outcome, const std::string& where) {
        if (outcome == CheckOutcome::kPass || outcome == CheckOutcome::kFail) {
            record(name, outcome == CheckOutcome::kPass, where);
        } else if (outcome == CheckOutcome::kVacuous) {
            skip(name);
        }
    }

    void skip(const std::string& name) { ++summary_.tallies[name].skipped; }

    std::vector<Splitting> distinct_partitions(std::uint32_t n) const {
        std::vector<Splitting> out;
        std::set<ResidueSet> seen;
        for (auto s : find_splittings(n, q_, 4096)) {
            if (s.s0.empty() || s.s0.front() != 1) {
                s = swapped(s);
            }
            if (seen.insert(s.s0).second) {
                out.push_back(std::move(s));
                if (out.size() >= kMaxPartitionsPerLength) {
                    break;
                }
            }
        }
        return out;
    }

    bool fits(const CyclicCode& code) const {
        auto total = message_space_size(*code.field(), code.k());
        return total && *total - 1 <= options_.distance.budget;
    }

    void check_duals(const DuadicQuartet& quartet, Construction construction, const std::string& where) {
        const std::uint64_t root = exact_sqrt(quartet.splitting.q);
        for (const CyclicCode* code : {&quartet.d0, &quartet.d1, &quartet.c0, &quartet.c1}) {
            CyclicCode formula = make_cyclic_code(code->n(), code->field(), dual_defining_set(code->defining_set()));
            record("d_dual_defining_sets", same_row_space(null_space(code->generator_matrix()), formula.generator_matrix()),
                   where + " euclidean");
            if (construction == Construction::kHermitian) {
                CyclicCode herm = make_cyclic_code(code->n(), code->field(),
                                                   hermitian_dual_defining_set(code->defining_set()));
                record("d_dual_defining_sets",
                       same_row_space(null_space(conjugate(code->generator_matrix(), root)), herm.generator_matrix()),
                       where + " hermitian");
            }
        }
    }

    void check_equivalence(const DuadicQuartet& quartet, const std::string& where) {
        const std::uint32_t n = quartet.splitting.n;
        for (const CyclicCode* code : {&quartet.d0, &quartet.c0}) {
            if (!fits(*code)) {
                skip("e_mu_images_same_weights");
                continue;
            }
            const WeightDistribution base = weight_distribution(*code, options_.distance);
            std::set<ResidueSet> images;
            for (std::uint32_t a = 2; a < n; ++a) {
                if (std::gcd(a, n) != 1) {
                    continue;
                }
                CyclicCode image = code_under_mu(*code, a);
                if (!images.insert(image.defining_set().members()).second) {
                    continue;
                }
                record("e_mu_images_same_weights", weight_distribution(image, options_.distance) == base,
                       where + " a=" + std::to_string(a));
            }
        }
    }

    static bool same_values(const StabilizerParams& x, const StabilizerParams& y) {
        return x.k == y.k && x.d.lo == y.d.lo && x.d.hi == y.d.hi && x.purity.lo == y.purity.lo &&
               x.purity.hi == y.purity.hi && x.degenerate == y.degenerate;
    }

    // Returns the parameters when the distances were in budget.
    std::optional<StabilizerParams> check_instance(const Splitting& s, Construction construction) {
        const std::string where = to_string(construction) + " n=" + std::to_string(s.n) + " splitting " + s.id();
        std::optional<DuadicQuartet> quartet;
        try {
            quartet = build_quartet(s, make_field_of_order(s.q));
        } catch (const FieldTooLargeError&) {
            for (const char* name : {"b_odd_like_weights_equal", "c_square_root_bound", "swap_symmetry"}) {
                skip(name);
            }
            return std::nullopt;
        }
        if (s.n <= kDualCheckMaxN) {
            check_duals(*quartet, construction, where);
        }
        if (s.n <= kEquivalenceMaxN) {
            check_equivalence(*quartet, where);
        }
        if (construction == Construction::kHermitian) {
            record("hermitian_dual_is_odd_like", check_hermitian_dual(*quartet, options_.matrix_check_max_n).ok(),
                   where);
        }
        if (!fits(quartet->d0) || !fits(quartet->d1)) {
            for (const char* name : {"b_odd_like_weights_equal", "c_square_root_bound", "swap_symmetry"}) {
                skip(name);
            }
            return std::nullopt;
        }
        auto build = [&](const DuadicQuartet& qt) {
            return construction == Construction::kCss ? css_from_quartet(qt, options_)
                                                      : hermitian_from_quartet(qt, options_);
        };
        StabilizerParams params;
        try {
            params = build(*quartet);
        } catch (const std::logic_error& e) {
            record("internal_consistency", false, where + ": " + e.what());
            return std::nullopt;
        }
        record("b_odd_like_weights_equal", params.bound_checks.equal_odd_like, where);
        record("c_square_root_bound", params.bound_checks.square_bound, where);
        record("c_minus_one_bound", params.bound_checks.mu_minus_one_bound, where);
        if (params.d_direct) {
            if (params.d_direct->is_exact() && params.d.is_exact()) {
                record("difference_set_path_agrees", params.d_direct->lo == params.d.lo, where);
            } else {
                skip("difference_set_path_agrees");
            }
        }
        record("swap_symmetry", same_values(params, build(swapped(*quartet))), where);
        return params;
    }

    void check_degenerate_family(std::uint32_t n, Construction construction,
                                 const std::vector<StabilizerParams>& candidates) {
        DegeneracyCertificate cert = degeneracy_certificate(n, q_, construction);
        if (!cert.hypotheses_met && !cert.example_clause) {
            return;
        }
        bool any_decided = false;
        bool confirmed = false;
        for (const auto& p : candidates) {
            StabilizerParams v = degeneracy_verdict(p, cert);
            if (v.degenerate == Degeneracy::kUndecided) {
                continue;
            }
            any_decided = true;
            confirmed = confirmed ||
                        (v.degenerate == Degeneracy::kYes && v.reconciliation == Reconciliation::kAgreement);
        }
        if (!any_decided) {
            skip("degenerate_family");
            return;
        }
        record("degenerate_family", confirmed, to_string(construction) + " n=" + std::to_string(n));
    }

    std::uint64_t q_;
    StabilizerOptions options_;
    VerifySummary& summary_;
    std::ostream* progress_;
};

}  // namespace

VerifySummary run_verify(std::uint64_t q, std::uint32_t max_n, const StabilizerOptions& options,
                         std::ostream* progress) {
    require_admissible(3, q);
    if (max_n < 3 || max_n > kSurveyMaxN) {
        throw UsageError("--max-n must lie in [3, " + std::to_string(kSurveyMaxN) + "]");
    }
    VerifySummary summary{q, max_n, options.distance.budget, {}};
    Verifier verifier(q, options, summary, progress);
    for (std::uint32_t n = 3; n <= max_n; n += 2) {
        if (std::gcd<std::uint64_t>(n, q) == 1) {
            verifier.run_length(n);
        }
    }
    return summary;
}

std::string render_verify(const VerifySummary& summary, const std::string& format) {
    if (format == "json") {
        json assertions = json::object();
        for (const auto& [name, t] : summary.tallies) {
            assertions[name] = {{"pass", t.pass}, {"fail", t.fail}, {"skipped", t.skipped}, {"failures", t.failures}};
        }
        json j{{"schema_version", kSchemaVersion}, {"q", summary.q},           {"max_n", summary.max_n},
               {"budget", summary.budget},         {"assertions", assertions}, {"ok", summary.ok()}};
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    char line[128];
    std::snprintf(line, sizeof line, "%-30s %8s %8s %8s\n", "assertion", "pass", "fail", "skipped");
    out << line;
    for (const auto& [name, t] : summary.tallies) {
        std::snprintf(line, sizeof line, "%-30s %8llu %8llu %8llu\n", name.c_str(),
                      static_cast<unsigned long long>(t.pass), static_cast<unsigned long long>(t.fail),
                      static_cast<unsigned long long>(t.skipped));
        out << line;
        for (const auto& f : t.failures) {
            out << "  violation: " << f << "\n";
        }
    }
    out << "result: " << (summary.ok() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

}  // namespace qduadic::cli
