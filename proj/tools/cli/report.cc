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

#include "cli/report.h"

#include <stdexcept>

namespace qduadic {

using nlohmann::json;

namespace {

template <typename T>
json optional_to_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from_json(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) {
        return std::nullopt;
    }
    return j.at(key).get<T>();
}

CheckOutcome check_from_string(const std::string& s) {
    for (auto c : {CheckOutcome::kPass, CheckOutcome::kFail, CheckOutcome::kVacuous, CheckOutcome::kNotApplicable}) {
        if (to_string(c) == s) {
            return c;
        }
    }
    throw std::invalid_argument("unknown check outcome '" + s + "'");
}

Degeneracy degeneracy_from_string(const std::string& s) {
    for (auto d : {Degeneracy::kYes, Degeneracy::kNo, Degeneracy::kUndecided}) {
        if (to_string(d) == s) {
            return d;
        }
    }
    throw std::invalid_argument("unknown degeneracy verdict '" + s + "'");
}

Reconciliation reconciliation_from_string(const std::string& s) {
    for (auto r : {Reconciliation::kAgreement, Reconciliation::kDiscrepancy, Reconciliation::kUndetermined,
                   Reconciliation::kNotApplicable}) {
        if (to_string(r) == s) {
            return r;
        }
    }
    throw std::invalid_argument("unknown reconciliation '" + s + "'");
}

}  // namespace

void to_json(json& j, const DistanceResult& r) {
    j = json{{"kind", to_string(r.kind)}, {"lo", r.lo},     {"hi", r.hi},
             {"method", to_string(r.method)}, {"work", r.work}, {"witness", r.witness}};
}

void from_json(const json& j, DistanceResult& r) {
    r.kind = distance_kind_from_string(j.at("kind").get<std::string>());
    r.lo = j.at("lo").get<std::uint64_t>();
    r.hi = j.at("hi").get<std::uint64_t>();
    r.method = distance_method_from_string(j.at("method").get<std::string>());
    r.work = j.at("work").get<std::uint64_t>();
    r.witness = j.at("witness").get<std::vector<Elem>>();
}

void to_json(json& j, const SquareRootReport& r) {
    j = json{{"equal_odd_like", to_string(r.equal_odd_like)},
             {"square_bound", to_string(r.square_bound)},
             {"mu_minus_one_bound", to_string(r.mu_minus_one_bound)},
             {"mu_minus_one_splits", r.mu_minus_one_splits}};
}

void from_json(const json& j, SquareRootReport& r) {
    r.equal_odd_like = check_from_string(j.at("equal_odd_like").get<std::string>());
    r.square_bound = check_from_string(j.at("square_bound").get<std::string>());
    r.mu_minus_one_bound = check_from_string(j.at("mu_minus_one_bound").get<std::string>());
    r.mu_minus_one_splits = j.at("mu_minus_one_splits").get<bool>();
}

void to_json(json& j, const PrimeCertificate& c) {
    j = json{{"p", c.p},
             {"m", c.m},
             {"t", c.t},
             {"z", c.z},
             {"p_pow_z", c.p_pow_z},
             {"q_square_mod_p", c.q_square_mod_p},
             {"m_exceeds_2z", c.m_exceeds_2z},
             {"p_is_minus_one_mod_4", c.p_is_minus_one_mod_4}};
}

void from_json(const json& j, PrimeCertificate& c) {
    c.p = j.at("p").get<std::uint64_t>();
    c.m = j.at("m").get<unsigned>();
    c.t = j.at("t").get<std::uint64_t>();
    c.z = j.at("z").get<unsigned>();
    c.p_pow_z = j.at("p_pow_z").get<std::uint64_t>();
    c.q_square_mod_p = j.at("q_square_mod_p").get<bool>();
    c.m_exceeds_2z = j.at("m_exceeds_2z").get<bool>();
    c.p_is_minus_one_mod_4 = j.at("p_is_minus_one_mod_4").get<bool>();
}

void to_json(json& j, const DegeneracyCertificate& c) {
    j = json{{"n", c.n},
             {"q", c.q},
             {"construction", to_string(c.construction)},
             {"primes", c.primes},
             {"purity_bound", c.purity_bound},
             {"order_n_q", c.order_n_q},
             {"q_square_mod_every_prime", c.q_square_mod_every_prime},
             {"m_exceeds_2z_everywhere", c.m_exceeds_2z_everywhere},
             {"every_prime_minus_one_mod_4", c.every_prime_minus_one_mod_4},
             {"order_n_q_odd", c.order_n_q_odd},
             {"example_clause", c.example_clause},
             {"hypotheses_met", c.hypotheses_met},
             {"purity_bound_below_sqrt_n", c.purity_bound_below_sqrt_n}};
}

void from_json(const json& j, DegeneracyCertificate& c) {
    c.n = j.at("n").get<std::uint64_t>();
    c.q = j.at("q").get<std::uint64_t>();
    c.construction = construction_from_string(j.at("construction").get<std::string>());
    c.primes = j.at("primes").get<std::vector<PrimeCertificate>>();
    c.purity_bound = j.at("purity_bound").get<std::uint64_t>();
    c.order_n_q = j.at("order_n_q").get<std::uint64_t>();
    c.q_square_mod_every_prime = j.at("q_square_mod_every_prime").get<bool>();
    c.m_exceeds_2z_everywhere = j.at("m_exceeds_2z_everywhere").get<bool>();
    c.every_prime_minus_one_mod_4 = j.at("every_prime_minus_one_mod_4").get<bool>();
    c.order_n_q_odd = j.at("order_n_q_odd").get<bool>();
    c.example_clause = j.at("example_clause").get<bool>();
    c.hypotheses_met = j.at("hypotheses_met").get<bool>();
    c.purity_bound_below_sqrt_n = j.at("purity_bound_below_sqrt_n").get<bool>();
}

void to_json(json& j, const StabilizerParams& p) {
    j = json{{"n", p.n},
             {"k", p.k},
             {"q", p.q},
             {"construction", to_string(p.construction)},
             {"d", p.d},
             {"d_partner", p.d_partner},
             {"d_direct", optional_to_json(p.d_direct)},
             {"purity", p.purity},
             {"degenerate", to_string(p.degenerate)},
             {"bound_checks", p.bound_checks},
             {"hermitian_dual_by_defining_sets", optional_to_json(p.hermitian_dual_by_defining_sets)},
             {"hermitian_dual_by_matrices", optional_to_json(p.hermitian_dual_by_matrices)},
             {"reconciliation", to_string(p.reconciliation)},
             {"notes", p.notes}};
}

void from_json(const json& j, StabilizerParams& p) {
    p.n = j.at("n").get<std::uint32_t>();
    p.k = j.at("k").get<std::size_t>();
    p.q = j.at("q").get<std::uint64_t>();
    p.construction = construction_from_string(j.at("construction").get<std::string>());
    p.d = j.at("d").get<DistanceResult>();
    p.d_partner = j.at("d_partner").get<DistanceResult>();
    p.d_direct = optional_from_json<DistanceResult>(j, "d_direct");
    p.purity = j.at("purity").get<DistanceResult>();
    p.degenerate = degeneracy_from_string(j.at("degenerate").get<std::string>());
    p.bound_checks = j.at("bound_checks").get<SquareRootReport>();
    p.hermitian_dual_by_defining_sets = optional_from_json<bool>(j, "hermitian_dual_by_defining_sets");
    p.hermitian_dual_by_matrices = optional_from_json<bool>(j, "hermitian_dual_by_matrices");
    p.reconciliation = reconciliation_from_string(j.at("reconciliation").get<std::string>());
    p.notes = j.at("notes").get<std::vector<std::string>>();
}

namespace cli {

void to_json(json& j, const CodeSummary& c) {
    j = json{{"dimension", c.dimension},
             {"defining_set", c.defining_set},
             {"coset_representatives", c.coset_representatives},
             {"generator_polynomial", c.generator_polynomial}};
}

void from_json(const json& j, CodeSummary& c) {
    c.dimension = j.at("dimension").get<std::size_t>();
    c.defining_set = j.at("defining_set").get<std::vector<std::uint32_t>>();
    c.coset_representatives = j.at("coset_representatives").get<std::vector<std::uint32_t>>();
    c.generator_polynomial = j.at("generator_polynomial").get<std::vector<std::uint64_t>>();
}

void to_json(json& j, const SplittingSummary& s) {
    j = json{{"id", s.id},
             {"a", s.a},
             {"s0", s.s0},
             {"s1", s.s1},
             {"s0_representatives", s.s0_representatives},
             {"s1_representatives", s.s1_representatives},
             {"mu_minus_one", s.mu_minus_one},
             {"mu_minus_q", optional_to_json(s.mu_minus_q)}};
}

void from_json(const json& j, SplittingSummary& s) {
    s.id = j.at("id").get<std::string>();
    s.a = j.at("a").get<std::uint32_t>();
    s.s0 = j.at("s0").get<std::vector<std::uint32_t>>();
    s.s1 = j.at("s1").get<std::vector<std::uint32_t>>();
    s.s0_representatives = j.at("s0_representatives").get<std::vector<std::uint32_t>>();
    s.s1_representatives = j.at("s1_representatives").get<std::vector<std::uint32_t>>();
    s.mu_minus_one = j.at("mu_minus_one").get<bool>();
    s.mu_minus_q = optional_from_json<bool>(j, "mu_minus_q");
}

void to_json(json& j, const QuartetSummary& q) {
    j = json{{"d0", q.d0}, {"d1", q.d1}, {"c0", q.c0}, {"c1", q.c1}};
}

void from_json(const json& j, QuartetSummary& q) {
    q.d0 = j.at("d0").get<CodeSummary>();
    q.d1 = j.at("d1").get<CodeSummary>();
    q.c0 = j.at("c0").get<CodeSummary>();
    q.c1 = j.at("c1").get<CodeSummary>();
}

void to_json(json& j, const Report& r) {
    j = json{{"schema_version", r.schema_version},
             {"input",
              {{"n", r.n},
               {"q", r.q},
               {"construction", to_string(r.construction)},
               {"splitting_id", r.splitting.id},
               {"budget", r.budget},
               {"support_budget", r.support_budget}}},
             {"code_field", r.code_field},
             {"parameters", r.parameters},
             {"splitting", r.splitting},
             {"quartet", optional_to_json(r.quartet)},
             {"params", r.params},
             {"certificate", r.certificate},
             {"timing", {{"seconds", r.seconds}}}};
}

void from_json(const json& j, Report& r) {
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != kSchemaVersion) {
        throw std::invalid_argument("unsupported schema_version " + std::to_string(r.schema_version));
    }
    const json& input = j.at("input");
    r.n = input.at("n").get<std::uint32_t>();
    r.q = input.at("q").get<std::uint64_t>();
    r.construction = construction_from_string(input.at("construction").get<std::string>());
    r.budget = input.at("budget").get<std::uint64_t>();
    r.support_budget = input.at("support_budget").get<std::uint64_t>();
    r.code_field = j.at("code_field").get<std::string>();
    r.parameters = j.at("parameters").get<std::string>();
    r.splitting = j.at("splitting").get<SplittingSummary>();
    r.quartet = optional_from_json<QuartetSummary>(j, "quartet");
    r.params = j.at("params").get<StabilizerParams>();
    r.certificate = j.at("certificate").get<DegeneracyCertificate>();
    r.seconds = j.at("timing").at("seconds").get<double>();
}

CodeSummary summarize(const CyclicCode& code) {
    CodeSummary s;
    s.dimension = code.k();
    s.defining_set = code.defining_set().members();
    CosetStructure cs(code.n(), code.defining_set().q());
    s.coset_representatives = cs.representatives(s.defining_set);
    const auto& coeffs = code.generator_polynomial().coefficients();
    s.generator_polynomial.assign(coeffs.begin(), coeffs.end());
    return s;
}

SplittingSummary summarize(const Splitting& s, Construction construction) {
    SplittingSummary out;
    out.id = s.id();
    out.a = s.a;
    out.s0 = s.s0;
    out.s1 = s.s1;
    CosetStructure cs(s.n, s.q);
    out.s0_representatives = cs.representatives(s.s0);
    out.s1_representatives = cs.representatives(s.s1);
    out.mu_minus_one = mu_minus_one_gives(s);
    if (construction == Construction::kHermitian) {
        out.mu_minus_q = gives_splitting(s, -static_cast<std::int64_t>(exact_sqrt(s.q) % s.n));
    }
    return out;
}

QuartetSummary summarize(const DuadicQuartet& quartet) {
    return {summarize(quartet.d0), summarize(quartet.d1), summarize(quartet.c0), summarize(quartet.c1)};
}

std::string parameter_string(const StabilizerParams& p) {
    const std::string d = p.d.is_exact() ? std::to_string(p.d.lo) : std::to_string(p.d.lo) + ".." + std::to_string(p.d.hi);
    return "[[" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + d + "]]_" + std::to_string(p.q);
}

std::string serialize(const Report& r) { return json(r).dump(2) + "\n"; }

Report parse_report(const std::string& text) { return json::parse(text).get<Report>(); }

std::string serialize_without_timing(const Report& r) {
    json j = r;
    j.erase("timing");
    return j.dump(2) + "\n";
}

}  // namespace cli
}  // namespace qduadic
