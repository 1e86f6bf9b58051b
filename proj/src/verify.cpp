#include "entcc/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "entcc/cprotocols.hpp"
#include "entcc/functions.hpp"
#include "entcc/qcore.hpp"
#include "entcc/qprotocols.hpp"

namespace entcc {

namespace {

constexpr double kTol = 1e-12;

std::string pass_word(bool ok) { return ok ? "pass" : "fail"; }

std::string int_string(long long v) { return std::to_string(v); }

double exact_chsh() {
    const double c = std::cos(std::numbers::pi / 8.0);
    return c * c;
}

// --- individual claims -------------------------------------------------

Report claim_lemma1() {
    Report report;
    static constexpr int kPatterns[4][3] = {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    for (const auto& p : kPatterns) {
        const double prob = ghz_parity_probability(p[0], p[1], p[2]);
        const std::string name = std::string("parity-") + std::to_string(p[0]) +
                                 std::to_string(p[1]) + std::to_string(p[2]);
        report.add(name, "probability=" + format_probability(prob), std::abs(prob - 1.0) <= kTol);
    }
    return report;
}

Report claim_ghz_protocol(std::uint64_t seed) {
    Report report;
    long correct = 0, total = 0;
    bool transcripts_ok = true;
    bool outputs_agree = true;
    for (const TripleInput& t : promise_triples()) {
        const int expected = f_value(t);
        for (int k = 0; k < 100; ++k) {
            RandomStream rng(seed + static_cast<std::uint64_t>(k));
            const RunResult run = run_ghz(t, rng);
            ++total;
            if (run.outputs[0] == expected) ++correct;
            if (run.transcript.size() != 3) transcripts_ok = false;
            if (run.outputs[0] != run.outputs[1] || run.outputs[1] != run.outputs[2]) {
                outputs_agree = false;
            }
        }
    }
    report.add("errorless", "correct=" + int_string(correct) + "/" + int_string(total),
               correct == total);
    report.add("transcript-length", "bits=3", transcripts_ok);
    report.add("common-output", "all-parties-equal=" + pass_word(outputs_agree), outputs_agree);
    return report;
}

Report claim_chsh_exact(std::uint64_t seed) {
    Report report;
    const double expected = exact_chsh();
    double low = 1.0, high = 0.0;
    bool all_exact = true;
    for (const PairInput& p : all_pairs()) {
        const double prob = chsh_success_probability(p);
        low = std::min(low, prob);
        high = std::max(high, prob);
        if (std::abs(prob - expected) > kTol) all_exact = false;
    }
    report.add("all-inputs",
               "success=" + format_probability(low) + " expected=" + format_probability(expected),
               all_exact);
    report.add("uniform", "spread=" + format_probability(high - low), high - low <= kTol);

    const long shots = 100000;
    const double rate = estimate_chsh_success({0, 0}, shots, seed);
    const double sigma = std::sqrt(expected * (1.0 - expected) / static_cast<double>(shots));
    const double delta = std::abs(rate - expected);
    report.add("monte-carlo",
               "shots=" + int_string(shots) + " rate=" + format_probability(rate) +
                   " delta=" + format_probability(delta) +
                   " limit=" + format_probability(3.0 * sigma),
               delta <= 3.0 * sigma);
    return report;
}

TargetFn f_target() {
    return [](const PartyValues& v) { return f_value({v[0], v[1], v[2]}); };
}

Report claim_lower_bound_f() {
    Report report;
    const InputSet inputs = promise_triple_set();

    const FeasibilityResult depth3 = feasible(f_target(), inputs, 3);
    report.add("depth-3",
               "feasible=no explored=" + int_string(static_cast<long long>(depth3.explored)),
               !depth3.feasible);

    const FeasibilityResult depth4 = feasible(f_target(), inputs, 4);
    report.add("depth-4",
               "feasible=yes explored=" + int_string(static_cast<long long>(depth4.explored)),
               depth4.feasible);

    if (depth4.feasible) {
        int verified = 0;
        for (const TripleInput& t : promise_triples()) {
            const EvalResult run = evaluate(depth4.witness, t);
            if (run.output == f_value(t) && run.transcript.size() <= 4) ++verified;
        }
        report.add("witness-verified", "inputs=" + int_string(verified) + "/32", verified == 32);
        report.add("witness-coverage", "all-paths-hit-A-B-C=yes", covers_all_parties(depth4.witness));
        report.artifacts["witness-f-depth4"] = serialize_tree(depth4.witness);
    }
    return report;
}

Report claim_two_bit_bound_g() {
    Report report;
    const SuccessReport success = max_success_two_bit();
    report.add("maximum", "best=" + rational_string(success.best) + " argmax=" + success.best_tree,
               success.best == Rational(3, 4));

    static constexpr int kSizes[3] = {1, 2, 3};
    static const Rational kBounds[3] = {Rational(1), Rational(3, 4), Rational(2, 3)};
    for (int i = 0; i < 3; ++i) {
        const Rational bound = decoder_success_bound(kSizes[i]);
        report.add("decoder-bound-" + std::to_string(kSizes[i]),
                   "value=" + rational_string(bound) + " expected=" + rational_string(kBounds[i]),
                   bound == kBounds[i]);
    }

    // Shape maxima with the root labelled Alice.
    const auto shape_max = [&](Party b0, Party b1, int s0 = -1, int s1 = -1) {
        Rational best(0);
        for (const auto& [shape, value] : success.table) {
            if (shape.root != Party::Alice || shape.branch0 != b0 || shape.branch1 != b1) continue;
            if (s0 >= 0 && (shape.size0 != s0 || shape.size1 != s1)) continue;
            best = std::max(best, value);
        }
        return best;
    };

    const Rational aa = shape_max(Party::Alice, Party::Alice);
    report.add("shape-AA", "best=" + rational_string(aa) + " cap=1/2", aa <= Rational(1, 2));
    const Rational bb = shape_max(Party::Bob, Party::Bob);
    report.add("shape-BB", "best=" + rational_string(bb) + " expected=3/4", bb == Rational(3, 4));
    for (const auto& [s0, s1] : std::initializer_list<std::pair<int, int>>{{1, 3}, {2, 2}, {3, 1}}) {
        const Rational ab = shape_max(Party::Alice, Party::Bob, s0, s1);
        report.add("shape-AB-" + std::to_string(s0) + "-" + std::to_string(s1),
                   "best=" + rational_string(ab) + " expected=5/8", ab == Rational(5, 8));
    }
    return report;
}

Report claim_table1() {
    Report report;
    // Rows are y, columns are x.
    static constexpr int kTable[4][4] = {
        {0, 0, 1, 1},
        {0, 1, 1, 0},
        {1, 1, 0, 0},
        {1, 0, 0, 1},
    };
    int matched = 0;
    for (int y = 0; y < 4; ++y) {
        for (int x = 0; x < 4; ++x) {
            if (g_value({x, y}) == kTable[y][x]) ++matched;
        }
    }
    report.add("entries", "matched=" + int_string(matched) + "/16", matched == 16);
    return report;
}

Report claim_gip_reduction() {
    Report report;
    for (int n = 1; n <= 8; ++n) {
        long checked = 0;
        bool ok = true;
        for (const GipInstance& inst : all_gip_instances(n)) {
            const TripleInput reduced = zero_count_triple(inst);
            if (!even_sum_promise(reduced) ||
                gip_value(inst) != (f_value(reduced) ^ (n % 2))) {
                ok = false;
            }
            ++checked;
        }
        report.add("n-" + std::to_string(n),
                   "instances=" + int_string(checked) + " identity=" + pass_word(ok),
                   ok && checked == (1L << (2 * n)));
    }
    return report;
}

Report claim_no_signaling() {
    Report report;
    constexpr int kGridPoints = 32;

    struct Scenario {
        const char* name;
        StateVector state;
        std::vector<int> keep;
    };
    const Scenario scenarios[2] = {{"epr", epr_state(), {1}}, {"ghz", ghz_state(), {1, 2}}};

    for (const Scenario& scenario : scenarios) {
        const DensityMatrix before = reduced_density_matrix(scenario.state, scenario.keep);
        double worst = 0.0;
        for (int k = 0; k < kGridPoints; ++k) {
            const double theta =
                2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(kGridPoints);
            for (const SingleQubitGate& gate : {hadamard(), rotation(theta)}) {
                const StateVector rotated = apply_gate(scenario.state, gate, 0);
                const DensityMatrix after = reduced_density_matrix(rotated, scenario.keep);
                for (std::size_t i = 0; i < before.entries.size(); ++i) {
                    worst = std::max(worst, std::abs(after.entries[i] - before.entries[i]));
                }
            }
        }
        report.add(std::string(scenario.name) + "-invariant",
                   "grid=" + std::to_string(kGridPoints) + " max-delta=" + format_probability(worst),
                   worst <= kTol);
    }
    return report;
}

Report claim_upper_bounds() {
    Report report;
    int f_correct = 0;
    bool f_length = true;
    for (const TripleInput& t : promise_triples()) {
        const EvalResult run = four_bit_protocol(t);
        if (run.output == f_value(t)) ++f_correct;
        if (run.transcript.size() != 4) f_length = false;
    }
    report.add("four-bit-f", "correct=" + int_string(f_correct) + "/32 bits=4",
               f_correct == 32 && f_length);

    int g_correct = 0;
    bool g_length = true;
    for (const PairInput& p : all_pairs()) {
        const EvalResult run = three_bit_protocol(p);
        if (run.output == g_value(p)) ++g_correct;
        if (run.transcript.size() != 3) g_length = false;
    }
    report.add("three-bit-g", "correct=" + int_string(g_correct) + "/16 bits=3",
               g_correct == 16 && g_length);
    return report;
}

Report run_single_claim(std::string_view claim, std::uint64_t seed) {
    if (claim == "lemma1") return claim_lemma1();
    if (claim == "ghz-protocol") return claim_ghz_protocol(seed);
    if (claim == "chsh-exact") return claim_chsh_exact(seed);
    if (claim == "lower-bound-f") return claim_lower_bound_f();
    if (claim == "two-bit-bound-g") return claim_two_bit_bound_g();
    if (claim == "table1") return claim_table1();
    if (claim == "gip-reduction") return claim_gip_reduction();
    if (claim == "no-signaling") return claim_no_signaling();
    if (claim == "upper-bounds") return claim_upper_bounds();
    throw std::domain_error("unknown claim '" + std::string(claim) + "'");
}

Report run_all_claims(std::uint64_t seed) {
    Report all;
    bool ghz_ok = false, lower_ok = false, chsh_ok = false, ceiling_ok = false;
    for (const std::string& claim : claim_names()) {
        const Report single = run_single_claim(claim, seed);
        const bool ok = single.pass();
        if (claim == "ghz-protocol") ghz_ok = ok;
        if (claim == "lower-bound-f") lower_ok = ok;
        if (claim == "chsh-exact") chsh_ok = ok;
        if (claim == "two-bit-bound-g") ceiling_ok = ok;
        for (const Check& check : single.checks) {
            all.checks.push_back({claim + "/" + check.name, check.detail, check.pass});
        }
        for (const auto& [name, value] : single.artifacts) all.artifacts[name] = value;
    }
    all.add("headline-f", "quantum-bits=3 classical-bits=4", ghz_ok && lower_ok);
    all.add("headline-g",
            "quantum-success=" + format_probability(exact_chsh()) + " classical-ceiling=3/4",
            chsh_ok && ceiling_ok && exact_chsh() > 0.75);
    return all;
}

}  // namespace

// --- report plumbing ----------------------------------------------------

bool Report::pass() const {
    for (const Check& check : checks) {
        if (!check.pass) return false;
    }
    return true;
}

void Report::add(std::string name, std::string detail, bool ok) {
    checks.push_back({std::move(name), std::move(detail), ok});
}

std::string format_probability(double p) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.12f", p);
    return buffer;
}

void write_report(const Report& report, ReportFormat format, std::ostream& out) {
    const bool kv = format == ReportFormat::Kv;
    const char* sep = kv ? "=" : ": ";
    out << "command" << sep << report.command << '\n';
    for (const auto& [key, value] : report.params) out << key << sep << value << '\n';
    for (const Check& check : report.checks) {
        if (kv) {
            out << "check=" << check.name << ' ' << check.detail << " result="
                << pass_word(check.pass) << '\n';
        } else {
            out << "check: " << check.name << ' ' << check.detail << " -> "
                << pass_word(check.pass) << '\n';
        }
    }
    for (const auto& [name, value] : report.artifacts) {
        if (kv) {
            out << "artifact=" << name << " value=" << value << '\n';
        } else {
            out << "artifact: " << name << ' ' << value << '\n';
        }
    }
    out << "verdict" << sep << pass_word(report.pass()) << '\n';
    out << "duration_ms" << sep << std::llround(report.duration_ms) << '\n';
}

std::vector<std::string> claim_names() {
    return {"lemma1",          "ghz-protocol", "chsh-exact",    "lower-bound-f",
            "two-bit-bound-g", "table1",       "gip-reduction", "no-signaling",
            "upper-bounds"};
}

Report verify_claim(std::string_view claim, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    Report report = claim == "all" ? run_all_claims(seed) : run_single_claim(claim, seed);
    report.command = "verify";
    report.params.insert(report.params.begin(),
                         {{"claim", std::string(claim)}, {"seed", std::to_string(seed)}});
    report.duration_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

Report simulate_report(std::string_view protocol, std::span<const int> input, long shots,
                       std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    if (protocol != "ghz" && protocol != "chsh") {
        throw std::domain_error("unknown protocol '" + std::string(protocol) + "'");
    }
    const bool ghz = protocol == "ghz";
    if (input.size() != (ghz ? 3u : 2u)) {
        throw std::domain_error(ghz ? "ghz input is x y z" : "chsh input is x y");
    }
    if (shots < 1) throw std::domain_error("shots must be >= 1");

    int target = 0;
    double exact = 0.0;
    if (ghz) {
        const TripleInput t{input[0], input[1], input[2]};
        if (!even_sum_promise(t)) throw std::domain_error("input violates the even-sum promise");
        target = f_value(t);
        exact = 1.0;  // the protocol is errorless
    } else {
        const PairInput p{input[0], input[1]};
        target = g_value(p);
        exact = chsh_success_probability(p);
    }

    Report report;
    report.command = "simulate";
    std::string input_text;
    for (std::size_t i = 0; i < input.size(); ++i) {
        if (i) input_text += ' ';
        input_text += std::to_string(input[i]);
    }
    report.params = {{"protocol", std::string(protocol)},
                     {"input", input_text},
                     {"shots", std::to_string(shots)},
                     {"seed", std::to_string(seed)},
                     {"target", std::to_string(target)},
                     {"exact", format_probability(exact)}};

    constexpr long kMaxPrintedRuns = 20;
    RandomStream rng(seed);
    long correct = 0;
    for (long i = 0; i < shots; ++i) {
        RunResult run;
        if (ghz) {
            run = run_ghz({input[0], input[1], input[2]}, rng);
        } else {
            run = run_chsh({input[0], input[1]}, rng);
        }
        const bool ok = run.outputs[0] == target;
        if (ok) ++correct;
        if (shots <= kMaxPrintedRuns) {
            std::string measured;
            for (int bit : run.measured) measured += static_cast<char>('0' + bit);
            report.add("run-" + std::to_string(i + 1),
                       "transcript=" + transcript_string(run.transcript) + " measured=" + measured +
                           " output=" + std::to_string(run.outputs[0]) +
                           " target=" + std::to_string(target),
                       ok);
        }
    }

    const double rate = static_cast<double>(correct) / static_cast<double>(shots);
    report.add("correct-runs", "count=" + int_string(correct) + "/" + int_string(shots),
               ghz ? correct == shots : true);
    const double delta = std::abs(rate - exact);
    if (ghz) {
        report.add("observed", "rate=" + format_probability(rate) + " exact=" +
                                   format_probability(exact) + " delta=" + format_probability(delta),
                   rate == 1.0);
    } else {
        const double limit =
            3.0 * std::sqrt(exact * (1.0 - exact) / static_cast<double>(shots));
        report.add("observed",
                   "rate=" + format_probability(rate) + " exact=" + format_probability(exact) +
                       " delta=" + format_probability(delta) + " limit=" + format_probability(limit),
                   delta <= limit);
    }
    report.duration_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

Report enumerate_report(std::string_view function_name, int depth) {
    const auto start = std::chrono::steady_clock::now();
    Report report;
    report.command = "enumerate";
    report.params = {{"function", std::string(function_name)}, {"depth", std::to_string(depth)}};

    if (function_name == "f") {
        if (depth < 0 || depth > 5) throw std::domain_error("depth for f must be in 0..5");
        const FeasibilityResult result = feasible(f_target(), promise_triple_set(), depth);
        report.add("feasible",
                   std::string("value=") + (result.feasible ? "yes" : "no") +
                       " explored=" + int_string(static_cast<long long>(result.explored)),
                   true);
        if (result.feasible) {
            int verified = 0;
            for (const TripleInput& t : promise_triples()) {
                if (evaluate(result.witness, t).output == f_value(t)) ++verified;
            }
            report.add("witness-verified", "inputs=" + int_string(verified) + "/32",
                       verified == 32);
            report.artifacts["witness-f-depth" + std::to_string(depth)] =
                serialize_tree(result.witness);
        }
    } else if (function_name == "g") {
        if (depth < 0 || depth > 3) throw std::domain_error("depth for g must be in 0..3");
        const DepthSuccess result = best_success_at_depth(depth);
        report.add("best-success",
                   "value=" + rational_string(result.best) +
                       " explored=" + int_string(static_cast<long long>(result.explored)),
                   true);
    } else {
        throw std::domain_error("unknown function '" + std::string(function_name) + "'");
    }

    report.duration_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

}  // namespace entcc
