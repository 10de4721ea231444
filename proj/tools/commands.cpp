#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "perfectrep/decompose.hpp"
#include "perfectrep/errors.hpp"
#include "perfectrep/mersenne.hpp"
#include "perfectrep/natural.hpp"

namespace perfectrep::cli {
namespace {

constexpr std::uint64_t kRoundTripExhaustiveLimit = std::uint64_t{1} << 20;
constexpr std::uint64_t kRoundTripGridPoints = std::uint64_t{1} << 16;
constexpr std::uint64_t kCountSampleBlocks = 128;
constexpr const char* kSkippedCapability = "skipped: capability";

Json envelope(std::string_view command, Json inputs) {
    Json env;
    env["command"] = command;
    env["inputs"] = std::move(inputs);
    env["status"] = "ok";
    env["result"] = nullptr;
    return env;
}

Outcome ok(Json env, Json result) {
    env["result"] = std::move(result);
    return {std::move(env), kExitOk};
}

Outcome fail(Json env, std::string_view code, std::string_view message, int exit_code) {
    env["status"] = "error";
    env["error"] = {{"code", code}, {"message", message}};
    return {std::move(env), exit_code};
}

// Runs `body`, turning library errors into error envelopes.
Outcome guarded(Json env, const std::function<Outcome(Json&)>& body) {
    try {
        return body(env);
    } catch (const Error& e) {
        const int code = e.code() == "invalid_number" ? kExitUsage : kExitDomain;
        return fail(std::move(env), e.code(), e.what(), code);
    }
}

Json decimal_list(const std::vector<Natural>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(to_decimal(v));
    return out;
}

Json subset_json(const DivisorSubset& subset, const PerfectNumber& pn) {
    return {{"divisors", decimal_list(subset_divisors(subset, pn))}, {"mask", subset.mask_hex()}};
}

std::optional<std::uint64_t> parse_u64_env(const char* name) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    Natural value;
    try {
        value = parse_decimal(raw);
    } catch (const Error&) {
        throw UsageError(std::string(name) + " must be a decimal natural, got '" + raw + "'");
    }
    auto narrow = to_u64(value);
    if (!narrow) throw UsageError(std::string(name) + " is too large");
    return narrow;
}

Json check_entry(std::string_view name, bool passed) {
    return {{"name", name}, {"status", passed ? "pass" : "fail"}};
}

Json skipped_entry(std::string_view name) { return {{"name", name}, {"status", kSkippedCapability}}; }

Json roundtrip_check(const PerfectNumber& pn) {
    const auto n = static_cast<Natural>(pn.n());
    const bool exhaustive = n <= kRoundTripExhaustiveLimit;
    std::uint64_t checked = 0;
    std::optional<Natural> failure;
    auto probe = [&](const Natural& m) {
        ++checked;
        if (!failure && subset_value(decompose(m, pn).subset, pn) != m) failure = m;
    };
    if (exhaustive) {
        for (Natural m = 1; m <= n; ++m) probe(m);
    } else {
        // Evenly spaced deterministic grid including 1 and n.
        const Natural span = n - 1;
        for (std::uint64_t i = 0; i < kRoundTripGridPoints; ++i) {
            probe(1 + span * i / (kRoundTripGridPoints - 1));
        }
    }
    Json entry = check_entry("decomposition_roundtrip", !failure);
    entry["mode"] = exhaustive ? "exhaustive" : "grid";
    entry["checked"] = checked;
    if (failure) entry["first_failure"] = to_decimal(*failure);
    return entry;
}

// Targets for the sampled count check: every block boundary j*M_p and its
// successor for evenly spaced j, plus 1 and n.
std::vector<Natural> count_sample(const PerfectNumber& pn) {
    std::vector<Natural> out{1, pn.n()};
    const Natural blocks = pow2(pn.p() - 1);
    for (std::uint64_t i = 0; i < kCountSampleBlocks; ++i) {
        const Natural j = 1 + (blocks - 1) * i / kCountSampleBlocks;
        const Natural m = j * pn.mersenne();
        if (m <= pn.n()) out.push_back(m);
        if (m + 1 <= pn.n()) out.push_back(m + 1);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

Config config_from_environment() {
    Config config;
    if (auto v = parse_u64_env("TOOL_COUNT_CEILING")) {
        if (*v > std::numeric_limits<unsigned>::max()) throw UsageError("TOOL_COUNT_CEILING is too large");
        config.count_ceiling = static_cast<unsigned>(*v);
    }
    if (auto v = parse_u64_env("TOOL_PAN_CEILING")) config.pan_ceiling = *v;
    return config;
}

Outcome cmd_perfect(unsigned max_p) {
    Json env = envelope("perfect", {{"max_p", max_p}});
    if (max_p < 2) return fail(std::move(env), "usage_error", "--max-p must be >= 2", kExitUsage);
    if (max_p > kMaxExponentArg) {
        return fail(std::move(env), "usage_error", "--max-p must be <= " + std::to_string(kMaxExponentArg),
                    kExitUsage);
    }
    Json list = Json::array();
    for (unsigned p : mersenne_exponents_up_to(max_p)) {
        const PerfectNumber pn = make_perfect(p);
        list.push_back({{"p", p}, {"mersenne", to_decimal(pn.mersenne())}, {"n", to_decimal(pn.n())}});
    }
    return ok(std::move(env), {{"exponents", std::move(list)}});
}

Outcome cmd_decompose(unsigned p, std::string_view m_text) {
    return guarded(envelope("decompose", {{"p", p}, {"m", m_text}}), [&](Json& env) {
        const PerfectNumber pn = make_perfect(p);
        const Natural m = parse_decimal(m_text);
        const Decomposition d = decompose(m, pn);
        Json result{{"p", p},
                    {"n", to_decimal(pn.n())},
                    {"k", to_decimal(d.k)},
                    {"r", to_decimal(d.r)},
                    {"divisors", decimal_list(subset_divisors(d.subset, pn))},
                    {"mask", d.subset.mask_hex()},
                    {"verified", subset_value(d.subset, pn) == m}};
        return ok(std::move(env), std::move(result));
    });
}

Outcome cmd_count(unsigned p, std::string_view m_text, bool enumerate, const Config& config) {
    Json inputs{{"p", p}, {"m", m_text}, {"enumerate", enumerate}};
    return guarded(envelope("count", std::move(inputs)), [&](Json& env) {
        const PerfectNumber pn = make_perfect(p);
        const Natural m = parse_decimal(m_text);
        const unsigned predicted = predict_count(m, pn);
        const RepReport report = count_representations(m, pn, enumerate, {.ceiling = config.count_ceiling});
        Json result{{"p", p},
                    {"n", to_decimal(pn.n())},
                    {"strategy", to_string(report.strategy)},
                    {"counted", report.count},
                    {"predicted", predicted},
                    {"agree", report.count == predicted}};
        if (report.subsets) {
            Json subsets = Json::array();
            for (const auto& s : *report.subsets) subsets.push_back(subset_json(s, pn));
            result["subsets"] = std::move(subsets);
        }
        return ok(std::move(env), std::move(result));
    });
}

Outcome cmd_check(std::string_view n_text, const Config& config) {
    return guarded(envelope("check", {{"n", n_text}}), [&](Json& env) {
        const Natural n = parse_decimal(n_text);
        if (n == 0) throw DomainError("n_out_of_domain", "n must be >= 1");
        const auto narrow = to_u64(n);
        if (!narrow || *narrow > config.pan_ceiling) {
            throw CapabilityError("pan_ceiling",
                                  "n = " + to_decimal(n) + " exceeds the ceiling " + std::to_string(config.pan_ceiling));
        }
        const PanReport report = check_panrepresentable(*narrow, {.ceiling = config.pan_ceiling});
        Json result{{"n", to_decimal(n)}, {"perfect", report.is_perfect}, {"panrepresentable", report.is_panrepresentable}};
        if (report.first_gap) result["first_gap"] = std::to_string(*report.first_gap);
        if (report.witness) {
            Json witness = Json::array();
            for (auto d : *report.witness) witness.push_back(std::to_string(d));
            result["witness"] = std::move(witness);
        }
        return ok(std::move(env), std::move(result));
    });
}

Outcome cmd_verify(unsigned p, const Config& config) {
    return guarded(envelope("verify", {{"p", p}}), [&](Json& env) {
        const PerfectNumber pn = make_perfect(p);
        Json checks = Json::array();
        bool all_passed = true;
        auto add = [&](Json entry) {
            if (entry["status"] == "fail") all_passed = false;
            checks.push_back(std::move(entry));
        };

        add(roundtrip_check(pn));

        const bool can_count = p <= std::min(config.count_ceiling, kHardCountCeiling);
        const CountOptions options{.ceiling = config.count_ceiling};
        if (!can_count) {
            add(skipped_entry("oracle_agreement"));
            add(skipped_entry("mass_conservation"));
            add(skipped_entry("histogram_agreement"));
        } else {
            const bool exhaustive = p <= kExhaustiveMaxP;
            std::vector<Natural> targets;
            if (exhaustive) {
                for (Natural m = 1; m <= pn.n(); ++m) targets.push_back(m);
            } else {
                targets = count_sample(pn);
            }
            Natural mass = 0;
            std::optional<Natural> mismatch;
            for (const auto& m : targets) {
                const auto counted = count_representations(m, pn, false, options).count;
                mass += counted;
                if (!mismatch && counted != predict_count(m, pn)) mismatch = m;
            }
            Json agreement = check_entry("oracle_agreement", !mismatch);
            agreement["mode"] = exhaustive ? "exhaustive" : "sampled";
            agreement["strategy"] = to_string(exhaustive ? CountStrategy::exhaustive : CountStrategy::meet_in_the_middle);
            agreement["checked"] = targets.size();
            if (mismatch) agreement["first_mismatch"] = to_decimal(*mismatch);
            add(std::move(agreement));

            if (p <= kHistogramMaxP) {
                const SubsetSumHistogram hist = subset_sum_histogram(pn);
                // Exhaustive runs take the mass from the per-target counts and
                // also require the histogram to agree; otherwise the histogram
                // is the only full pass.
                const Natural expected = total_subsets(pn);
                const Natural observed = exhaustive ? mass : Natural(hist.in_range);
                const bool conserved =
                    observed == expected && Natural(hist.in_range) == expected && hist.above_n == 0;
                Json conservation = check_entry("mass_conservation", conserved);
                conservation["total"] = to_decimal(observed);
                conservation["expected"] = to_decimal(expected);
                add(std::move(conservation));

                std::optional<Natural> hist_mismatch;
                const auto n = static_cast<std::uint64_t>(pn.n());
                for (std::uint64_t m = 1; m <= n && !hist_mismatch; ++m) {
                    if (hist.counts[m] != predict_count(Natural(m), pn)) hist_mismatch = Natural(m);
                }
                Json histogram = check_entry("histogram_agreement", !hist_mismatch);
                histogram["checked"] = n;
                if (hist_mismatch) histogram["first_mismatch"] = to_decimal(*hist_mismatch);
                add(std::move(histogram));
            } else {
                add(skipped_entry("mass_conservation"));
                add(skipped_entry("histogram_agreement"));
            }
        }

        add(check_entry("counting_identity", verify_counting_identity(pn)));

        Json result{{"p", p}, {"n", to_decimal(pn.n())}, {"checks", std::move(checks)}, {"all_passed", all_passed}};
        if (!all_passed) {
            env["result"] = std::move(result);
            return fail(std::move(env), "verification_failed", "one or more checks failed", kExitDomain);
        }
        return ok(std::move(env), std::move(result));
    });
}

std::string render_plain(const Json& env) {
    std::ostringstream out;
    const std::string command = env.value("command", "");
    if (env.value("status", "") != "ok") {
        out << command << ": error [" << env["error"].value("code", "") << "] " << env["error"].value("message", "")
            << '\n';
        return out.str();
    }
    const Json& r = env["result"];
    auto join = [](const Json& list, std::string_view sep) {
        std::string s;
        for (const auto& item : list) {
            if (!s.empty()) s += sep;
            s += item.get<std::string>();
        }
        return s;
    };
    if (command == "perfect") {
        for (const auto& e : r["exponents"]) {
            out << "p = " << e["p"].get<unsigned>() << "  n = " << e["n"].get<std::string>() << '\n';
        }
    } else if (command == "decompose") {
        out << env["inputs"]["m"].get<std::string>() << " = " << join(r["divisors"], " + ") << "  (k = "
            << r["k"].get<std::string>() << ", r = " << r["r"].get<std::string>() << ")\n";
    } else if (command == "count") {
        out << "counted " << r["counted"].get<std::uint64_t>() << ", predicted " << r["predicted"].get<unsigned>()
            << (r["agree"].get<bool>() ? "" : "  MISMATCH") << '\n';
        if (r.contains("subsets")) {
            for (const auto& s : r["subsets"]) out << "  " << join(s["divisors"], " + ") << '\n';
        }
    } else if (command == "check") {
        out << "n = " << r["n"].get<std::string>() << ": "
            << (r["panrepresentable"].get<bool>() ? "panrepresentable" : "not panrepresentable")
            << (r["perfect"].get<bool>() ? ", perfect" : ", not perfect");
        if (r.contains("first_gap")) out << ", first gap " << r["first_gap"].get<std::string>();
        out << '\n';
    } else if (command == "verify") {
        for (const auto& c : r["checks"]) {
            out << c["name"].get<std::string>() << ": " << c["status"].get<std::string>() << '\n';
        }
    }
    return out.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Even perfect numbers: construction, divisor decompositions, representation counts"};
    app.require_subcommand(1);
    bool plain = false;
    app.add_flag("--plain", plain, "Print a human summary instead of the JSON envelope");

    unsigned max_p = 0;
    unsigned p = 0;
    std::string m;
    std::string n;
    bool enumerate = false;

    auto* perfect = app.add_subcommand("perfect", "List even perfect numbers with p <= max-p");
    perfect->add_option("--max-p", max_p, "Largest exponent")->required();

    auto* decompose_cmd = app.add_subcommand("decompose", "Canonical decomposition of m");
    decompose_cmd->add_option("--p", p, "Mersenne exponent")->required()->check(CLI::Range(0u, kMaxExponentArg));
    decompose_cmd->add_option("--m", m, "Target, decimal")->required();

    auto* count = app.add_subcommand("count", "Count representations of m");
    count->add_option("--p", p, "Mersenne exponent")->required()->check(CLI::Range(0u, kMaxExponentArg));
    count->add_option("--m", m, "Target, decimal")->required();
    count->add_flag("--enumerate", enumerate, "List every representation");

    auto* check = app.add_subcommand("check", "Panrepresentability of an arbitrary n");
    check->add_option("--n", n, "Candidate, decimal")->required();

    auto* verify = app.add_subcommand("verify", "Run every theorem check for one exponent");
    verify->add_option("--p", p, "Mersenne exponent")->required()->check(CLI::Range(0u, kMaxExponentArg));

    auto emit = [&](const Outcome& outcome) {
        if (plain) {
            out << render_plain(outcome.envelope);
        } else {
            out << outcome.envelope.dump() << '\n';
        }
        return outcome.exit_code;
    };
    auto parsed_command = [&]() -> std::string {
        const auto subs = app.get_subcommands();
        return subs.empty() ? std::string{} : subs.front()->get_name();
    };

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return emit(fail(envelope(parsed_command(), Json::object()), "usage_error", e.what(), kExitUsage));
    }

    Config config;
    try {
        config = config_from_environment();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return emit(fail(envelope(parsed_command(), Json::object()), "usage_error", e.what(), kExitUsage));
    }

    Outcome outcome;
    if (*perfect) {
        outcome = cmd_perfect(max_p);
    } else if (*decompose_cmd) {
        outcome = cmd_decompose(p, m);
    } else if (*count) {
        outcome = cmd_count(p, m, enumerate, config);
    } else if (*check) {
        outcome = cmd_check(n, config);
    } else {
        outcome = cmd_verify(p, config);
    }
    if (outcome.envelope["status"] != "ok") {
        err << "error: " << outcome.envelope["error"]["message"].get<std::string>() << '\n';
    }
    return emit(outcome);
}

}  // namespace perfectrep::cli
