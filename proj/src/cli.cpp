#include "walshlab/cli.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "walshlab/djsim.hpp"
#include "walshlab/fngen.hpp"
#include "walshlab/report.hpp"
#include "walshlab/spectral.hpp"
#include "walshlab/tt_io.hpp"

namespace walshlab {

namespace {

uint64_t auto_seed() {
    std::random_device rd;
    return (uint64_t(rd()) << 32) ^ uint64_t(rd());
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw IoError("cannot open " + out_path + " for writing");
    file << text;
    if (!file) throw IoError("failed writing " + out_path);
}

std::string json_as_text(const nlohmann::ordered_json& j) {
    std::string out;
    for (const auto& [key, value] : j.items()) {
        out += key;
        out += ": ";
        out += value.is_string() ? value.get<std::string>() : value.dump();
        out += '\n';
    }
    return out;
}

void require_odd(Problem p, int n) {
    if (n < 3 || n % 2 == 0) {
        throw ValueError(to_string(p) +
                         " needs an odd variable count (n odd, n >= 3), got n = " +
                         std::to_string(n));
    }
}

}  // namespace

nlohmann::ordered_json cmd_analyze(const std::string& path, int cap) {
    const BooleanFunction f = read_tt_file(path, cap);
    const WalshSpectrum s = walsh_spectrum(f);
    return analytics_json(f, s);
}

ExperimentReport cmd_experiment(Problem problem, int n, uint64_t trials,
                                uint64_t seed, bool force_worst_case, int cap) {
    if (n < 1 || n > kMaxVars) throw ValueError("variable count out of range");
    if (n > cap) {
        throw CapacityError("n = " + std::to_string(n) + " exceeds the cap of " +
                            std::to_string(cap) + "; raise --cap");
    }
    // P6/P7 draw with the worst-case budget by default; the flag makes that
    // explicit in scripts.
    const ErrorPolicy policy = ErrorPolicy::WorstCase;
    (void)force_worst_case;
    switch (problem) {
        case Problem::P1:
            return run_p1(n, trials, seed, cap);
        case Problem::P2:
            return run_p2(n, FunctionSource::random(), trials, seed, false,
                          Problem::P2, cap);
        case Problem::P3:
            return run_p3_p4(n, FunctionSource::random(), trials, seed,
                             Problem::P3, cap);
        case Problem::P4:
            require_odd(Problem::P4, n);
            return run_p3_p4(n, FunctionSource::plateaued(), trials, seed,
                             Problem::P4, cap);
        case Problem::P5:
            require_odd(Problem::P5, n);
            return run_p2(n, FunctionSource::plateaued(), trials, seed, true,
                          Problem::P5, cap);
        case Problem::P6:
            require_odd(Problem::P6, n);
            return run_p6(n, trials, seed, policy, 0, cap);
        case Problem::P7:
            require_odd(Problem::P7, n);
            return run_p7(n, trials, seed, policy, 0, cap);
    }
    throw ValueError("unknown problem");
}

GenerateResult cmd_generate(const std::string& kind, int n, uint64_t seed,
                            std::optional<uint64_t> base, int constant_term,
                            bool force_worst_case) {
    SplitMix64 gen = derive_stream(seed, 0);
    nlohmann::ordered_json meta;
    meta["generator"] = kind;
    meta["n"] = n;
    meta["seed"] = seed;

    const auto pick_base = [&]() -> uint64_t {
        const uint64_t mask = base ? *base : gen.below(uint64_t{1} << n);
        if (mask >= (uint64_t{1} << n)) {
            throw DimensionError("base mask does not fit in " + std::to_string(n) +
                                 " bits");
        }
        meta["base"] = mask;
        return mask;
    };

    if (kind == "linear") {
        return GenerateResult{linear(n, pick_base()), meta};
    }
    if (kind == "affine") {
        const uint64_t mask = pick_base();
        meta["constant_term"] = constant_term;
        return GenerateResult{affine(n, mask, constant_term), meta};
    }
    if (kind == "random") {
        return GenerateResult{random_function(n, gen), meta};
    }
    if (kind == "bent-mm") {
        return GenerateResult{FunctionSource::bent().draw(n, gen), meta};
    }
    if (kind == "plateaued") {
        return GenerateResult{FunctionSource::plateaued().draw(n, gen), meta};
    }
    if (kind == "noisy-linear:Ln" || kind == "noisy-linear:LnEps") {
        const uint64_t mask = base ? *base : gen.below(uint64_t{1} << n);
        const NoisyLinearSpec spec = kind == "noisy-linear:Ln"
                                         ? NoisyLinearSpec::ln(n, mask)
                                         : NoisyLinearSpec::ln_eps(n, mask);
        meta["base"] = mask;
        meta["max_errors"] = spec.max_errors;
        if (spec.variant == NoisyLinearSpec::Variant::LnEps) {
            meta["epsilon"] = kNoisyLinearEpsilon;  // implied by the 1.17 budget
        }
        NoisyLinearDraw draw = noisy_linear(
            spec, gen,
            force_worst_case ? std::optional<uint64_t>(spec.max_errors)
                             : std::nullopt);
        meta["errors"] = draw.errors;
        return GenerateResult{std::move(draw.f), meta};
    }
    throw ValueError(
        "unknown generator \"" + kind +
        "\" (expected linear, affine, random, bent-mm, plateaued, "
        "noisy-linear:Ln, noisy-linear:LnEps)");
}

nlohmann::ordered_json cmd_count(int n) {
    const BigInt total = class_size_ln(n);
    const BigInt ball = ln_ball_size(n);
    const ClassSizeBounds bounds = class_size_log2_bounds(n);
    char h12[32];
    std::snprintf(h12, sizeof(h12), "%.12f", binary_entropy(0.125));
    nlohmann::ordered_json j;
    j["n"] = n;
    j["class_size"] = total.str();
    j["log2_class_size"] = log2_big(total);
    j["ball_size"] = ball.str();
    j["log2_ball_size"] = log2_big(ball);
    j["log2_lower_bound"] = bounds.log2_lower;
    j["log2_upper_bound"] = bounds.log2_upper;
    j["h_eighth"] = binary_entropy(0.125);
    j["h_eighth_12digits"] = h12;
    return j;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Boolean-function spectral analysis and one-query sampling toolkit"};
    app.require_subcommand(1);

    std::string path;
    std::string format;
    std::string out_path;
    std::string kind;
    std::string problem_name;
    int n = 0;
    int cap = 0;
    int constant_term = 0;
    uint64_t trials = 1;
    uint64_t count = 1;
    std::optional<uint64_t> seed_opt;
    std::optional<uint64_t> base_opt;
    bool force_worst = false;

    auto* analyze = app.add_subcommand("analyze", "Report spectral analytics of a .tt file");
    analyze->add_option("file", path, "truth-table file")->required();
    analyze->add_option("--format", format, "text|json (default json)");
    analyze->add_option("--out", out_path, "write output to a file");
    analyze->add_option("--cap", cap, "largest accepted n");

    auto* walsh = app.add_subcommand("walsh", "Dump the Walsh spectrum of a .tt file");
    walsh->add_option("file", path)->required();
    walsh->add_option("--format", format, "text|json (default text)");
    walsh->add_option("--out", out_path);
    walsh->add_option("--cap", cap);

    auto* anf = app.add_subcommand("anf", "Dump the algebraic normal form of a .tt file");
    anf->add_option("file", path)->required();
    anf->add_option("--format", format, "text|json (default text)");
    anf->add_option("--out", out_path);
    anf->add_option("--cap", cap);

    auto* dj = app.add_subcommand("dj", "Dump the one-query measurement distribution");
    dj->add_option("file", path)->required();
    dj->add_option("--format", format, "text|json (default text)");
    dj->add_option("--out", out_path);
    dj->add_option("--cap", cap, "simulator width cap");

    auto* sample = app.add_subcommand("sample", "Draw measurement outcomes");
    sample->add_option("file", path)->required();
    sample->add_option("--count", count, "number of draws");
    sample->add_option("--seed", seed_opt, "generator seed (auto-chosen and recorded if absent)");
    sample->add_option("--format", format, "text|json (default text)");
    sample->add_option("--out", out_path);
    sample->add_option("--cap", cap);

    auto* generate = app.add_subcommand("generate", "Write a generated function as .tt");
    generate->add_option("kind", kind,
                         "linear|affine|random|bent-mm|plateaued|"
                         "noisy-linear:Ln|noisy-linear:LnEps")
        ->required();
    generate->add_option("--n", n, "variable count")->required();
    generate->add_option("--seed", seed_opt);
    generate->add_option("--base", base_opt, "mask of the underlying linear function");
    generate->add_option("--const", constant_term, "affine constant term");
    generate->add_flag("--force-worst-case", force_worst, "flip exactly the budget");
    generate->add_option("--out", out_path, "output .tt path (stdout if absent)");

    auto* experiment = app.add_subcommand("experiment", "Run a problem suite");
    experiment->add_option("problem", problem_name, "P1..P7")->required();
    experiment->add_option("--n", n)->required();
    experiment->add_option("--trials", trials)->required();
    experiment->add_option("--seed", seed_opt);
    experiment->add_option("--format", format, "text|json|csv (default json)");
    experiment->add_option("--out", out_path);
    experiment->add_flag("--force-worst-case", force_worst,
                         "draw with e = budget (already the default for P6/P7)");
    experiment->add_option("--cap", cap);

    auto* count_cmd = app.add_subcommand("count", "Exact noisy-linear class size and bounds");
    count_cmd->add_option("--n", n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        const bool seed_given = seed_opt.has_value();
        const uint64_t seed = seed_opt.value_or(auto_seed());
        // shared option slots get their per-command defaults here
        if (format.empty()) {
            format = (*analyze || *experiment) ? "json" : "text";
        }
        if (cap == 0) {
            cap = (*analyze || *walsh || *anf) ? kMaxVars : kDefaultSimulatorCap;
        }

        if (*analyze) {
            const auto j = cmd_analyze(path, cap);
            emit(format == "text" ? json_as_text(j) : j.dump(2) + "\n", out_path, out);
        } else if (*walsh) {
            const BooleanFunction f = read_tt_file(path, cap);
            const WalshSpectrum s = walsh_spectrum(f);
            if (format == "json") {
                nlohmann::ordered_json j;
                j["n"] = s.n();
                j["w"] = std::vector<int64_t>(s.values().begin(), s.values().end());
                emit(j.dump(2) + "\n", out_path, out);
            } else {
                emit(spectrum_dump_text(s), out_path, out);
            }
        } else if (*anf) {
            const BooleanFunction f = read_tt_file(path, cap);
            const AnfPolynomial p = to_anf(f);
            emit(format == "json" ? anf_json(p).dump(2) + "\n" : anf_text(p) + "\n",
                 out_path, out);
        } else if (*dj) {
            const BooleanFunction f = read_tt_file(path, kMaxVars);
            const MeasurementDistribution d = dj_distribution(f, cap);
            if (format == "json") {
                nlohmann::ordered_json j;
                j["n"] = d.n();
                std::vector<double> p(d.size());
                for (uint64_t z = 0; z < d.size(); ++z) p[z] = d.probability(z);
                j["p"] = p;
                j["denominator"] = d.denominator();
                emit(j.dump(2) + "\n", out_path, out);
            } else {
                emit(distribution_dump_text(d), out_path, out);
            }
        } else if (*sample) {
            const BooleanFunction f = read_tt_file(path, kMaxVars);
            const MeasurementDistribution d = dj_distribution(f, cap);
            const auto draws = dj_sample(d, seed, count);
            if (format == "json") {
                nlohmann::ordered_json j;
                j["seed"] = seed;
                j["samples"] = draws;
                emit(j.dump(2) + "\n", out_path, out);
            } else {
                std::string text;
                if (!seed_given) text += "# seed " + std::to_string(seed) + "\n";
                for (uint64_t z : draws) text += mask_bits(z, d.n()) + "\n";
                emit(text, out_path, out);
            }
        } else if (*generate) {
            GenerateResult result =
                cmd_generate(kind, n, seed, base_opt, constant_term, force_worst);
            if (out_path.empty()) {
                out << to_tt_text(result.f);
                err << result.meta.dump() << "\n";
            } else {
                write_tt_file(out_path, result.f);
                result.meta["out"] = out_path;
                out << result.meta.dump(2) << "\n";
            }
        } else if (*experiment) {
            const Problem problem = problem_from_string(problem_name);
            const ExperimentReport report =
                cmd_experiment(problem, n, trials, seed, force_worst, cap);
            std::string text;
            if (format == "csv") {
                if (!seed_given) text += "# seed " + std::to_string(seed) + "\n";
                text += report.to_csv();
            } else if (format == "text") {
                text = json_as_text(nlohmann::ordered_json::parse(report.to_json_string()));
            } else {
                text = report.to_json_string();
            }
            emit(text, out_path, out);
        } else if (*count_cmd) {
            emit(cmd_count(n).dump(2) + "\n", out_path, out);
        }
        return kExitOk;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace walshlab
