// Command-line front end: synth / check / spectrum / verify / schedule.
//
// Exit codes: 0 success (solvable / verified), 1 clean negative (infeasible,
// empty spectrum), 2 invalid input values, 3 shape mismatch, 4 parse error,
// 5 verification failure, 6 work-guard exceeded, 7 internal invariant
// violation, 64 command-line usage error.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <maxplus/errors.hpp>
#include <maxplus/io.hpp>
#include <maxplus/one_sided.hpp>
#include <maxplus/scheduling.hpp>
#include <maxplus/spectrum.hpp>

namespace {

using maxplus::Bound;
using maxplus::ExtReal;
using maxplus::Rat;
using maxplus::TropVector;
using json = maxplus::io::json;

constexpr int kExitSolvable = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitShape = 3;
constexpr int kExitParse = 4;
constexpr int kExitVerifyFailed = 5;
constexpr int kExitGuard = 6;
constexpr int kExitInternal = 7;
constexpr int kExitUsage = 64;

std::string method_name(maxplus::SolveMethod m) {
    switch (m) {
        case maxplus::SolveMethod::dominance: return "dominance";
        case maxplus::SolveMethod::alternating: return "alternating";
        case maxplus::SolveMethod::oracle: return "oracle";
    }
    return "?";
}

json bound_to_json(const Bound& b) {
    if (b.is_finite()) return maxplus::io::entry_to_json(ExtReal(b.value()));
    return b.str();
}

json vector_to_json(const TropVector& v) {
    json arr = json::array();
    for (int i = 0; i < v.size(); ++i) arr.push_back(maxplus::io::entry_to_json(v[i]));
    return arr;
}

std::string vector_to_text(const TropVector& v) {
    std::string out;
    for (int i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += maxplus::to_string(v[i]);
    }
    return out;
}

// Stable 64-bit digest of a witness for compact verify reports.
std::string witness_hash(const TropVector& v) {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    const std::string text = vector_to_text(v);
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct Args {
    std::string intervals_file, a_file, b_file, instance_file, out_prefix;
    std::string lambda_text;
    int samples = 5;
    bool json_out = false;
    std::optional<std::uint64_t> seed;
};

int cmd_synth(const Args& args) {
    const maxplus::IntervalSystem sys = maxplus::io::read_intervals_file(args.intervals_file);
    auto [A, B] = maxplus::synth_matrices(sys);
    const std::string a_path = args.out_prefix + "A.json";
    const std::string b_path = args.out_prefix + "B.json";
    maxplus::io::write_matrix_file(a_path, A);
    maxplus::io::write_matrix_file(b_path, B);
    if (args.json_out) {
        json out{{"a_file", a_path},
                 {"b_file", b_path},
                 {"components", maxplus::io::intervals_to_json(sys)["intervals"]}};
        std::cout << out.dump(2) << '\n';
        return kExitSolvable;
    }
    std::cout << "wrote " << a_path << " and " << b_path << '\n';
    std::cout << "predicted spectrum:";
    for (int i = 0; i < sys.count(); ++i)
        std::cout << " [" << maxplus::to_string(sys.lower(i)) << ", "
                  << maxplus::to_string(sys.upper(i)) << "]";
    std::cout << '\n';
    return kExitSolvable;
}

int cmd_check(const Args& args) {
    const maxplus::TropMatrix A = maxplus::io::read_matrix_file(args.a_file);
    const maxplus::TropMatrix B = maxplus::io::read_matrix_file(args.b_file);
    const Rat lambda = maxplus::parse_rational(args.lambda_text);
    const maxplus::TwoSidedOutcome out = maxplus::membership(A, B, lambda);
    if (args.json_out) {
        json doc{{"lambda", maxplus::io::entry_to_json(ExtReal(lambda))},
                 {"solvable", out.solvable},
                 {"method", method_name(out.method)},
                 {"iterations", out.iterations},
                 {"cap_exceeded", out.cap_exceeded}};
        if (out.witness_x) doc["witness"] = vector_to_json(*out.witness_x);
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "lambda: " << maxplus::to_string(lambda) << '\n';
        std::cout << "status: " << (out.solvable ? "solvable" : "infeasible") << '\n';
        std::cout << "method: " << method_name(out.method) << '\n';
        if (out.witness_x) std::cout << "witness: " << vector_to_text(*out.witness_x) << '\n';
    }
    return out.solvable ? kExitSolvable : kExitNegative;
}

int cmd_spectrum(const Args& args) {
    const maxplus::TropMatrix A = maxplus::io::read_matrix_file(args.a_file);
    const maxplus::TropMatrix B = maxplus::io::read_matrix_file(args.b_file);
    const maxplus::Spectrum sp = maxplus::compute_spectrum(A, B);
    if (args.json_out) {
        json comps = json::array();
        for (const auto& c : sp.components)
            comps.push_back(json::array({maxplus::io::entry_to_json(ExtReal(c.lo)),
                                         maxplus::io::entry_to_json(ExtReal(c.hi))}));
        json doc{{"bounds", json::array({bound_to_json(sp.bounds.lo), bound_to_json(sp.bounds.hi)})},
                 {"components", std::move(comps)},
                 {"heuristic", sp.heuristic}};
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "bounds: [" << sp.bounds.lo.str() << ", " << sp.bounds.hi.str() << "]"
                  << (sp.bounds.empty() ? " (empty)" : "") << '\n';
        for (const auto& c : sp.components)
            std::cout << "component: [" << maxplus::to_string(c.lo) << ", "
                      << maxplus::to_string(c.hi) << "]\n";
        std::cout << "components: " << sp.components.size() << '\n';
        std::cout << "heuristic: " << (sp.heuristic ? "true" : "false") << '\n';
    }
    return sp.components.empty() ? kExitNegative : kExitSolvable;
}

int cmd_verify(const Args& args) {
    const maxplus::IntervalSystem sys = maxplus::io::read_intervals_file(args.intervals_file);
    const maxplus::TheoremReport rep = maxplus::verify_theorem(sys, args.samples, args.seed);
    if (args.json_out) {
        json checks = json::array();
        for (const auto& c : rep.checks) {
            json row{{"region", c.region},
                     {"lambda", maxplus::io::entry_to_json(ExtReal(c.lambda))},
                     {"expect_solvable", c.expect_solvable},
                     {"passed", c.passed}};
            if (c.witness) row["witness_hash"] = witness_hash(*c.witness);
            if (!c.detail.empty()) row["detail"] = c.detail;
            checks.push_back(std::move(row));
        }
        json doc{{"all_passed", rep.all_passed},
                 {"bounds", json::array({bound_to_json(rep.bounds.lo), bound_to_json(rep.bounds.hi)})},
                 {"checks", std::move(checks)}};
        std::cout << doc.dump(2) << '\n';
    } else {
        for (const auto& c : rep.checks) {
            std::cout << (c.passed ? "pass" : "FAIL") << ' ' << c.region
                      << " lambda=" << maxplus::to_string(c.lambda)
                      << " expect=" << (c.expect_solvable ? "solvable" : "infeasible")
                      << " witness=" << (c.witness ? witness_hash(*c.witness) : std::string("-"));
            if (!c.detail.empty()) std::cout << " detail=" << c.detail;
            std::cout << '\n';
        }
        std::cout << (rep.all_passed ? "all checks passed" : "verification FAILED") << " ("
                  << rep.checks.size() << " checks)\n";
    }
    return rep.all_passed ? kExitSolvable : kExitVerifyFailed;
}

int cmd_schedule(const Args& args) {
    const maxplus::ScheduleInstance inst = maxplus::io::read_instance_file(args.instance_file);
    const std::vector<maxplus::ScheduleSolution> sols = maxplus::solve_schedule(inst);
    if (args.json_out) {
        json arr = json::array();
        for (const auto& s : sols) {
            json starts = json::array(), completion = json::array();
            for (const auto& v : s.starts) starts.push_back(maxplus::io::entry_to_json(ExtReal(v)));
            for (const auto& v : s.completion)
                completion.push_back(maxplus::io::entry_to_json(ExtReal(v)));
            arr.push_back(json{{"lambda", maxplus::io::entry_to_json(ExtReal(s.lambda))},
                               {"starts", std::move(starts)},
                               {"completion", std::move(completion)}});
        }
        std::cout << json{{"solutions", std::move(arr)}}.dump(2) << '\n';
    } else if (sols.empty()) {
        std::cout << "no synchronizing offset exists\n";
    } else {
        for (const auto& s : sols) {
            std::cout << "lambda: " << maxplus::to_string(s.lambda) << '\n';
            std::cout << "  starts:";
            for (const auto& v : s.starts) std::cout << ' ' << maxplus::to_string(v);
            std::cout << "\n  completion:";
            for (const auto& v : s.completion) std::cout << ' ' << maxplus::to_string(v);
            std::cout << '\n';
        }
    }
    return sols.empty() ? kExitNegative : kExitSolvable;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact max-plus linear algebra: two-sided systems, spectra, scheduling"};
    app.require_subcommand(1);
    Args args;

    CLI::App* synth = app.add_subcommand("synth", "build the 2 x 3m pencil for an interval system");
    synth->add_option("intervals", args.intervals_file, "interval JSON file")->required();
    synth->add_option("prefix", args.out_prefix, "output prefix for <prefix>A.json, <prefix>B.json")
        ->required();
    synth->add_flag("--json", args.json_out, "machine-readable output");

    CLI::App* check = app.add_subcommand("check", "decide A(x)x = lambda(x)B(x)x");
    check->add_option("A", args.a_file, "matrix A JSON file")->required();
    check->add_option("B", args.b_file, "matrix B JSON file")->required();
    check->add_option("--lambda", args.lambda_text, "eigenvalue candidate, exact p/q")->required();
    check->add_flag("--json", args.json_out, "machine-readable output");

    CLI::App* spectrum = app.add_subcommand("spectrum", "scan the two-sided spectrum of (A, B)");
    spectrum->add_option("A", args.a_file, "matrix A JSON file")->required();
    spectrum->add_option("B", args.b_file, "matrix B JSON file")->required();
    spectrum->add_flag("--json", args.json_out, "machine-readable output");

    CLI::App* verify = app.add_subcommand("verify", "certify the prescribed-spectrum construction");
    verify->add_option("intervals", args.intervals_file, "interval JSON file")->required();
    verify->add_option("--samples", args.samples, "grid samples per region")
        ->check(CLI::Range(1, 1000));
    std::uint64_t seed_value = 0;
    CLI::Option* seed_opt =
        verify->add_option("--seed", seed_value, "add seeded random samples per region");
    verify->add_flag("--json", args.json_out, "machine-readable output");

    CLI::App* schedule = app.add_subcommand("schedule", "synchronizing offsets for an instance");
    schedule->add_option("instance", args.instance_file, "instance JSON file")->required();
    schedule->add_flag("--json", args.json_out, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    if (seed_opt->count() > 0) args.seed = seed_value;

    try {
        if (synth->parsed()) return cmd_synth(args);
        if (check->parsed()) return cmd_check(args);
        if (spectrum->parsed()) return cmd_spectrum(args);
        if (verify->parsed()) return cmd_verify(args);
        if (schedule->parsed()) return cmd_schedule(args);
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const maxplus::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const maxplus::GuardExceeded& e) {
        std::cerr << "guard exceeded: " << e.what() << '\n';
        return kExitGuard;
    } catch (const maxplus::DimensionMismatch& e) {
        std::cerr << "shape mismatch: " << e.what() << '\n';
        return kExitShape;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}
