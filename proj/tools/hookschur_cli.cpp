#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hookschur/reports.hpp"

namespace {

using namespace hookschur;

constexpr std::int64_t kMaxM = 12;
constexpr int kMaxN = 6;
constexpr int kEquivarianceTrials = 20;
constexpr std::uint64_t kDefaultSeed = 20260810;

// 0: pass, 1: mathematical check failed, 2: invalid arguments/preconditions,
// 3: resource refusal.
enum ExitCode : int {
    kPass = 0,
    kCheckFailed = 1,
    kInvalidArguments = 2,
    kResourceRefused = 3,
};

struct Options {
    std::int64_t m = 0;
    int n = 0;
    std::uint32_t p = 0;
    std::int64_t k = 0;
    std::int64_t l = 0;
    int ell = 0;
    std::string shape;
    std::uint64_t seed = kDefaultSeed;
    std::string output = "text";
    std::string out_path;
};

void emit(const std::string& payload, const Options& opt) {
    std::cout << payload;
    if (!opt.out_path.empty()) {
        std::ofstream file(opt.out_path, std::ios::binary);
        if (!file) {
            throw std::runtime_error("cannot open output file: " + opt.out_path);
        }
        file << payload;
    }
}

template <typename Report>
int emit_report(const Report& report, const Options& opt) {
    if (opt.output == "json") {
        emit(reports::render_json(report), opt);
    } else {
        emit(reports::render_text(report), opt);
    }
    return report.pass ? kPass : kCheckFailed;
}

void require_bounds(std::int64_t m, int n) {
    if (m < 1 || m > kMaxM) {
        throw std::invalid_argument("m must lie in [1, " + std::to_string(kMaxM) + "]");
    }
    if (n < 1 || n > kMaxN) {
        throw std::invalid_argument("n must lie in [1, " + std::to_string(kMaxN) + "]");
    }
}

void require_budget(std::uint64_t ambient_dim) {
    if (ambient_dim > elimination_limit()) {
        throw SizeLimitError("ambient dimension " + std::to_string(ambient_dim) +
                             " exceeds the size limit " +
                             std::to_string(elimination_limit()));
    }
}

Prime checked_prime(std::uint32_t p, std::int64_t m) {
    const Prime prime(p);
    if (m % prime.value() != 0) {
        throw std::invalid_argument("p must divide m");
    }
    return prime;
}

HookShape parse_shape(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw std::invalid_argument("shape must be given as A,B for (A, 1^B)");
    }
    try {
        const std::int64_t arm = std::stoll(text.substr(0, comma));
        const std::int64_t leg = std::stoll(text.substr(comma + 1));
        if (leg < 0) throw std::invalid_argument("shape leg must be >= 0");
        return HookShape{arm, leg};
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("shape must be given as A,B for (A, 1^B)");
    }
}

int run_complex(const Options& opt) {
    require_bounds(opt.m, opt.n);
    const Prime p = checked_prime(opt.p, opt.m);
    require_budget(reports::max_ambient_dimension(opt.m, opt.n));
    return emit_report(reports::make_complex_report(opt.m, opt.n, p), opt);
}

int run_cohomology(const Options& opt) {
    require_bounds(opt.m, opt.n);
    const Prime p = checked_prime(opt.p, opt.m);
    require_budget(reports::max_ambient_dimension(opt.m, opt.n));
    return emit_report(reports::make_cohomology_report(opt.m, opt.n, p), opt);
}

int run_character(const Options& opt) {
    const HookShape shape = parse_shape(opt.shape);
    if (opt.n < 1 || opt.n > kMaxN) {
        throw std::invalid_argument("n must lie in [1, " + std::to_string(kMaxN) + "]");
    }
    if (opt.p != 0) {
        Prime check(opt.p);  // validates primality
        (void)check;
    }
    require_budget(reports::ambient_dimension_for_shape(shape, opt.n));
    return emit_report(reports::make_character_report(shape, opt.n, opt.p), opt);
}

int run_identity(const Options& opt) {
    require_bounds(opt.m, opt.n);
    require_budget(reports::max_ambient_dimension(opt.m, opt.n));
    return emit_report(reports::make_identity_report(opt.m, opt.n), opt);
}

int run_adams(const Options& opt) {
    if (opt.k < 1 || opt.k > kMaxM) {
        throw std::invalid_argument("k must lie in [1, " + std::to_string(kMaxM) + "]");
    }
    if (opt.l < 0 || opt.l > kMaxM) {
        throw std::invalid_argument("l must lie in [1, " + std::to_string(kMaxM) + "]");
    }
    if (opt.n < 1 || opt.n > kMaxN) {
        throw std::invalid_argument("n must lie in [1, " + std::to_string(kMaxN) + "]");
    }
    const std::int64_t largest = opt.l > 0 ? opt.k * opt.l : opt.k;
    require_budget(reports::max_ambient_dimension(largest, opt.n));
    return emit_report(reports::make_adams_report(opt.k, opt.l, opt.n), opt);
}

int run_homotopy(const Options& opt) {
    require_bounds(opt.m, opt.n);
    const Prime p = checked_prime(opt.p, opt.m);
    if (opt.ell < 0 || opt.ell > opt.n) {
        throw std::invalid_argument("ell must lie in [1, n] (or 0 for all)");
    }
    require_budget(reports::max_ambient_dimension(opt.m, opt.n));
    return emit_report(reports::make_homotopy_report(opt.m, opt.n, p, opt.ell), opt);
}

int run_equivariance(const Options& opt) {
    require_bounds(opt.m, opt.n);
    const Prime p = checked_prime(opt.p, opt.m);
    require_budget(reports::max_ambient_dimension(opt.m, opt.n));
    return emit_report(reports::make_equivariance_report(opt.m, opt.n, p, opt.seed,
                                                         kEquivarianceTrials),
                       opt);
}

int run_sweep(const Options& opt) {
    if (opt.m < 0 || opt.m > kMaxM) {
        throw std::invalid_argument("sweep bound m must lie in [0, " +
                                    std::to_string(kMaxM) + "]");
    }
    if (opt.n < 0 || opt.n > kMaxN) {
        throw std::invalid_argument("sweep bound n must lie in [0, " +
                                    std::to_string(kMaxN) + "]");
    }
    return emit_report(reports::make_sweep_report(opt.m, opt.n), opt);
}

bool apply_size_limit_override() {
    const char* raw = std::getenv("HOOKSCHUR_MAX_DIM");
    if (raw == nullptr) return true;
    try {
        const long long value = std::stoll(raw);
        if (value < 1) return false;
        set_elimination_limit(static_cast<std::size_t>(value));
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact hook Schur module computations over prime fields"};
    app.require_subcommand(1);

    Options opt;
    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--output", opt.output, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        cmd->add_option("--out", opt.out_path, "also write the report to this file");
    };

    CLI::App* complex_cmd =
        app.add_subcommand("complex", "build the hook complex and report its shape");
    complex_cmd->add_option("--m", opt.m, "total degree")->required();
    complex_cmd->add_option("--p", opt.p, "prime characteristic")->required();
    complex_cmd->add_option("--n", opt.n, "dimension of V")->required();
    add_common(complex_cmd);

    CLI::App* cohomology_cmd =
        app.add_subcommand("cohomology", "cohomology of the hook complex");
    cohomology_cmd->add_option("--m", opt.m, "total degree")->required();
    cohomology_cmd->add_option("--p", opt.p, "prime characteristic")->required();
    cohomology_cmd->add_option("--n", opt.n, "dimension of V")->required();
    add_common(cohomology_cmd);

    CLI::App* character_cmd =
        app.add_subcommand("character", "dimension and character of a hook module");
    character_cmd->add_option("--shape", opt.shape, "hook shape A,B for (A, 1^B)")
        ->required();
    character_cmd->add_option("--n", opt.n, "dimension of V")->required();
    character_cmd->add_option("--p", opt.p,
                              "also report the divisible-degree subquotient");
    add_common(character_cmd);

    CLI::App* identity_cmd =
        app.add_subcommand("identity", "alternating hook sum versus the power sum");
    identity_cmd->add_option("--m", opt.m, "power")->required();
    identity_cmd->add_option("--n", opt.n, "number of variables")->required();
    add_common(identity_cmd);

    CLI::App* adams_cmd =
        app.add_subcommand("adams", "Adams operations on split classes");
    adams_cmd->add_option("--k", opt.k, "operation index")->required();
    adams_cmd->add_option("--l", opt.l, "second index for the composition check");
    adams_cmd->add_option("--n", opt.n, "rank of the split class")->required();
    add_common(adams_cmd);

    CLI::App* homotopy_cmd =
        app.add_subcommand("homotopy", "contraction homotopy identity check");
    homotopy_cmd->add_option("--m", opt.m, "total degree")->required();
    homotopy_cmd->add_option("--p", opt.p, "prime characteristic")->required();
    homotopy_cmd->add_option("--n", opt.n, "dimension of V")->required();
    homotopy_cmd->add_option("--ell", opt.ell, "distinguished index (0 = all)");
    add_common(homotopy_cmd);

    CLI::App* equivariance_cmd =
        app.add_subcommand("equivariance", "random group elements versus differentials");
    equivariance_cmd->add_option("--m", opt.m, "total degree")->required();
    equivariance_cmd->add_option("--p", opt.p, "prime characteristic")->required();
    equivariance_cmd->add_option("--n", opt.n, "dimension of V")->required();
    equivariance_cmd->add_option("--seed", opt.seed, "random seed")
        ->capture_default_str();
    add_common(equivariance_cmd);

    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "grid of cohomology, comparison and identity checks");
    sweep_cmd->add_option("--m", opt.m, "largest total degree")->default_val(9);
    sweep_cmd->add_option("--n", opt.n, "largest dimension")->default_val(4);
    add_common(sweep_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kInvalidArguments;
    }

    if (!apply_size_limit_override()) {
        std::cerr << "invalid HOOKSCHUR_MAX_DIM value\n";
        return kInvalidArguments;
    }

    try {
        if (complex_cmd->parsed()) return run_complex(opt);
        if (cohomology_cmd->parsed()) return run_cohomology(opt);
        if (character_cmd->parsed()) return run_character(opt);
        if (identity_cmd->parsed()) return run_identity(opt);
        if (adams_cmd->parsed()) return run_adams(opt);
        if (homotopy_cmd->parsed()) return run_homotopy(opt);
        if (equivariance_cmd->parsed()) return run_equivariance(opt);
        if (sweep_cmd->parsed()) return run_sweep(opt);
        std::cerr << "no subcommand selected\n";
        return kInvalidArguments;
    } catch (const SizeLimitError& e) {
        std::cerr << e.what() << "\n";
        return kResourceRefused;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kInvalidArguments;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kCheckFailed;
    }
}
