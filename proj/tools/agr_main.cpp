#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "agr/analysis.hpp"
#include "agr/errors.hpp"
#include "agr/version.hpp"

namespace {

// Exit codes: 0 ok, 1 input error, 2 fit not stabilized, 3 precondition
// violated, 4 verification failure.
constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNotStabilized = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitVerifyFailed = 4;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw agr::parse_error("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void env_int(const char* name, int& target) {
    if (const char* v = std::getenv(name)) target = std::atoi(v);
}

void env_u64(const char* name, unsigned long long& target) {
    if (const char* v = std::getenv(name)) target = std::strtoull(v, nullptr, 10);
}

void env_str(const char* name, std::string& target) {
    if (const char* v = std::getenv(name)) target = v;
}

agr::Options options_from_env() {
    agr::Options opt;
    env_int("AGR_WINDOW", opt.window);
    env_int("AGR_MAX_N", opt.max_n);
    env_int("AGR_CORPUS_MAX_E", opt.corpus_max_e);
    env_int("AGR_CORPUS_MAX_MU", opt.corpus_max_mu);
    env_int("AGR_SEMIGROUP_COUNT", opt.semigroup_count);
    env_int("AGR_MAX_GENERATOR", opt.max_generator);
    env_u64("AGR_SEED", opt.seed);
    env_str("AGR_FORMAT", opt.format);
    return opt;
}

int process_document(const nlohmann::json& document, const agr::Options& defaults,
                     const agr::OptionOverrides& pinned) {
    if (document.is_array()) {
        // A batch; reports come back in input order.  The envelope format is
        // taken from flags/environment, not from individual requests.
        std::string format = defaults.format;
        if (pinned.format) format = *pinned.format;

        std::vector<agr::AnalysisReport> reports;
        for (const auto& entry : document) {
            reports.push_back(agr::run(agr::parse_request(entry, defaults, pinned)));
        }
        if (format == "json") {
            std::cout << "[\n";
            for (size_t i = 0; i < reports.size(); ++i) {
                std::string body = agr::emit(reports[i], format);
                if (!body.empty() && body.back() == '\n') body.pop_back();
                std::cout << body << (i + 1 < reports.size() ? ",\n" : "\n");
            }
            std::cout << "]\n";
        } else {
            for (const auto& report : reports) {
                std::cout << agr::emit(report, format);
            }
        }
        bool all_ok = true;
        for (const auto& report : reports) all_ok = all_ok && report.ok;
        return all_ok ? kExitOk : kExitVerifyFailed;
    }

    const agr::AnalysisRequest request =
        agr::parse_request(document, defaults, pinned);
    const agr::AnalysisReport report = agr::run(request);
    std::cout << agr::emit(report, request.options.format);
    return report.ok ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of associated graded rings: Hilbert "
                 "functions, h-polynomials and filtration criteria for "
                 "numerical-semigroup rings, monomial ideals and modules over "
                 "Artinian hypersurfaces"};
    app.set_version_flag("--version", std::string(agr::kEngineName) + " " +
                                          agr::kEngineVersion);
    app.footer("Exit codes: 0 ok, 1 input error, 2 sample did not stabilize, "
               "3 precondition violated, 4 verification failure.");

    agr::OptionOverrides pinned;
    int window = 0, max_n = 0, corpus_max_e = 0, corpus_max_mu = 0;
    int semigroup_count = 0, max_generator = 0;
    unsigned long long seed = 0;
    std::string format;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--window", window,
                        "Trailing-zero window for series fits (default 5)")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--max-n", max_n,
                        "Cap on adaptive Hilbert-function sampling (default 128)")
            ->check(CLI::Range(2, 1 << 20));
        cmd->add_option("--format", format, "Output format: json or text")
            ->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--corpus-max-e", corpus_max_e,
                        "Verification corpus bound on the ring exponent")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--corpus-max-mu", corpus_max_mu,
                        "Verification corpus bound on the number of strands")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--seed", seed,
                        "Seed for the randomized semigroup corpus");
        cmd->add_option("--semigroup-count", semigroup_count,
                        "Number of random semigroups to verify")
            ->check(CLI::NonNegativeNumber);
        cmd->add_option("--max-generator", max_generator,
                        "Largest generator in the random semigroup corpus")
            ->check(CLI::Range(3, 1 << 20));
    };

    std::string input_path;
    std::string bare_input_path;
    app.add_option("input", bare_input_path,
                   "Request document (JSON object or array; - for stdin)");
    add_common(&app);
    CLI::App* analyze = app.add_subcommand(
        "analyze", "Run analysis requests from a JSON file or stdin");
    analyze->add_option("input", input_path,
                        "Request document (JSON object or array; - for stdin)");
    add_common(analyze);

    CLI::App* verify = app.add_subcommand(
        "verify", "Run the oracle-equivalence and inequality corpora");
    add_common(verify);

    app.require_subcommand(0, 1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints help/version or the error
        return code == 0 ? kExitOk : kExitInput;
    }

    auto collect = [&](CLI::App* cmd) {
        if (cmd->count("--window")) pinned.window = window;
        if (cmd->count("--max-n")) pinned.max_n = max_n;
        if (cmd->count("--format")) pinned.format = format;
        if (cmd->count("--corpus-max-e")) pinned.corpus_max_e = corpus_max_e;
        if (cmd->count("--corpus-max-mu")) pinned.corpus_max_mu = corpus_max_mu;
        if (cmd->count("--seed")) pinned.seed = seed;
        if (cmd->count("--semigroup-count")) pinned.semigroup_count = semigroup_count;
        if (cmd->count("--max-generator")) pinned.max_generator = max_generator;
    };
    collect(&app);
    collect(analyze);
    collect(verify);
    if (input_path.empty()) input_path = bare_input_path;

    agr::Options defaults = options_from_env();

    try {
        nlohmann::json document;
        if (verify->parsed()) {
            document = nlohmann::json{{"verify", nlohmann::json::object()}};
        } else {
            const std::string text = read_input(input_path);
            try {
                document = nlohmann::json::parse(text);
            } catch (const nlohmann::json::exception& e) {
                throw agr::parse_error(std::string("request: ") + e.what());
            }
        }
        return process_document(document, defaults, pinned);
    } catch (const agr::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const agr::not_stabilized& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotStabilized;
    } catch (const agr::precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
