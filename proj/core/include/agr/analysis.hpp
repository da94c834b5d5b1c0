#ifndef AGR_ANALYSIS_HPP
#define AGR_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "agr/laurent.hpp"

namespace agr {

/// Tunables shared by every backend.  Defaults can be overridden by
/// environment variables, by an "options" object inside a request, and by
/// command-line flags, in that order of increasing precedence.
struct Options {
    int window = kDefaultFitWindow;
    int max_n = 128;
    int corpus_max_e = 5;
    int corpus_max_mu = 3;
    int semigroup_count = 100;
    int max_generator = 30;
    unsigned long long seed = 1729;
    std::string format = "json";
};

/// Option values pinned on the command line; these beat request-embedded
/// options.
struct OptionOverrides {
    std::optional<int> window;
    std::optional<int> max_n;
    std::optional<int> corpus_max_e;
    std::optional<int> corpus_max_mu;
    std::optional<int> semigroup_count;
    std::optional<int> max_generator;
    std::optional<unsigned long long> seed;
    std::optional<std::string> format;

    void apply(Options& options) const;
};

enum class RequestKind { Semigroup, Monomial, Hypersurface, Verify };

const char* to_string(RequestKind kind);

struct AnalysisRequest {
    RequestKind kind = RequestKind::Semigroup;
    nlohmann::json payload;
    Options options;
    nlohmann::json echo;
};

/// One conclusion, justified by exactly one theorem tag.  Verdicts with
/// must_hold set assert statements that are theorems on every valid input;
/// a false value there flips the report to not-ok.
struct Verdict {
    std::string check;
    std::string tag;
    nlohmann::json value;
    bool must_hold = false;
};

struct AnalysisReport {
    std::string kind;
    nlohmann::json request;
    nlohmann::json invariants;
    std::vector<Verdict> verdicts;
    bool ok = true;
    long long elapsed_ms = 0;
};

/// Validates a single request document.  Unknown fields are rejected; domain
/// invariants checkable at parse time (gcd of generators, strand bounds)
/// surface as parse_error.
AnalysisRequest parse_request(const nlohmann::json& document, Options defaults,
                              const OptionOverrides& pinned = {});
AnalysisRequest parse_request(const std::string& text, Options defaults,
                              const OptionOverrides& pinned = {});

AnalysisReport run(const AnalysisRequest& request);

/// "json" gives byte-stable output (sorted keys, integers only, no timing);
/// "text" is the human layout and includes timing.
std::string emit(const AnalysisReport& report, const std::string& format);

} // namespace agr

#endif
