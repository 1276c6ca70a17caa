#ifndef GHM_REPORT_HPP
#define GHM_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "ghm/askey.hpp"
#include "ghm/errors.hpp"
#include "ghm/gmuntz.hpp"
#include "ghm/lommel.hpp"
#include "ghm/muntz.hpp"
#include "ghm/rational_polynomial.hpp"
#include "ghm/synthetic.hpp"

namespace ghm {

enum class Family { Muntz, GMuntz, Lommel, Askey, Synthetic };
enum class Command { Matrix, Det, Inverse, Bound, Eigen, Verify };
enum class OutputFormat { Json, Csv };

std::string family_name(Family f);
std::string command_name(Command c);

/// Usage-level error: unknown flag, malformed value, missing parameter,
/// incompatible family/command. Maps to exit code 2.
struct UsageError : Error {
    explicit UsageError(const std::string& what) : Error(what) {}
};

/// Thrown by parse_args for --help; carries the help text.
struct HelpRequested {
    std::string text;
};

struct RunConfig {
    Family family = Family::Muntz;
    Command command = Command::Verify;
    int n = 0;
    long prec = BigFloat::kDefaultPrec;
    OutputFormat format = OutputFormat::Json;
    bool printed_formulas = false;
    std::string output; // empty = stdout

    std::vector<ComplexRational> alphas;                    // muntz / gmuntz / synthetic
    std::optional<Rational> a, b, c;                        // gmuntz
    std::optional<Rational> q, V;                           // lommel (q also askey)
    std::optional<Rational> alpha, beta;                    // askey
    std::optional<ComplexRational> z0;
    std::vector<std::vector<ComplexRational>> cmatrix;      // synthetic connection rows

    // test hook: perturb the closed determinant before comparison so the
    // mismatch path (exit code 1) can be exercised
    bool inject_mismatch = false;

    void validate() const;
    /// Canonical argv (without the program name); parse_args round-trips it.
    std::vector<std::string> to_argv() const;

    bool operator==(const RunConfig& o) const;
};

/// Parse an argv list (without the program name) into a validated config.
RunConfig parse_args(const std::vector<std::string>& args);

struct Erratum {
    std::string formula;
    std::string printed;
    std::string implemented;
    bool agrees = false;
    std::string note;
};

struct BoundEntry {
    bool applicable = false;
    std::optional<Rational> exact;
    std::optional<BigFloat> value;
    bool certified = false;
};

struct GramReport {
    std::string family;
    std::string command;
    int n = 0;
    long prec = BigFloat::kDefaultPrec;

    std::optional<std::vector<std::vector<ComplexRational>>> entries;
    bool entries_consistent = true; // engine-built H equals the entry formula

    struct DetBlock {
        ComplexRational closed, oracle;
        bool match = false;
    };
    std::optional<DetBlock> det;

    struct InverseBlock {
        std::vector<std::vector<ComplexRational>> closed, oracle;
        bool match = false; // closed == gram route == oracle and H*closed == I
    };
    std::optional<InverseBlock> inverse;

    bool bounds_computed = false;
    BoundEntry b1, b2, family_bound, corollary, cd;
    bool bounds_certified = true;

    struct Lambda {
        Rational lo, hi;
        BigFloat value{BigFloat::kDefaultPrec};
    };
    std::optional<Lambda> lambda;

    bool reconstruction_ok = true; // synthetic: G recovery and det relation
    bool cross_checks_ok = true;   // askey series / infinite-product agreement

    std::vector<Erratum> errata;
    std::vector<std::string> errors;
    std::vector<std::string> warnings;

    bool ok() const;
};

/// Execute the configured command. Family parameter violations are
/// surfaced as structured errors on the report.
GramReport run(const RunConfig& config);

/// Deterministic serialization; identical inputs give identical bytes.
std::string emit_report(const GramReport& report, OutputFormat format);

/// 0 = verified, 1 = oracle mismatch or uncertified bound, 2 = usage error.
int exit_code_for(const GramReport& report);

} // namespace ghm

#endif
