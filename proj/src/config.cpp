#include <CLI11.hpp>

#include <sstream>

#include "ghm/report.hpp"

namespace ghm {

std::string family_name(Family f) {
    switch (f) {
        case Family::Muntz: return "muntz";
        case Family::GMuntz: return "gmuntz";
        case Family::Lommel: return "lommel";
        case Family::Askey: return "askey";
        case Family::Synthetic: return "synthetic";
    }
    return "?";
}

std::string command_name(Command c) {
    switch (c) {
        case Command::Matrix: return "matrix";
        case Command::Det: return "det";
        case Command::Inverse: return "inverse";
        case Command::Bound: return "bound";
        case Command::Eigen: return "eigen";
        case Command::Verify: return "verify";
    }
    return "?";
}

namespace {

Family parse_family(const std::string& s) {
    if (s == "muntz") return Family::Muntz;
    if (s == "gmuntz") return Family::GMuntz;
    if (s == "lommel") return Family::Lommel;
    if (s == "askey") return Family::Askey;
    if (s == "synthetic") return Family::Synthetic;
    throw UsageError("unknown family: \"" + s + "\"");
}

Command parse_command(const std::string& s) {
    if (s == "matrix") return Command::Matrix;
    if (s == "det") return Command::Det;
    if (s == "inverse") return Command::Inverse;
    if (s == "bound") return Command::Bound;
    if (s == "eigen") return Command::Eigen;
    if (s == "verify") return Command::Verify;
    throw UsageError("unknown command: \"" + s + "\"");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<ComplexRational> parse_complex_list(const std::string& s) {
    std::vector<ComplexRational> out;
    for (const auto& tok : split(s, ',')) out.push_back(ComplexRational::parse(tok));
    return out;
}

std::string join_complex(const std::vector<ComplexRational>& v, char sep) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i].str();
    }
    return out;
}

} // namespace

void RunConfig::validate() const {
    if (n < 0) throw UsageError("--n must be nonnegative");
    if (prec < BigFloat::kMinPrec) throw UsageError("--prec must be at least 64");
    auto need = [&](bool present, const char* flag) {
        if (!present)
            throw UsageError(std::string("missing parameter ") + flag + " for family " +
                             family_name(family));
    };
    switch (family) {
        case Family::Muntz:
            need(!alphas.empty(), "--alphas");
            if (n >= static_cast<int>(alphas.size()))
                throw UsageError("--n requires at least n+1 exponents in --alphas");
            break;
        case Family::GMuntz:
            need(a.has_value(), "--a");
            need(b.has_value(), "--b");
            need(c.has_value(), "--c");
            need(!alphas.empty(), "--alphas");
            if (n >= static_cast<int>(alphas.size()))
                throw UsageError("--n requires at least n+1 exponents in --alphas");
            break;
        case Family::Lommel:
            need(q.has_value(), "--q");
            need(V.has_value(), "--V");
            break;
        case Family::Askey:
            need(alpha.has_value(), "--alpha");
            need(beta.has_value(), "--beta");
            need(q.has_value(), "--q");
            break;
        case Family::Synthetic:
            need(!alphas.empty(), "--alphas");
            need(!cmatrix.empty(), "--cmatrix");
            for (size_t r = 0; r < cmatrix.size(); ++r)
                if (cmatrix[r].size() != r + 1)
                    throw UsageError("--cmatrix row " + std::to_string(r) + " must have " +
                                     std::to_string(r + 1) + " entries");
            if (n >= static_cast<int>(cmatrix.size()))
                throw UsageError("--n exceeds the order of --cmatrix");
            if (cmatrix.size() > alphas.size())
                throw UsageError("--cmatrix order exceeds the exponent count");
            if (command == Command::Bound || command == Command::Eigen)
                throw UsageError("command " + command_name(command) +
                                 " is incompatible with the synthetic family");
            break;
    }
    if (z0 && z0->abs2() != Rational(1)) throw UsageError("--z0 must have modulus 1");
}

std::vector<std::string> RunConfig::to_argv() const {
    std::vector<std::string> out{family_name(family), command_name(command), "--n",
                                 std::to_string(n)};
    if (!alphas.empty()) {
        out.push_back("--alphas");
        out.push_back(join_complex(alphas, ','));
    }
    auto opt = [&](const std::optional<Rational>& v, const char* flag) {
        if (v) {
            out.push_back(flag);
            out.push_back(v->str());
        }
    };
    opt(a, "--a");
    opt(b, "--b");
    opt(c, "--c");
    opt(q, "--q");
    opt(V, "--V");
    opt(alpha, "--alpha");
    opt(beta, "--beta");
    if (!cmatrix.empty()) {
        std::string s;
        for (size_t r = 0; r < cmatrix.size(); ++r) {
            if (r) s += ';';
            s += join_complex(cmatrix[r], ',');
        }
        out.push_back("--cmatrix");
        out.push_back(s);
    }
    if (z0) {
        out.push_back("--z0");
        out.push_back(z0->str());
    }
    out.push_back("--prec");
    out.push_back(std::to_string(prec));
    out.push_back("--format");
    out.push_back(format == OutputFormat::Json ? "json" : "csv");
    if (printed_formulas) out.push_back("--printed-formulas");
    if (!output.empty()) {
        out.push_back("--output");
        out.push_back(output);
    }
    return out;
}

bool RunConfig::operator==(const RunConfig& o) const {
    return family == o.family && command == o.command && n == o.n && prec == o.prec &&
           format == o.format && printed_formulas == o.printed_formulas && output == o.output &&
           alphas == o.alphas && a == o.a && b == o.b && c == o.c && q == o.q && V == o.V &&
           alpha == o.alpha && beta == o.beta && z0 == o.z0 && cmatrix == o.cmatrix;
}

RunConfig parse_args(const std::vector<std::string>& args) {
    CLI::App app{"exact closed-form verification for generalized Hilbert matrices", "ghm"};
    std::string family_s, command_s, alphas_s, a_s, b_s, c_s, q_s, V_s, alpha_s, beta_s, z0_s,
        cmatrix_s, format_s = "json", output_s;
    int n = 0;
    long prec = BigFloat::kDefaultPrec;
    bool printed = false;

    app.add_option("family", family_s, "matrix family: muntz|gmuntz|lommel|askey|synthetic")
        ->required();
    app.add_option("command", command_s, "matrix|det|inverse|bound|eigen|verify")->required();
    app.add_option("--n", n, "matrix order (size is n+1)")->required();
    app.add_option("--alphas", alphas_s, "comma-separated exponents (complex rationals)");
    app.add_option("--a", a_s);
    app.add_option("--b", b_s);
    app.add_option("--c", c_s);
    app.add_option("--q", q_s);
    app.add_option("--V", V_s, "q^(nu+1) as an independent rational in (0,1)");
    app.add_option("--alpha", alpha_s);
    app.add_option("--beta", beta_s);
    app.add_option("--z0", z0_s, "unit-modulus evaluation point for the circle bound");
    app.add_option("--cmatrix", cmatrix_s,
                   "lower-triangular connection rows, ';'-separated, entries ','-separated");
    app.add_option("--prec", prec, "working precision in bits (default 256)");
    app.add_option("--format", format_s, "json|csv");
    app.add_flag("--printed-formulas", printed,
                 "also evaluate the closed forms exactly as published and report discrepancies");
    app.add_option("--output", output_s, "output path (default stdout)");

    std::vector<std::string> argv_store{"ghm"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(argv_store.size());
    for (const auto& s : argv_store) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    RunConfig cfg;
    cfg.family = parse_family(family_s);
    cfg.command = parse_command(command_s);
    cfg.n = n;
    cfg.prec = prec;
    cfg.printed_formulas = printed;
    cfg.output = output_s;
    if (format_s == "json")
        cfg.format = OutputFormat::Json;
    else if (format_s == "csv")
        cfg.format = OutputFormat::Csv;
    else
        throw UsageError("unknown format: \"" + format_s + "\"");

    try {
        if (!alphas_s.empty()) cfg.alphas = parse_complex_list(alphas_s);
        auto opt = [](const std::string& s) {
            return s.empty() ? std::optional<Rational>() : std::optional<Rational>(Rational::parse(s));
        };
        cfg.a = opt(a_s);
        cfg.b = opt(b_s);
        cfg.c = opt(c_s);
        cfg.q = opt(q_s);
        cfg.V = opt(V_s);
        cfg.alpha = opt(alpha_s);
        cfg.beta = opt(beta_s);
        if (!z0_s.empty()) cfg.z0 = ComplexRational::parse(z0_s);
        if (!cmatrix_s.empty())
            for (const auto& row : split(cmatrix_s, ';')) cfg.cmatrix.push_back(parse_complex_list(row));
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }

    cfg.validate();
    return cfg;
}

} // namespace ghm
