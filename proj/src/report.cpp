#include "ghm/report.hpp"

#include <json.hpp>

#include <functional>

namespace ghm {

namespace {

using Rows = std::vector<std::vector<ComplexRational>>;

Rows to_rows(const ExactMatrix& m) {
    Rows rows(static_cast<size_t>(m.size()));
    for (int r = 0; r < m.size(); ++r) {
        rows[static_cast<size_t>(r)].resize(static_cast<size_t>(m.size()));
        for (int c = 0; c < m.size(); ++c) rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = m.at(r, c);
    }
    return rows;
}

bool hankel_real(const ExactMatrix& h) {
    for (int j = 0; j < h.size(); ++j)
        for (int k = 0; k < h.size(); ++k) {
            if (!h.at(j, k).is_real()) return false;
            if (j > 0 && k + 1 < h.size() && h.at(j, k) != h.at(j - 1, k + 1)) return false;
        }
    return true;
}

// per-family hooks for the shared one-basis pipeline
struct FamilyContext {
    OrthoSystemSpec sys;
    std::function<ComplexRational(int, int)> entry;      // empty: H defined by the factorization
    std::function<ComplexRational(int)> closed_det;
    std::function<ComplexRational(int, int, int)> closed_inverse;
    std::function<BoundValue(int, long)> closed_bound;   // throws outside the pd regime
    bool pd = false;
    std::optional<ComplexRational> default_z0;
    std::function<void(GramReport&, const RunConfig&, const ExactMatrix&)> errata;
    std::function<void(GramReport&, const RunConfig&)> cross_checks;
};

Rational bound_rational(const BoundEntry& e) {
    return e.exact ? *e.exact : e.value->to_rational();
}

void certify_bounds(GramReport& rep, bool corollary_aligned) {
    if (!rep.bounds_computed || !rep.lambda) return;
    auto certify = [&](BoundEntry& e, bool must_hold, const char* name) {
        if (!e.applicable) return;
        e.certified = bound_rational(e) <= rep.lambda->lo;
        if (must_hold && !e.certified) {
            rep.bounds_certified = false;
            rep.warnings.push_back(std::string(name) + " exceeds the certified eigenvalue enclosure");
        }
    };
    certify(rep.b1, true, "norm bound b1");
    certify(rep.b2, true, "norm bound b2");
    certify(rep.family_bound, true, "family bound");
    certify(rep.corollary, corollary_aligned, "circle bound");
    certify(rep.cd, corollary_aligned, "Christoffel-Darboux bound");

    if (rep.cd.applicable && rep.corollary.applicable) {
        // the two routes must agree to relative 2^-(prec/2)
        Rational cdv = bound_rational(rep.cd), cov = bound_rational(rep.corollary);
        Rational diff = (cdv - cov).abs();
        if (diff > cov.abs() * Rational(2).pow(-rep.prec / 2)) {
            rep.bounds_certified = false;
            rep.warnings.push_back("Christoffel-Darboux route disagrees with the circle bound");
        }
    }
}

void run_one_basis(const RunConfig& cfg, GramReport& rep, const FamilyContext& ctx) {
    const int n = cfg.n;
    bool engine_ok = true;
    std::optional<ExactMatrix> h_store;
    try {
        h_store = moment_matrix(ctx.sys, n);
    } catch (const DomainError& e) {
        if (!ctx.entry) throw;
        engine_ok = false;
        rep.warnings.push_back(std::string("factored construction unavailable: ") + e.what());
        ExactMatrix hd(n + 1);
        for (int j = 0; j <= n; ++j)
            for (int k = 0; k <= n; ++k) hd.at(j, k) = ctx.entry(j, k);
        h_store = hd;
    }
    const ExactMatrix& h = *h_store;

    if (engine_ok && ctx.entry) {
        ExactMatrix hd(n + 1);
        for (int j = 0; j <= n; ++j)
            for (int k = 0; k <= n; ++k) hd.at(j, k) = ctx.entry(j, k);
        rep.entries_consistent = (hd == h);
        if (!rep.entries_consistent)
            rep.warnings.push_back("factored construction disagrees with the entry formula");
    }
    rep.entries = to_rows(h);

    const Command cmd = cfg.command;
    const bool want_det = cmd == Command::Det || cmd == Command::Verify;
    const bool want_inv = cmd == Command::Inverse || cmd == Command::Verify;
    const bool want_bounds = cmd == Command::Bound || cmd == Command::Verify;
    const bool want_eigen = want_bounds || cmd == Command::Eigen;

    if (want_det) {
        ComplexRational closed{ctx.closed_det(n)};
        if (cfg.inject_mismatch) closed += ComplexRational(1);
        ComplexRational oracle = bareiss_det(h);
        bool match = closed == oracle;
        if (engine_ok) {
            ClosedDeterminants cd = closed_determinants(ctx.sys, n);
            match = match && cd.moment == oracle && ComplexRational(cd.gram) == oracle;
        }
        rep.det = GramReport::DetBlock{closed, oracle, match};
    }

    if (want_inv) {
        ExactMatrix closed(n + 1);
        for (int j = 0; j <= n; ++j)
            for (int k = 0; k <= n; ++k) closed.at(j, k) = ctx.closed_inverse(n, j, k);
        ExactMatrix oracle = exact_inverse(h);
        bool match = closed == oracle && h * closed == ExactMatrix::identity(n + 1);
        if (engine_ok) match = match && factored_inverse(ctx.sys, n) == oracle;
        rep.inverse = GramReport::InverseBlock{to_rows(closed), to_rows(oracle), match};
    }

    bool corollary_aligned = false;
    if (want_bounds) {
        if (!engine_ok) {
            rep.warnings.push_back("bounds unavailable without the factored construction");
        } else {
            rep.bounds_computed = true;
            CoefficientBounds cb = coefficient_bounds(ctx.sys, n, cfg.prec);
            rep.b1 = {true, cb.b1_exact, cb.b1, false};
            rep.b2 = {true, cb.b2_exact, cb.b2, false};
            if (ctx.pd) {
                BoundValue fb = ctx.closed_bound(n, cfg.prec);
                rep.family_bound = {true, fb.exact, fb.value, false};
            } else {
                rep.warnings.push_back("family bound skipped: outside the positive definite regime");
            }
            std::optional<ComplexRational> z0 = cfg.z0 ? cfg.z0 : ctx.default_z0;
            if (z0) {
                CircleBound ub = unit_circle_bound(ctx.sys, n, *z0, cfg.prec);
                rep.corollary = {true, ub.exact, ub.value, false};
                corollary_aligned = ub.aligned;
                if (!ub.aligned)
                    rep.warnings.push_back(
                        "circle bound reported but not certified: sign alignment fails at z0");
                if (!hankel_real(h)) {
                    rep.warnings.push_back(
                        "Christoffel-Darboux bound requires a real Hankel moment matrix");
                } else if (!ctx.sys.order_available(n + 1)) {
                    rep.warnings.push_back(
                        "Christoffel-Darboux bound needs generators through order n+1");
                } else {
                    try {
                        CdBound cd = christoffel_darboux_bound(ctx.sys, n, *z0, cfg.prec);
                        rep.cd = {true, cd.exact, cd.value, false};
                    } catch (const DomainError& e) {
                        rep.warnings.push_back(std::string("Christoffel-Darboux bound unavailable: ") +
                                               e.what());
                    }
                }
            } else {
                rep.warnings.push_back(
                    "circle bound skipped: no z0 given and no default for complex exponents");
            }
        }
    }

    if (want_eigen && engine_ok) {
        EigenvalueEnclosure enc = smallest_eigenvalue(h, cfg.prec);
        rep.lambda = GramReport::Lambda{enc.lo, enc.hi, enc.value};
    } else if (want_eigen) {
        rep.warnings.push_back("eigenvalue enclosure unavailable without the factored construction");
    }

    certify_bounds(rep, corollary_aligned);

    if (cfg.printed_formulas && cmd == Command::Verify && ctx.errata) ctx.errata(rep, cfg, h);
    if (cmd == Command::Verify && ctx.cross_checks) ctx.cross_checks(rep, cfg);
}

void compare_matrix_forms(GramReport& rep, const std::string& formula, int n,
                          const std::function<ComplexRational(int, int)>& published,
                          const std::function<ComplexRational(int, int)>& implemented,
                          bool lower_triangular, const std::string& note) {
    Erratum err{formula, "", "", true, note};
    for (int j = 0; j <= n && err.agrees; ++j)
        for (int k = 0; k <= (lower_triangular ? j : n); ++k) {
            ComplexRational pub = published(j, k), act = implemented(j, k);
            if (pub != act) {
                err.agrees = false;
                err.printed = pub.str();
                err.implemented = act.str();
                err.note += (err.note.empty() ? "" : "; ") + std::string("first difference at (") +
                            std::to_string(j) + "," + std::to_string(k) + ")";
                break;
            }
        }
    if (err.agrees) {
        err.printed = "(all entries equal)";
        err.implemented = "(all entries equal)";
    }
    rep.errata.push_back(std::move(err));
}

FamilyContext make_muntz_context(const RunConfig& cfg) {
    muntz::Params p{cfg.alphas};
    p.validate();
    FamilyContext ctx;
    ctx.sys = muntz::system(p);
    ctx.entry = [p](int j, int k) { return muntz::entry(p, j, k); };
    ctx.closed_det = [p](int n) { return ComplexRational(muntz::closed_det(p, n)); };
    ctx.closed_inverse = [p](int n, int j, int k) { return muntz::closed_inverse_entry(p, n, j, k); };
    ctx.closed_bound = [p](int n, long prec) { return muntz::closed_bound(p, n, prec); };
    ctx.pd = p.pd_mode();
    if (p.all_real()) ctx.default_z0 = ComplexRational(Rational(-1));
    ctx.errata = [p](GramReport& rep, const RunConfig& c, const ExactMatrix&) {
        OrthoSystemSpec sys = muntz::system(p);
        compare_matrix_forms(
            rep, "muntz_coefficient_denominator_range", c.n,
            [&](int r, int k) { return muntz::published_coefficient(p, r, k); },
            [&](int r, int k) { return sys.coeff_core(r, k); }, true,
            "published product stops at n-1; the orthogonality check needs it to run to n");
        compare_matrix_forms(
            rep, "muntz_inverse_denominator_range", c.n,
            [&](int j, int k) { return muntz::published_inverse_entry(p, c.n, j, k); },
            [&](int j, int k) { return muntz::closed_inverse_entry(p, c.n, j, k); }, false,
            "published products stop at m-1 and flip the entry sign");
    };
    return ctx;
}

FamilyContext make_gmuntz_context(const RunConfig& cfg) {
    gmuntz::Params p{*cfg.a, *cfg.b, *cfg.c, cfg.alphas};
    p.validate();
    FamilyContext ctx;
    ctx.sys = gmuntz::system(p);
    ctx.entry = [p](int j, int k) { return gmuntz::entry(p, j, k); };
    ctx.closed_det = [p](int n) { return ComplexRational(gmuntz::closed_det(p, n)); };
    ctx.closed_inverse = [p](int n, int j, int k) { return gmuntz::closed_inverse_entry(p, n, j, k); };
    ctx.closed_bound = [p](int n, long prec) { return gmuntz::closed_bound(p, n, prec); };
    ctx.pd = p.pd_mode();
    if (p.all_real()) ctx.default_z0 = ComplexRational(Rational(-1));
    ctx.errata = [p](GramReport& rep, const RunConfig& c, const ExactMatrix&) {
        OrthoSystemSpec sys = gmuntz::system(p);
        compare_matrix_forms(
            rep, "gmuntz_coefficient_denominator_range", c.n,
            [&](int r, int k) { return gmuntz::published_coefficient(p, r, k); },
            [&](int r, int k) { return sys.coeff_core(r, k); }, true,
            "published product stops at n-1");
        compare_matrix_forms(
            rep, "gmuntz_inverse_denominator_range", c.n,
            [&](int j, int k) { return gmuntz::published_inverse_entry(p, c.n, j, k); },
            [&](int j, int k) { return gmuntz::closed_inverse_entry(p, c.n, j, k); }, false,
            "published products stop at m-1");
    };
    return ctx;
}

FamilyContext make_lommel_context(const RunConfig& cfg) {
    lommel::Params p{*cfg.q, *cfg.V};
    p.validate();
    FamilyContext ctx;
    ctx.sys = lommel::system(p);
    ctx.closed_det = [p](int n) { return ComplexRational(lommel::closed_det(p, n)); };
    ctx.closed_inverse = [p](int n, int j, int k) {
        return ComplexRational(lommel::closed_inverse_entry(p, n, j, k));
    };
    ctx.closed_bound = [p](int n, long prec) { return lommel::closed_bound(p, n, prec); };
    ctx.pd = true; // (q, V) in (0,1)^2 is the positive definite regime
    ctx.default_z0 = ComplexRational(Rational(-1));
    ctx.errata = [p](GramReport& rep, const RunConfig& c, const ExactMatrix& h) {
        Rational pub = lommel::published_det(p, c.n);
        Rational act = lommel::closed_det(p, c.n);
        ComplexRational oracle = bareiss_det(h);
        rep.errata.push_back({"lommel_determinant_published_form", pub.str(), act.str(),
                              ComplexRational(pub) == oracle,
                              "published form carries 2^-n(n+1), an unsquared Pochhammer product "
                              "and a q exponent six times too large"});
        Rational pub_bound = lommel::published_bound_denominator(p, c.n).inverse();
        Rational act_bound = *lommel::closed_bound(p, c.n, c.prec).exact;
        rep.errata.push_back({"lommel_bound_published_exponent", pub_bound.str(), act_bound.str(),
                              pub_bound == act_bound,
                              "published exponent l(2n+1) vs l(2l+1); the two agree for n <= 1"});
    };
    return ctx;
}

FamilyContext make_askey_context(const RunConfig& cfg) {
    askey::Params p{*cfg.alpha, *cfg.beta, *cfg.q};
    p.validate(cfg.n);
    FamilyContext ctx;
    ctx.sys = askey::system(p);
    ctx.entry = [p](int j, int k) { return ComplexRational(askey::entry(p, j, k)); };
    ctx.closed_det = [p](int n) { return ComplexRational(askey::closed_det(p, n)); };
    ctx.closed_inverse = [p](int n, int j, int k) {
        return ComplexRational(askey::closed_inverse_entry(p, n, j, k));
    };
    ctx.closed_bound = [p](int n, long prec) { return askey::closed_bound(p, n, prec); };
    ctx.pd = p.pd_mode();
    ctx.default_z0 = ComplexRational(Rational(-1));
    ctx.errata = [p](GramReport& rep, const RunConfig& c, const ExactMatrix&) {
        compare_matrix_forms(
            rep, "askey_inverse_published_weights", c.n,
            [&](int j, int k) { return ComplexRational(askey::published_inverse_entry(p, c.n, j, k)); },
            [&](int j, int k) { return ComplexRational(askey::closed_inverse_entry(p, c.n, j, k)); },
            false,
            "published summand weight 1/((ab;q)_2m (ab q^(m-1);q)_m) is inconsistent with the "
            "orthonormal norms");
        if (p.pd_mode()) {
            const int digits = decimal_digits_for(c.prec);
            BigFloat pub = askey::published_bound(p, c.n, c.prec);
            BoundValue act = askey::closed_bound(p, c.n, c.prec);
            BigFloat diff = abs(sub(pub, act.value, c.prec, Round::Nearest), c.prec, Round::Nearest);
            BigFloat tol = mul(act.value, BigFloat::pow2(-c.prec / 2, c.prec), c.prec, Round::Nearest);
            rep.errata.push_back({"askey_bound_published_prefactor", pub.decimal(digits),
                                  act.value.decimal(digits), diff.cmp(tol) <= 0,
                                  "published prefactor (ab;q)_inf/(alpha;q)_inf sits on the wrong "
                                  "side of the norm; its reciprocal makes the bound valid"});
        }
    };
    ctx.cross_checks = [p](GramReport& rep, const RunConfig& c) {
        if (!p.pd_mode()) return;
        const BigFloat tol = BigFloat::pow2(-c.prec / 2, c.prec);
        // moment ratio series vs the closed ratio
        for (int m = 1; m <= 2 * c.n; ++m) {
            BigFloat series = askey::moment_ratio_series(m, p, c.prec);
            BigFloat exact = BigFloat::from_rational(askey::moment_ratio(m, p), c.prec, Round::Nearest);
            BigFloat diff = abs(sub(series, exact, c.prec, Round::Nearest), c.prec, Round::Nearest);
            if (diff.cmp(mul(exact, tol, c.prec, Round::Nearest)) > 0) {
                rep.cross_checks_ok = false;
                rep.warnings.push_back("moment series cross-check failed at index " +
                                       std::to_string(m));
            }
        }
        // cancelled bound vs the infinite-product route
        BoundValue act = askey::closed_bound(p, c.n, c.prec);
        BigFloat inf = askey::infinite_product_bound(p, c.n, c.prec);
        BigFloat diff = abs(sub(inf, act.value, c.prec, Round::Nearest), c.prec, Round::Nearest);
        if (diff.cmp(mul(act.value, tol, c.prec, Round::Nearest)) > 0) {
            rep.cross_checks_ok = false;
            rep.warnings.push_back("infinite-product bound cross-check failed");
        }
    };
    return ctx;
}

void run_synthetic(const RunConfig& cfg, GramReport& rep) {
    const int n = cfg.n;
    ExactMatrix c_full(static_cast<int>(cfg.cmatrix.size()));
    for (int r = 0; r < c_full.size(); ++r)
        for (int k = 0; k <= r; ++k)
            c_full.at(r, k) = cfg.cmatrix[static_cast<size_t>(r)][static_cast<size_t>(k)];
    muntz::Params base{cfg.alphas};
    synthetic::Params p{base, c_full};
    p.validate();
    OrthoSystemSpec sys = synthetic::system(p);

    ExactMatrix h = moment_matrix(sys, n);
    rep.entries = to_rows(h);

    const Command cmd = cfg.command;
    if (cmd == Command::Det || cmd == Command::Verify) {
        ClosedDeterminants cd = closed_determinants(sys, n);
        ComplexRational closed = cd.moment;
        if (cfg.inject_mismatch) closed += ComplexRational(1);
        ComplexRational oracle = bareiss_det(h);
        rep.det = GramReport::DetBlock{closed, oracle, closed == oracle};
    }
    if (cmd == Command::Inverse || cmd == Command::Verify) {
        ExactMatrix closed = factored_inverse(sys, n);
        ExactMatrix oracle = exact_inverse(h);
        bool match = closed == oracle && h * closed == ExactMatrix::identity(n + 1);
        rep.inverse = GramReport::InverseBlock{to_rows(closed), to_rows(oracle), match};
    }
    if (cmd == Command::Verify) {
        // recover the one-basis Gram matrix and check the determinant relation
        ExactMatrix c_n = c_full.leading(n + 1);
        ExactMatrix g = recover_gram(h, c_n);
        ExactMatrix g_expected = moment_matrix(muntz::system(base), n);
        ClosedDeterminants cd = closed_determinants(sys, n);
        ComplexRational conn_det(1);
        for (int j = 0; j <= n; ++j) conn_det *= c_n.at(j, j).conj();
        rep.reconstruction_ok = g == g_expected && ComplexRational(cd.gram) == bareiss_det(g) &&
                                cd.moment == ComplexRational(cd.gram) * conn_det &&
                                g * c_n.conj_transpose() == h;
        if (!rep.reconstruction_ok)
            rep.warnings.push_back("Gram recovery or determinant relation failed");
        rep.warnings.push_back("coefficient bounds are not applicable to a two-basis system");
    }
}

} // namespace

bool GramReport::ok() const {
    if (!errors.empty() || !entries_consistent || !reconstruction_ok || !cross_checks_ok)
        return false;
    if (det && !det->match) return false;
    if (inverse && !inverse->match) return false;
    if (bounds_computed && !bounds_certified) return false;
    return true;
}

GramReport run(const RunConfig& cfg) {
    cfg.validate();
    GramReport rep;
    rep.family = family_name(cfg.family);
    rep.command = command_name(cfg.command);
    rep.n = cfg.n;
    rep.prec = cfg.prec;
    try {
        switch (cfg.family) {
            case Family::Muntz: run_one_basis(cfg, rep, make_muntz_context(cfg)); break;
            case Family::GMuntz: run_one_basis(cfg, rep, make_gmuntz_context(cfg)); break;
            case Family::Lommel: run_one_basis(cfg, rep, make_lommel_context(cfg)); break;
            case Family::Askey: run_one_basis(cfg, rep, make_askey_context(cfg)); break;
            case Family::Synthetic: run_synthetic(cfg, rep); break;
        }
    } catch (const InvalidParamsError& e) {
        rep.errors.push_back(e.what());
    } catch (const Error& e) {
        rep.errors.push_back(e.what());
    }
    return rep;
}

namespace {

nlohmann::ordered_json rows_json(const Rows& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
        for (const auto& v : row) jrow.push_back(v.str());
        arr.push_back(std::move(jrow));
    }
    return arr;
}

nlohmann::ordered_json bound_json(const BoundEntry& e, int digits) {
    if (!e.applicable || !e.value) return nullptr;
    return e.value->decimal(digits);
}

} // namespace

std::string emit_report(const GramReport& rep, OutputFormat format) {
    const int digits = decimal_digits_for(rep.prec);
    if (format == OutputFormat::Json) {
        nlohmann::ordered_json j;
        j["family"] = rep.family;
        j["command"] = rep.command;
        j["n"] = rep.n;
        j["precision"] = rep.prec;
        j["entries"] = rep.entries ? rows_json(*rep.entries) : nlohmann::ordered_json(nullptr);
        if (rep.det) {
            j["det"] = {{"closed", rep.det->closed.str()},
                        {"oracle", rep.det->oracle.str()},
                        {"match", rep.det->match}};
        } else {
            j["det"] = nullptr;
        }
        if (rep.inverse) {
            j["inverse"] = {{"closed", rows_json(rep.inverse->closed)},
                            {"oracle", rows_json(rep.inverse->oracle)},
                            {"match", rep.inverse->match}};
        } else {
            j["inverse"] = nullptr;
        }
        if (rep.bounds_computed) {
            j["bounds"] = {{"b1", bound_json(rep.b1, digits)},
                           {"b2", bound_json(rep.b2, digits)},
                           {"family", bound_json(rep.family_bound, digits)},
                           {"corollary", bound_json(rep.corollary, digits)},
                           {"cd", bound_json(rep.cd, digits)},
                           {"certified", rep.bounds_certified}};
        } else {
            j["bounds"] = nullptr;
        }
        if (rep.lambda) {
            j["lambda_s"] = {{"lo", rep.lambda->lo.str()},
                             {"hi", rep.lambda->hi.str()},
                             {"approx", rep.lambda->value.decimal(digits)}};
        } else {
            j["lambda_s"] = nullptr;
        }
        nlohmann::ordered_json errata = nlohmann::ordered_json::array();
        for (const auto& e : rep.errata)
            errata.push_back({{"formula", e.formula},
                              {"printed", e.printed},
                              {"implemented", e.implemented},
                              {"agrees", e.agrees},
                              {"note", e.note}});
        j["errata"] = std::move(errata);
        j["errors"] = rep.errors;
        j["warnings"] = rep.warnings;
        return j.dump(2) + "\n";
    }

    // CSV: key,value rows; matrix entries flattened row-major as key,j,k,value
    std::string out;
    auto kv = [&](const std::string& k, const std::string& v) { out += k + "," + v + "\n"; };
    kv("family", rep.family);
    kv("command", rep.command);
    kv("n", std::to_string(rep.n));
    kv("precision", std::to_string(rep.prec));
    auto matrix_rows = [&](const std::string& key, const Rows& rows) {
        for (size_t r = 0; r < rows.size(); ++r)
            for (size_t c = 0; c < rows[r].size(); ++c)
                out += key + "," + std::to_string(r) + "," + std::to_string(c) + "," +
                       rows[r][c].str() + "\n";
    };
    if (rep.entries) matrix_rows("entry", *rep.entries);
    if (rep.det) {
        kv("det_closed", rep.det->closed.str());
        kv("det_oracle", rep.det->oracle.str());
        kv("det_match", rep.det->match ? "true" : "false");
    }
    if (rep.inverse) {
        matrix_rows("inverse_closed", rep.inverse->closed);
        matrix_rows("inverse_oracle", rep.inverse->oracle);
        kv("inverse_match", rep.inverse->match ? "true" : "false");
    }
    if (rep.bounds_computed) {
        auto bv = [&](const std::string& k, const BoundEntry& e) {
            if (e.applicable && e.value) kv(k, e.value->decimal(digits));
        };
        bv("bound_b1", rep.b1);
        bv("bound_b2", rep.b2);
        bv("bound_family", rep.family_bound);
        bv("bound_corollary", rep.corollary);
        bv("bound_cd", rep.cd);
        kv("bounds_certified", rep.bounds_certified ? "true" : "false");
    }
    if (rep.lambda) {
        kv("lambda_lo", rep.lambda->lo.str());
        kv("lambda_hi", rep.lambda->hi.str());
        kv("lambda_approx", rep.lambda->value.decimal(digits));
    }
    for (const auto& e : rep.errata)
        out += "erratum," + e.formula + "," + e.printed + "," + e.implemented + "," +
               (e.agrees ? "true" : "false") + "\n";
    for (const auto& e : rep.errors) kv("error", e);
    for (const auto& w : rep.warnings) kv("warning", w);
    return out;
}

int exit_code_for(const GramReport& rep) {
    if (!rep.errors.empty()) return 2;
    return rep.ok() ? 0 : 1;
}

} // namespace ghm
