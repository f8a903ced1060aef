// Command-line surface: evaluation, order checks, tables, verification jobs,
// the finite-field branch, and the quadratic/point-count oracles.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "zetaver/hodge.hpp"
#include "zetaver/point_count.hpp"
#include "zetaver/quadratic.hpp"
#include "zetaver/verify.hpp"

namespace {

struct CommonOpts {
    long prec = 128;
    double tol = 1e-20;
    std::string n_spec = "0";
    std::string field_path, variety_path, out_path;
    std::string format = "text";
};

std::pair<long, long> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        long v = std::stol(s);
        return {v, v};
    }
    return {std::stol(s.substr(0, dots)), std::stol(s.substr(dots + 2))};
}

void emit(const CommonOpts& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out_path);
    if (!out) zv::fail(zv::errc::schema, "cannot write " + opt.out_path);
    out << text;
}

void add_common(CLI::App* cmd, CommonOpts& opt, bool field, bool variety) {
    cmd->add_option("--prec", opt.prec, "working precision in bits");
    cmd->add_option("--tol", opt.tol, "relative tolerance");
    cmd->add_option("--n", opt.n_spec, "twist or twist range, e.g. 2 or -3..3");
    if (field) cmd->add_option("--field", opt.field_path, "number field record (JSON)");
    if (variety) cmd->add_option("--variety", opt.variety_path, "variety record (JSON)");
    cmd->add_option("--out", opt.out_path, "output path (default stdout)");
    cmd->add_option("--format", opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));
}

int run_job(const CommonOpts& opt, std::set<zv::check_kind> checks) {
    zv::VerificationJob job;
    if (!opt.field_path.empty()) job.field = zv::ingest_field(opt.field_path);
    if (!opt.variety_path.empty()) job.variety = zv::ingest_variety(opt.variety_path);
    auto [lo, hi] = parse_range(opt.n_spec);
    job.twist_lo = lo;
    job.twist_hi = hi;
    job.checks = std::move(checks);
    job.precision = opt.prec;
    job.tolerance = opt.tol;
    zv::Report rep = zv::run_verification(job);
    emit(opt, opt.format == "json" ? rep.to_json() : rep.to_text());
    return rep.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification engine for special values of zeta functions"};
    app.require_subcommand(1);

    CommonOpts eval_opt, order_opt, tables_opt, verify_opt, charp_opt;
    std::string verify_checks;

    auto* eval_cmd = app.add_subcommand("eval", "leading Taylor data of zeta_F at integer points");
    add_common(eval_cmd, eval_opt, true, false);
    bool eval_completed = false;
    eval_cmd->add_flag("--completed", eval_completed, "include the archimedean Gamma factor");

    auto* order_cmd = app.add_subcommand("order", "vanishing orders: closed form, tables, analytic");
    add_common(order_cmd, order_opt, true, false);

    auto* tables_cmd = app.add_subcommand("tables", "Weil-etale / Weil-Arakelov cohomology tables");
    add_common(tables_cmd, tables_opt, true, false);

    auto* verify_cmd = app.add_subcommand("verify", "full verification job");
    add_common(verify_cmd, verify_opt, true, true);
    verify_cmd->add_option("--checks", verify_checks, "comma-separated subset of checks");

    auto* charp_cmd = app.add_subcommand("charp", "finite-field branch checks");
    add_common(charp_cmd, charp_opt, false, true);

    auto* oracle_cmd = app.add_subcommand("oracle", "quadratic invariants and point counts");
    long oracle_disc = 0;
    std::string oracle_curve;
    long oracle_q = 0;
    CommonOpts oracle_opt;
    oracle_cmd->add_option("--disc", oracle_disc, "fundamental discriminant for (h, R, w)");
    oracle_cmd->add_option("--curve", oracle_curve, "curve equation, e.g. \"y^2 = x^3 + x\"");
    oracle_cmd->add_option("--q", oracle_q, "prime field size for the point count");
    oracle_cmd->add_option("--prec", oracle_opt.prec, "working precision in bits");
    oracle_cmd->add_option("--out", oracle_opt.out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);

        if (eval_cmd->parsed()) {
            if (eval_opt.field_path.empty()) zv::fail(zv::errc::schema, "eval needs --field");
            zv::NumberFieldRecord F = zv::ingest_field(eval_opt.field_path);
            auto [lo, hi] = parse_range(eval_opt.n_spec);
            std::ostringstream os;
            for (long n = lo; n <= hi; ++n) {
                zv::LeadingTaylor lt = eval_completed
                                           ? zv::completed_zeta_leading(F, n, eval_opt.prec)
                                           : zv::dedekind_zeta_leading(F, n, eval_opt.prec);
                os << F.label() << (eval_completed ? " completed-zeta" : " zeta") << " at n=" << n
                   << ": order " << lt.order << ", leading " << lt.coeff_str() << "\n";
            }
            emit(eval_opt, os.str());
            return 0;
        }
        if (order_cmd->parsed()) {
            if (order_opt.field_path.empty()) zv::fail(zv::errc::schema, "order needs --field");
            return run_job(order_opt, {zv::check_kind::order});
        }
        if (tables_cmd->parsed()) {
            if (tables_opt.field_path.empty()) zv::fail(zv::errc::schema, "tables needs --field");
            zv::NumberFieldRecord F = zv::ingest_field(tables_opt.field_path);
            auto [lo, hi] = parse_range(tables_opt.n_spec);
            std::ostringstream os;
            for (long n = lo; n <= hi; ++n)
                for (auto& T : zv::cohomology_tables(F, n)) os << T.str();
            emit(tables_opt, os.str());
            return 0;
        }
        if (verify_cmd->parsed()) {
            std::set<zv::check_kind> checks;
            if (!verify_checks.empty()) {
                std::stringstream ss(verify_checks);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    auto c = zv::check_from_name(item);
                    if (!c) zv::fail(zv::errc::schema, "unknown check: " + item);
                    checks.insert(*c);
                }
            }
            return run_job(verify_opt, std::move(checks));
        }
        if (charp_cmd->parsed()) {
            if (charp_opt.variety_path.empty()) zv::fail(zv::errc::schema, "charp needs --variety");
            return run_job(charp_opt, {zv::check_kind::order, zv::check_kind::detstar,
                                       zv::check_kind::rank_order});
        }
        if (oracle_cmd->parsed()) {
            std::ostringstream os;
            if (oracle_disc != 0) {
                zv::QuadraticInvariants qi = zv::quadratic_invariants(oracle_disc, oracle_opt.prec);
                os << "disc " << oracle_disc << ": h = " << qi.h << ", R = " << qi.R.str()
                   << ", w = " << qi.w;
                if (qi.real)
                    os << ", fundamental unit (" << qi.unit_t.get_str() << " + " << qi.unit_u.get_str()
                       << " sqrt(D))/2, norm " << qi.unit_norm;
                os << "\n";
            }
            if (!oracle_curve.empty()) {
                if (oracle_q == 0) zv::fail(zv::errc::schema, "point count needs --q");
                zv::CurveSpec c = zv::parse_curve(oracle_curve);
                zv::PointCountResult pc = zv::point_count_curve(c, oracle_q);
                os << "count over F_" << oracle_q << ": " << pc.count;
                if (pc.p1) os << ", P_1 = " << pc.p1->str();
                os << "\n";
            }
            if (oracle_disc == 0 && oracle_curve.empty())
                zv::fail(zv::errc::schema, "oracle needs --disc or --curve");
            emit(oracle_opt, os.str());
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const zv::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
