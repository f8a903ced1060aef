#include "zetaver/verify.hpp"

#include <future>
#include <sstream>

#include <json.hpp>

#include "zetaver/quadratic.hpp"

namespace zv {

const char* check_name(check_kind c) {
    switch (c) {
    case check_kind::order: return "order";
    case check_kind::special_value: return "special-value";
    case check_kind::fe_consistency: return "fe-consistency";
    case check_kind::duality: return "duality";
    case check_kind::tables_check: return "tables";
    case check_kind::detstar: return "detstar";
    case check_kind::rank_order: return "rank-order";
    }
    return "?";
}

std::optional<check_kind> check_from_name(const std::string& s) {
    for (check_kind c : {check_kind::order, check_kind::special_value, check_kind::fe_consistency,
                         check_kind::duality, check_kind::tables_check, check_kind::detstar,
                         check_kind::rank_order})
        if (s == check_name(c)) return c;
    return std::nullopt;
}

void VerificationJob::validate() const {
    if (!field && !variety) fail(errc::schema, "job needs a field or a variety target");
    if (precision < 64) fail(errc::schema, "precision must be >= 64");
    if (!(tolerance > 0 && tolerance < 1)) fail(errc::schema, "tolerance must lie in (0, 1)");
    if (twist_lo > twist_hi) fail(errc::schema, "empty twist range");
}

namespace {

std::string radius_str(const ball& b) {
    char* r = nullptr;
    mpfr_asprintf(&r, "%.2Re", b.rad());
    std::string s(r);
    mpfr_free_str(r);
    return s;
}

bool wants(const VerificationJob& job, check_kind c) {
    return job.checks.empty() || job.checks.count(c);
}

ReportEntry failed_entry(const std::string& target, long n, check_kind c, const std::string& why) {
    ReportEntry e;
    e.target = target;
    e.n = n;
    e.check = c;
    e.status = check_status::fail;
    e.detail = why;
    return e;
}

std::optional<KTheoryData::Entry> pick_k_data(const NumberFieldRecord& F, long twist, mpfr_prec_t prec) {
    if (F.invariants() && F.invariants()->has(twist)) return F.invariants()->at(twist);
    if (twist == 1) {
        // independent oracle route for the class number formula
        if (F.degree() == 1) {
            KTheoryData::Entry e;
            e.h = 1;
            e.w = 2;
            e.R = ball::from_si(1, prec);
            return e;
        }
        if (F.degree() == 2 && F.abs_disc().fits_slong_p()) {
            QuadraticInvariants qi = quadratic_invariants(F.disc().get_si(), prec);
            KTheoryData::Entry e;
            e.h = qi.h;
            e.w = qi.w;
            e.R = qi.R;
            return e;
        }
    }
    return std::nullopt;
}

std::vector<ReportEntry> run_field_twist(const VerificationJob& job, const NumberFieldRecord& F, long n) {
    std::vector<ReportEntry> out;
    const std::string target = F.label();
    mpfr_prec_t prec = job.precision;

    if (wants(job, check_kind::order)) {
        try {
            long rho = vanishing_order_prediction(F, n);
            LeadingTaylor lt = dedekind_zeta_leading(F, n, prec);
            ReportEntry e;
            e.target = target;
            e.n = n;
            e.check = check_kind::order;
            e.status = check_status::pass;
            e.detail = "closed form, Euler-characteristic table route and analytic order all equal " +
                       std::to_string(rho);
            e.values = {{"rho", std::to_string(rho)}, {"leading", lt.coeff_str()}};
            e.precision = prec;
            if (!lt.exact()) e.radius = radius_str(lt.to_ball(prec));
            e.provenance = "rho closed form; ar-compact Euler characteristic; zeta leading data";
            out.push_back(std::move(e));
        } catch (const error& err) {
            out.push_back(failed_entry(target, n, check_kind::order, err.what()));
        }
    }
    if (wants(job, check_kind::tables_check)) {
        try {
            auto tables = cohomology_tables(F, n);
            ReportEntry e;
            e.target = target;
            e.n = n;
            e.check = check_kind::tables_check;
            e.status = check_status::pass;
            e.detail = "tables constructed; degree windows and rank patterns verified";
            for (auto& T : tables) e.values.emplace_back("table", T.str());
            e.precision = prec;
            e.provenance = "cohomology tables";
            out.push_back(std::move(e));
        } catch (const error& err) {
            out.push_back(failed_entry(target, n, check_kind::tables_check, err.what()));
        }
    }
    if (wants(job, check_kind::duality)) {
        try {
            DualityReport rep = duality_check(F, n);
            ReportEntry e;
            e.target = target;
            e.n = n;
            e.check = check_kind::duality;
            e.status = check_status::pass;
            e.detail = "rank i <-> 3-i and torsion i <-> 4-i symmetry over " +
                       std::to_string(rep.degrees_checked) + " degrees against twist " + std::to_string(1 - n);
            e.precision = prec;
            e.provenance = "compactified Weil-etale duality";
            out.push_back(std::move(e));
        } catch (const error& err) {
            out.push_back(failed_entry(target, n, check_kind::duality, err.what()));
        }
    }
    if (wants(job, check_kind::special_value)) {
        try {
            ClosedForm cf = special_value_closed_form(F.degree(), F.r1(), F.r2(), n);
            std::optional<KTheoryData::Entry> K = pick_k_data(F, cf.k_twist, prec);
            FundamentalLineReport rep = special_value_prediction(F, n, K, prec, job.tolerance);
            ReportEntry e;
            e.target = target;
            e.n = n;
            e.check = check_kind::special_value;
            e.precision = prec;
            e.values.emplace_back("C", rep.correction.get_str());
            e.values.emplace_back("derham_det", rep.derham_det.get_str());
            e.values.emplace_back("closed_form", rep.closed_form.str());
            e.values.emplace_back("analytic_order", std::to_string(rep.analytic_order));
            e.values.emplace_back("analytic", rep.analytic.str());
            e.radius = radius_str(rep.analytic);
            if (rep.predicted_value) {
                e.values.emplace_back("predicted", rep.predicted_value->str());
                std::ostringstream os;
                os.precision(3);
                os << rep.rel_defect;
                e.values.emplace_back("rel_defect", os.str());
                e.status = rep.match ? check_status::pass : check_status::fail;
                e.detail = rep.match ? "|predicted| matches |analytic| within tolerance"
                                     : "prediction defect " + os.str() + " exceeds tolerance";
            } else {
                e.values.emplace_back("solved_hRw", rep.solved_ratio->str());
                if (rep.solved_rational) {
                    e.values.emplace_back("solved_rational", rep.solved_rational->get_str());
                    e.status = check_status::pass;
                    e.detail = "solved h R / w reconstructs to " + rep.solved_rational->get_str();
                } else {
                    e.status = check_status::unresolved_symbolic;
                    e.detail = "no K-theory data; solved h R / w reported symbolically";
                }
            }
            e.provenance = rep.provenance;
            out.push_back(std::move(e));
        } catch (const error& err) {
            out.push_back(failed_entry(target, n, check_kind::special_value, err.what()));
        }
    }
    if (wants(job, check_kind::fe_consistency) && n >= 1) {
        try {
            FeConsistencyReport rep = fe_consistency_check(F, n, prec, job.tolerance);
            ReportEntry e;
            e.target = target;
            e.n = n;
            e.check = check_kind::fe_consistency;
            e.status = (rep.exact_match && rep.analytic_match) ? check_status::pass : check_status::fail;
            std::ostringstream os;
            os.precision(3);
            os << rep.rel_defect;
            e.detail = e.status == check_status::pass
                           ? "prediction ratio matches the functional-equation ratio (exact) and the "
                             "numeric ratio (defect " + os.str() + ")"
                           : "functional-equation consistency failed (defect " + os.str() + ")";
            e.values = {{"predicted_ratio", rep.predicted_str},
                        {"fe_ratio", rep.fe_str},
                        {"numeric_ratio", rep.analytic_str}};
            e.precision = prec;
            e.provenance = "prediction ratio at n and 1-n vs Gamma leading data";
            out.push_back(std::move(e));
        } catch (const error& err) {
            out.push_back(failed_entry(target, n, check_kind::fe_consistency, err.what()));
        }
    }
    return out;
}

std::vector<ReportEntry> run_variety_twist(const VerificationJob& job, const VarietyRecord& V, long n) {
    std::vector<ReportEntry> out;
    const std::string target = V.W.label;
    mpfr_prec_t prec = job.precision;

    if (wants(job, check_kind::order)) {
        try {
            int sign = zeta_functional_equation_sign(V.W);
            OrderLeading ol = order_leading_at(V.W, n);
            ReportEntry e;
            e.target = target;
            e.n = n;
            e.check = check_kind::order;
            e.status = check_status::pass;
            e.detail = "Z functional equation holds (sign " + std::string(sign > 0 ? "+" : "-") +
                       "); ord = " + std::to_string(ol.order) + ", Z* = " + ol.leading.get_str();
            e.values = {{"ord", std::to_string(ol.order)}, {"Zstar", ol.leading.get_str()}};
            RationalFunction Z = zeta_from_weil_polys(V.W);
            e.values.emplace_back("Z", Z.str());
            if (V.hodge) {
                e.values.emplace_back("milne_chi", std::to_string(milne_chi(*V.hodge, n)));
                e.values.emplace_back("C", "1");
            }
            e.precision = prec;
            e.provenance = "Weil polynomial algebra (exact)";
            out.push_back(std::move(e));
        } catch (const error& err) {
            out.push_back(failed_entry(target, n, check_kind::order, err.what()));
        }
    }
    if (wants(job, check_kind::detstar)) {
        try {
            DetStarResult ds = detstar_trivialization(V.W, n);
            ReportEntry e;
            e.target = target;
            e.n = n;
            e.check = check_kind::detstar;
            e.status = check_status::pass;
            std::string flags;
            for (bool b : ds.semisimple) flags += b ? '1' : '0';
            e.detail = ds.all_semisimple
                           ? "Det* = " + ds.value.get_str() + ", equal to the leading value (semisimple)"
                           : "non-semisimple input; Det* over nonzero eigenvalues = " + ds.value.get_str();
            e.values = {{"detstar", ds.value.get_str()}, {"semisimple", flags}};
            e.precision = prec;
            e.provenance = "eigenvalue model vs rational-function limit";
            out.push_back(std::move(e));
        } catch (const error& err) {
            out.push_back(failed_entry(target, n, check_kind::detstar, err.what()));
        }
    }
    if (wants(job, check_kind::rank_order)) {
        try {
            RankOrderReport rr = weil_etale_rank_order(V.W, n);
            ReportEntry e;
            e.target = target;
            e.n = n;
            e.check = check_kind::rank_order;
            e.status = check_status::pass;
            std::string ranks;
            for (std::size_t i = 0; i < rr.ranks.size(); ++i)
                ranks += (i ? "," : "") + std::to_string(rr.ranks[i]);
            e.detail = "ranks (" + ranks + "); weighted sum " + std::to_string(rr.weighted_sum) +
                       " = ord both routes";
            e.values = {{"ranks", ranks},
                        {"ord_multiplicities", std::to_string(rr.ord_from_multiplicities)},
                        {"ord_rational_function", std::to_string(rr.ord_from_rational_function)}};
            e.precision = prec;
            e.provenance = "Weil-etale rank bookkeeping";
            out.push_back(std::move(e));
        } catch (const error& err) {
            out.push_back(failed_entry(target, n, check_kind::rank_order, err.what()));
        }
    }
    return out;
}

} // namespace

Report run_verification(const VerificationJob& job) {
    job.validate();
    Report rep;
    rep.precision = job.precision;
    rep.tolerance = job.tolerance;
    rep.target = job.field ? job.field->label() : job.variety->W.label;

    std::vector<long> twists;
    for (long n = job.twist_lo; n <= job.twist_hi; ++n) twists.push_back(n);
    std::vector<std::future<std::vector<ReportEntry>>> futs;
    futs.reserve(twists.size());
    for (long n : twists)
        futs.push_back(std::async(std::launch::async, [&job, n]() {
            return job.field ? run_field_twist(job, *job.field, n)
                             : run_variety_twist(job, *job.variety, n);
        }));
    for (auto& f : futs)
        for (auto& e : f.get()) {
            if (e.status == check_status::fail) rep.pass = false;
            rep.entries.push_back(std::move(e));
        }
    return rep;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "target: " << target << "  prec: " << precision << "  tol: " << tolerance << "\n";
    for (auto& e : entries) {
        const char* st = e.status == check_status::pass            ? "PASS"
                         : e.status == check_status::fail          ? "FAIL"
                                                                   : "SYMBOLIC";
        os << "[" << st << "] n=" << e.n << " " << check_name(e.check) << ": " << e.detail << "\n";
        for (auto& [k, v] : e.values)
            if (v.find('\n') == std::string::npos) os << "    " << k << " = " << v << "\n";
        if (!e.radius.empty()) os << "    radius = " << e.radius << " (prec " << e.precision << ")\n";
    }
    os << (pass ? "ALL CHECKS PASSED" : "SOME CHECKS FAILED") << "\n";
    return os.str();
}

std::string Report::to_json() const {
    nlohmann::json j;
    j["target"] = target;
    j["precision"] = static_cast<long>(precision);
    j["tolerance"] = tolerance;
    j["pass"] = pass;
    j["entries"] = nlohmann::json::array();
    for (auto& e : entries) {
        nlohmann::json je;
        je["target"] = e.target;
        je["n"] = e.n;
        je["check"] = check_name(e.check);
        je["status"] = e.status == check_status::pass   ? "pass"
                       : e.status == check_status::fail ? "fail"
                                                        : "unresolved-symbolic";
        je["detail"] = e.detail;
        je["precision"] = static_cast<long>(e.precision);
        if (!e.radius.empty()) je["radius"] = e.radius;
        je["provenance"] = e.provenance;
        nlohmann::json vals = nlohmann::json::object();
        for (auto& [k, v] : e.values) {
            if (vals.contains(k)) { // repeated keys become lists
                if (!vals[k].is_array()) vals[k] = nlohmann::json::array({vals[k]});
                vals[k].push_back(v);
            } else {
                vals[k] = v;
            }
        }
        je["values"] = vals;
        j["entries"].push_back(je);
    }
    return j.dump(2) + "\n";
}

} // namespace zv
