#ifndef ZETAVER_VERIFY_HPP
#define ZETAVER_VERIFY_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zetaver/ingest.hpp"
#include "zetaver/special_value.hpp"
#include "zetaver/tables.hpp"

namespace zv {

enum class check_kind { order, special_value, fe_consistency, duality, tables_check, detstar, rank_order };

const char* check_name(check_kind c);
std::optional<check_kind> check_from_name(const std::string& s);

enum class check_status { pass, fail, unresolved_symbolic };

struct VerificationJob {
    std::optional<NumberFieldRecord> field;
    std::optional<VarietyRecord> variety;
    long twist_lo = -3, twist_hi = 3;
    std::set<check_kind> checks; // empty = all applicable
    mpfr_prec_t precision = 128;
    double tolerance = 1e-20;

    void validate() const;
};

struct ReportEntry {
    std::string target;
    long n = 0;
    check_kind check = check_kind::order;
    check_status status = check_status::pass;
    std::string detail;                                   // one-line summary
    std::vector<std::pair<std::string, std::string>> values; // named values, exact as "p/q"
    mpfr_prec_t precision = 0;
    std::string radius; // final ball radius where applicable
    std::string provenance;
};

struct Report {
    std::string target;
    mpfr_prec_t precision = 0;
    double tolerance = 0;
    std::vector<ReportEntry> entries;
    bool pass = true;

    std::string to_text() const;
    std::string to_json() const;
};

// Runs every requested check for every twist, one task per (target, twist),
// in a small worker pool; entry order is deterministic.
Report run_verification(const VerificationJob& job);

} // namespace zv

#endif
