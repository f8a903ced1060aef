#ifndef ZETAVER_TABLES_HPP
#define ZETAVER_TABLES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zetaver/number_field.hpp"

namespace zv {

// Symbolic torsion factors appearing in the cohomology tables.
enum class torsion_symbol {
    z2,              // (Z/2)^multiplicity
    class_group,     // Cl(O_F), order h_1
    class_group_dual,
    unit_torsion,    // mu_F, order w_1
    unit_torsion_dual,
    h_symbol,        // H^{2,m}, order h_m
    h_symbol_dual,
    w_symbol,        // H^{1,m}_tor, order w_m
    w_symbol_dual,
    arakelov_class,  // Cl(Xbar): opaque, never resolved numerically
};

struct TorsionFactor {
    torsion_symbol kind;
    long twist = 0;        // m for h_m / w_m style symbols
    long multiplicity = 1; // copies (exponent for z2)
    std::optional<mpz_class> order; // numeric order of one copy, when resolvable
    std::string str() const;
};

struct GroupDescriptor {
    long rank = 0;
    std::vector<TorsionFactor> torsion;
    long compact_dim = 0; // connected compact factor (Arakelov theories)
    std::optional<mpz_class> named_order; // product of torsion orders when all numeric
    bool is_zero() const { return rank == 0 && torsion.empty() && compact_dim == 0; }
    std::string str() const;
};

enum class theory { weil, arakelov, arakelov_compact };

struct CohomologyTable {
    theory th;
    long twist;
    long r1, r2;
    std::map<long, GroupDescriptor> entries; // zero entries omitted
    std::map<long, long> rtilde_dim;         // dim_R of the R~(twist) groups
    long min_degree = 0, max_degree = 0;     // window where entries may live

    const GroupDescriptor& at(long i) const;
    long rank(long i) const { return at(i).rank; }
    std::string str() const;
};

struct TableContext {
    long r1 = 1, r2 = 0;
    std::optional<KTheoryData> K; // resolves h_m, w_m (and Cl, mu via m = 1)
};

CohomologyTable build_table(theory th, const TableContext& ctx, long n);
std::vector<CohomologyTable> cohomology_tables(const NumberFieldRecord& F, long n);

// Euler characteristic sum (-1)^i * i * dim_R H^i_{ar,c}(R~(n)).
long table_order_route(const TableContext& ctx, long n);

// Closed-form rho_n and the table route; they must agree.
long vanishing_order_prediction(const NumberFieldRecord& F, long n);
long vanishing_order_prediction(const TableContext& ctx, long n);

// Rank/torsion symmetry of the compactified Weil-etale tables:
//   rank H^i(n) = rank H^{3-i}(1-n),
//   torsion H^i(n) = Pontryagin dual of torsion H^{4-i}(1-n).
struct DualityReport {
    long n = 0;
    long degrees_checked = 0;
    bool pass = false;
    std::vector<std::string> lines;
};
DualityReport duality_check(const TableContext& ctx, long n, long deg_lo = -6, long deg_hi = 9);
DualityReport duality_check(const NumberFieldRecord& F, long n);

} // namespace zv

#endif
