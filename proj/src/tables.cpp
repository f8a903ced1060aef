#include "zetaver/tables.hpp"

#include <algorithm>
#include <sstream>

namespace zv {

namespace {
const GroupDescriptor kZero{};

bool is_dual_pair(torsion_symbol a, torsion_symbol b) {
    switch (a) {
    case torsion_symbol::z2: return b == torsion_symbol::z2;
    case torsion_symbol::class_group: return b == torsion_symbol::class_group_dual;
    case torsion_symbol::class_group_dual: return b == torsion_symbol::class_group;
    case torsion_symbol::unit_torsion: return b == torsion_symbol::unit_torsion_dual;
    case torsion_symbol::unit_torsion_dual: return b == torsion_symbol::unit_torsion;
    case torsion_symbol::h_symbol: return b == torsion_symbol::h_symbol_dual;
    case torsion_symbol::h_symbol_dual: return b == torsion_symbol::h_symbol;
    case torsion_symbol::w_symbol: return b == torsion_symbol::w_symbol_dual;
    case torsion_symbol::w_symbol_dual: return b == torsion_symbol::w_symbol;
    case torsion_symbol::arakelov_class: return false;
    }
    return false;
}

std::string symbol_name(const TorsionFactor& t) {
    switch (t.kind) {
    case torsion_symbol::z2: return "(Z/2)^" + std::to_string(t.multiplicity);
    case torsion_symbol::class_group: return "Cl";
    case torsion_symbol::class_group_dual: return "Cl^D";
    case torsion_symbol::unit_torsion: return "mu";
    case torsion_symbol::unit_torsion_dual: return "mu^D";
    case torsion_symbol::h_symbol: return "H^{2," + std::to_string(t.twist) + "}";
    case torsion_symbol::h_symbol_dual: return "(H^{2," + std::to_string(t.twist) + "})^D";
    case torsion_symbol::w_symbol: return "H^{1," + std::to_string(t.twist) + "}_tor";
    case torsion_symbol::w_symbol_dual: return "(H^{1," + std::to_string(t.twist) + "}_tor)^D";
    case torsion_symbol::arakelov_class: return "Cl(Xbar)";
    }
    return "?";
}

void resolve(TorsionFactor& t, const TableContext& ctx) {
    if (!ctx.K) return;
    const auto& K = *ctx.K;
    switch (t.kind) {
    case torsion_symbol::z2:
        t.order = mpz_class(2);
        return;
    case torsion_symbol::class_group:
    case torsion_symbol::class_group_dual:
        if (K.has(1)) t.order = K.at(1).h;
        return;
    case torsion_symbol::unit_torsion:
    case torsion_symbol::unit_torsion_dual:
        if (K.has(1)) t.order = K.at(1).w;
        return;
    case torsion_symbol::h_symbol:
    case torsion_symbol::h_symbol_dual:
        if (K.has(t.twist)) t.order = K.at(t.twist).h;
        return;
    case torsion_symbol::w_symbol:
    case torsion_symbol::w_symbol_dual:
        if (K.has(t.twist)) t.order = K.at(t.twist).w;
        return;
    case torsion_symbol::arakelov_class:
        return; // stays opaque
    }
}

void finish(GroupDescriptor& g, const TableContext& ctx) {
    for (auto it = g.torsion.begin(); it != g.torsion.end();) {
        if (it->multiplicity <= 0) it = g.torsion.erase(it);
        else { resolve(*it, ctx); ++it; }
    }
    bool all = !g.torsion.empty();
    mpz_class prod(1);
    for (auto& t : g.torsion) {
        if (!t.order) { all = false; break; }
        mpz_class p;
        mpz_pow_ui(p.get_mpz_t(), t.order->get_mpz_t(), static_cast<unsigned long>(t.multiplicity));
        prod *= p;
    }
    if (all) g.named_order = prod;
}

// rank of H^{1,m} for m >= 1: rank O_F^x at m = 1, else r2 + r1*delta_{1,m}
long h1_rank(const TableContext& ctx, long m) {
    if (m == 1) return ctx.r1 + ctx.r2 - 1;
    return ctx.r2 + ctx.r1 * delta_parity(1, m);
}

} // namespace

std::string TorsionFactor::str() const {
    std::string s = symbol_name(*this);
    if (kind != torsion_symbol::z2 && multiplicity != 1) s += "^" + std::to_string(multiplicity);
    if (order) s += "[#" + order->get_str() + "]";
    return s;
}

std::string GroupDescriptor::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto sep = [&]() { if (!first) os << " + "; first = false; };
    if (rank > 0) { sep(); os << "Z^" << rank; }
    if (compact_dim > 0) { sep(); os << "compact(dim " << compact_dim << ")"; }
    for (auto& t : torsion) { sep(); os << t.str(); }
    if (named_order) os << "  (torsion order " << named_order->get_str() << ")";
    return os.str();
}

const GroupDescriptor& CohomologyTable::at(long i) const {
    auto it = entries.find(i);
    return it == entries.end() ? kZero : it->second;
}

std::string CohomologyTable::str() const {
    std::ostringstream os;
    const char* names[] = {"H_W(Xbar)", "H_ar(Xbar)", "H_ar_c(X)"};
    os << names[static_cast<int>(th)] << " twist " << twist << " (r1=" << r1 << ", r2=" << r2 << ")\n";
    for (long i = min_degree; i <= max_degree; ++i) {
        if (at(i).is_zero() && !rtilde_dim.count(i)) continue;
        os << "  i=" << i << ": " << at(i).str();
        auto it = rtilde_dim.find(i);
        if (it != rtilde_dim.end() && it->second != 0) os << "   [dim_R R~ = " << it->second << "]";
        os << "\n";
    }
    return os.str();
}

// The compactified Weil-etale table.  Degrees 0 and 1 of the negative-twist
// row carry the 2-torsion blocks forced by the duality theorem (the
// multiplicity at degree j <= 1 is epsilon_{4-j, 1-n}, which agrees with the
// epsilon_{j-1, n} indexing at j < 0).
CohomologyTable build_table(theory th, const TableContext& ctx, long n) {
    CohomologyTable T;
    T.th = th;
    T.twist = n;
    T.r1 = ctx.r1;
    T.r2 = ctx.r2;
    long r1 = ctx.r1, r2 = ctx.r2;
    auto z2 = [&](long mult) {
        TorsionFactor t;
        t.kind = torsion_symbol::z2;
        t.multiplicity = r1 * mult;
        return t;
    };
    auto named = [&](torsion_symbol k, long m) {
        TorsionFactor t;
        t.kind = k;
        t.twist = m;
        return t;
    };

    if (th == theory::weil || th == theory::arakelov) {
        bool ar = th == theory::arakelov;
        if (n > 1) {
            T.min_degree = 1;
            T.max_degree = std::max<long>(3, n);
            GroupDescriptor d1;
            if (ar) {
                d1.torsion.push_back(named(torsion_symbol::w_symbol, n)); // H^{1,n}_tor
            } else {
                d1.rank = h1_rank(ctx, n);
                d1.torsion.push_back(named(torsion_symbol::w_symbol, n));
            }
            T.entries[1] = d1;
            GroupDescriptor d2;
            d2.torsion.push_back(named(torsion_symbol::h_symbol, n));
            if (ar) d2.compact_dim = h1_rank(ctx, n); // coker(r_n)
            T.entries[2] = d2;
            for (long i = 3; i <= T.max_degree; ++i) {
                long e = epsilon_tors(i, n);
                if (e * r1 > 0) T.entries[i].torsion.push_back(z2(e));
            }
        } else if (n == 1) {
            T.min_degree = 1;
            T.max_degree = 3;
            GroupDescriptor d1;
            if (!ar) d1.rank = r1 + r2 - 1; // O_F^x
            d1.torsion.push_back(named(torsion_symbol::unit_torsion, 1));
            T.entries[1] = d1;
            GroupDescriptor d2;
            if (ar) {
                d2.torsion.push_back(named(torsion_symbol::arakelov_class, 1));
                d2.compact_dim = r1 + r2 - 1;
            } else {
                d2.torsion.push_back(named(torsion_symbol::class_group, 1));
            }
            T.entries[2] = d2;
            T.entries[3].rank = 1;
        } else if (n == 0) {
            T.min_degree = 0;
            T.max_degree = 3;
            T.entries[0].rank = 1;
            GroupDescriptor d2;
            d2.rank = r1 + r2 - 1; // (O_F^x)^*
            d2.torsion.push_back(named(torsion_symbol::class_group_dual, 1));
            T.entries[2] = d2;
            T.entries[3].torsion.push_back(named(torsion_symbol::unit_torsion_dual, 1));
        } else { // n < 0
            T.min_degree = std::min<long>(n + 3, 2);
            T.max_degree = 3;
            // negative degrees use the epsilon_{j-1,n} indexing; degrees 0
            // and 1 carry the blocks the duality theorem forces
            for (long j = T.min_degree; j <= 1; ++j) {
                long e = (j < 0) ? epsilon_tors(j - 1, n) : epsilon_tors(4 - j, 1 - n);
                if (e * r1 > 0) T.entries[j].torsion.push_back(z2(e));
            }
            GroupDescriptor d2;
            d2.rank = h1_rank(ctx, 1 - n); // (H^{1,1-n})^*
            d2.torsion.push_back(named(torsion_symbol::h_symbol_dual, 1 - n));
            T.entries[2] = d2;
            T.entries[3].torsion.push_back(named(torsion_symbol::w_symbol_dual, 1 - n));
        }
    } else { // arakelov_compact, on X
        long rho = rho_order(r1, r2, n);
        if (n <= 0) {
            T.min_degree = 1;
            T.max_degree = 3;
            T.entries[1].rank = rho;
            GroupDescriptor d2;
            d2.rank = h1_rank(ctx, 1 - n);
            if (d2.rank != rho) fail(errc::internal, "ar,c degree-2 rank != rho_n");
            d2.torsion.push_back(named(torsion_symbol::h_symbol_dual, 1 - n));
            T.entries[2] = d2;
            T.entries[3].torsion.push_back(named(torsion_symbol::w_symbol_dual, 1 - n));
            T.rtilde_dim[1] = rho;
            T.rtilde_dim[2] = rho;
        } else if (n == 1) {
            T.min_degree = 2;
            T.max_degree = 3;
            GroupDescriptor d2; // extension of R by ((prod_v F_v^x)/O_F^x -> Cl)
            d2.compact_dim = r1 + 2 * r2 - 1;
            d2.torsion.push_back(named(torsion_symbol::class_group, 1));
            T.entries[2] = d2;
            T.entries[3].rank = 1;
            T.rtilde_dim[2] = 1;
            T.rtilde_dim[3] = 1;
        } else { // n >= 2: compact in degrees 2, 3; all R~ dims vanish
            T.min_degree = 2;
            T.max_degree = 3;
            GroupDescriptor d2;
            d2.compact_dim = r1 + 2 * r2;
            d2.torsion.push_back(named(torsion_symbol::h_symbol, n));
            T.entries[2] = d2;
            long e2 = epsilon_tors(2, n);
            if (e2 * r1 > 0) T.entries[3].torsion.push_back(z2(e2));
        }
    }
    for (auto it = T.entries.begin(); it != T.entries.end();) {
        finish(it->second, ctx);
        if (it->second.is_zero()) it = T.entries.erase(it);
        else ++it;
    }
    for (auto& [i, g] : T.entries)
        if (i < T.min_degree || i > T.max_degree)
            fail(errc::invariant_violation, "table entry outside its degree window");
    return T;
}

std::vector<CohomologyTable> cohomology_tables(const NumberFieldRecord& F, long n) {
    TableContext ctx{F.r1(), F.r2(), F.invariants()};
    return {build_table(theory::weil, ctx, n), build_table(theory::arakelov, ctx, n),
            build_table(theory::arakelov_compact, ctx, n)};
}

long table_order_route(const TableContext& ctx, long n) {
    CohomologyTable T = build_table(theory::arakelov_compact, ctx, n);
    long s = 0;
    for (auto& [i, d] : T.rtilde_dim) {
        long sign = (i % 2 == 0) ? 1 : -1;
        s += sign * i * d;
    }
    return s;
}

long vanishing_order_prediction(const TableContext& ctx, long n) {
    long closed = rho_order(ctx.r1, ctx.r2, n);
    long via_table = table_order_route(ctx, n);
    if (closed != via_table)
        fail(errc::order_mismatch, "rho closed form != Euler-characteristic table route");
    return closed;
}

long vanishing_order_prediction(const NumberFieldRecord& F, long n) {
    TableContext ctx{F.r1(), F.r2(), F.invariants()};
    return vanishing_order_prediction(ctx, n);
}

namespace {

// torsion descriptors agree under Pontryagin duality
bool torsion_dual_match(const GroupDescriptor& a, const GroupDescriptor& b, std::string& why) {
    auto canon = [](const GroupDescriptor& g) {
        std::vector<std::pair<std::string, long>> v;
        for (auto& t : g.torsion) {
            std::string key;
            switch (t.kind) {
            case torsion_symbol::z2: key = "z2"; break;
            case torsion_symbol::class_group:
            case torsion_symbol::class_group_dual: key = "cl"; break;
            case torsion_symbol::unit_torsion:
            case torsion_symbol::unit_torsion_dual: key = "mu"; break;
            case torsion_symbol::h_symbol:
            case torsion_symbol::h_symbol_dual: key = "h@" + std::to_string(t.twist); break;
            case torsion_symbol::w_symbol:
            case torsion_symbol::w_symbol_dual: key = "w@" + std::to_string(t.twist); break;
            case torsion_symbol::arakelov_class: key = "clbar"; break;
            }
            v.emplace_back(key, t.multiplicity);
        }
        std::sort(v.begin(), v.end());
        return v;
    };
    // a finite abelian group and its dual share the same symbol up to the
    // dual marker, so compare canonical keys and multiplicities
    if (canon(a) != canon(b)) {
        why = "torsion " + a.str() + " !~ dual of " + b.str();
        return false;
    }
    // the pairing must match duals to non-duals symbol by symbol
    for (auto& ta : a.torsion) {
        bool found = false;
        for (auto& tb : b.torsion)
            if (is_dual_pair(ta.kind, tb.kind) && ta.twist == tb.twist && ta.multiplicity == tb.multiplicity)
                found = true;
        if (!found) {
            why = "no dual partner for " + ta.str();
            return false;
        }
    }
    return true;
}

} // namespace

DualityReport duality_check(const TableContext& ctx, long n, long deg_lo, long deg_hi) {
    DualityReport rep;
    rep.n = n;
    CohomologyTable A = build_table(theory::weil, ctx, n);
    CohomologyTable B = build_table(theory::weil, ctx, 1 - n);
    for (long i = deg_lo; i <= deg_hi; ++i) {
        long ra = A.rank(i);
        long rb = B.rank(3 - i);
        if (ra != rb)
            fail(errc::duality_violation, "rank H^" + std::to_string(i) + "(" + std::to_string(n) +
                                              ") = " + std::to_string(ra) + " != rank H^" + std::to_string(3 - i) +
                                              "(" + std::to_string(1 - n) + ") = " + std::to_string(rb));
        std::string why;
        if (!torsion_dual_match(A.at(i), B.at(4 - i), why))
            fail(errc::duality_violation,
                 "torsion duality fails at degree " + std::to_string(i) + " (twist " + std::to_string(n) + "): " + why);
        ++rep.degrees_checked;
        if (!A.at(i).is_zero() || !B.at(3 - i).is_zero())
            rep.lines.push_back("i=" + std::to_string(i) + ": rank " + std::to_string(ra) + " <-> rank " +
                                std::to_string(rb) + "; torsion <-> dual torsion at " + std::to_string(4 - i));
    }
    rep.pass = true;
    return rep;
}

DualityReport duality_check(const NumberFieldRecord& F, long n) {
    TableContext ctx{F.r1(), F.r2(), F.invariants()};
    return duality_check(ctx, n);
}

} // namespace zv
