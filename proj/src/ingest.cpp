#include "zetaver/ingest.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace zv {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::schema, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

namespace {

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(errc::schema, "malformed JSON");
    return j;
}

long get_long(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        fail(errc::schema, std::string("missing or non-integer field: ") + key);
    return j[key].get<long>();
}

ball parse_ball_value(const json& v, mpfr_prec_t prec) {
    if (v.is_number_integer()) return ball::from_si(v.get<long>(), prec);
    if (v.is_string()) return ball::from_decimal(v.get<std::string>(), prec);
    if (v.is_number_float()) {
        std::ostringstream os;
        os.precision(17);
        os << v.get<double>();
        return ball::from_decimal(os.str(), prec);
    }
    fail(errc::schema, "invariant R must be an integer or a decimal string");
}

} // namespace

NumberFieldRecord ingest_field_json(const std::string& text) {
    json j = parse(text);
    std::string label = j.value("label", std::string("field"));
    long degree = get_long(j, "degree");
    long r1 = get_long(j, "r1");
    long r2 = get_long(j, "r2");
    if (!j.contains("disc")) fail(errc::schema, "missing disc");
    mpz_class disc;
    if (j["disc"].is_number_integer()) disc = mpz_class(j["disc"].get<long>());
    else if (j["disc"].is_string()) disc = mpz_class(j["disc"].get<std::string>());
    else fail(errc::schema, "disc must be an integer");

    std::vector<DirichletCharacter> chars;
    if (j.contains("characters")) {
        if (!j["characters"].is_array()) fail(errc::schema, "characters must be a list");
        for (auto& cj : j["characters"]) {
            long modulus = get_long(cj, "modulus");
            long order = get_long(cj, "order");
            if (!cj.contains("values") || !cj["values"].is_array())
                fail(errc::schema, "character needs a values list");
            std::map<long, long> exps;
            for (auto& pair : cj["values"]) {
                if (!pair.is_array() || pair.size() != 2)
                    fail(errc::schema, "character value rows are [a, k]");
                exps[pair[0].get<long>()] = pair[1].get<long>();
            }
            chars.emplace_back(modulus, order, std::move(exps));
        }
    }

    std::optional<KTheoryData> K;
    if (j.contains("invariants")) {
        if (!j["invariants"].is_object()) fail(errc::schema, "invariants must be an object");
        KTheoryData kd;
        for (auto& [key, val] : j["invariants"].items()) {
            long n = std::stol(key);
            KTheoryData::Entry e;
            e.h = mpz_class(get_long(val, "h"));
            e.w = mpz_class(get_long(val, "w"));
            if (!val.contains("R")) fail(errc::schema, "invariant entry needs R");
            e.R = parse_ball_value(val["R"], 192);
            if (e.h <= 0 || e.w <= 0) fail(errc::schema, "invariant orders must be positive");
            if (!(e.R.sign() > 0)) fail(errc::schema, "regulator must be positive");
            kd.entries.emplace(n, std::move(e));
        }
        K = std::move(kd);
    }
    return NumberFieldRecord(label, degree, r1, r2, disc, std::move(chars), std::move(K));
}

NumberFieldRecord ingest_field(const std::string& path) {
    return ingest_field_json(read_file(path));
}

VarietyRecord ingest_variety_json(const std::string& text) {
    json j = parse(text);
    VarietyRecord rec;
    rec.W.label = j.value("label", std::string("variety"));
    rec.W.q = mpz_class(get_long(j, "q"));
    rec.W.dim_c = get_long(j, "dim");
    if (!j.contains("polys") || !j["polys"].is_object()) fail(errc::schema, "missing polys");
    for (auto& [key, coeffs] : j["polys"].items()) {
        long i = std::stol(key);
        if (!coeffs.is_array()) fail(errc::schema, "poly coefficients must be a list");
        std::vector<mpz_class> c;
        for (auto& x : coeffs) {
            if (x.is_number_integer()) c.emplace_back(x.get<long>());
            else if (x.is_string()) c.emplace_back(x.get<std::string>());
            else fail(errc::schema, "poly coefficients must be integers");
        }
        rec.W.polys.emplace(i, ipoly(std::move(c)));
    }
    if (j.contains("jordan")) {
        if (!j["jordan"].is_array()) fail(errc::schema, "jordan must be a list");
        for (auto& bj : j["jordan"]) {
            long i = get_long(bj, "i");
            long e = get_long(bj, "e");
            if (!bj.contains("blocks") || !bj["blocks"].is_array())
                fail(errc::schema, "jordan entry needs blocks");
            std::vector<long> blocks;
            for (auto& b : bj["blocks"]) blocks.push_back(b.get<long>());
            rec.W.jordan[{i, e}] = std::move(blocks);
        }
    }
    if (j.contains("hodge")) {
        if (!j["hodge"].is_object()) fail(errc::schema, "hodge must be an object");
        HodgeNumbersFp H;
        for (auto& [key, v] : j["hodge"].items()) {
            auto comma = key.find(',');
            if (comma == std::string::npos) fail(errc::schema, "hodge keys look like \"i,j\"");
            long i = std::stol(key.substr(0, comma));
            long jj = std::stol(key.substr(comma + 1));
            long dim = v.get<long>();
            if (dim < 0) fail(errc::schema, "negative hodge number");
            if (dim > 0) H.hij[{i, jj}] = dim;
        }
        rec.hodge = std::move(H);
    }
    rec.W.validate();
    return rec;
}

VarietyRecord ingest_variety(const std::string& path) {
    return ingest_variety_json(read_file(path));
}

} // namespace zv
