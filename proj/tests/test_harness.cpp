#include <doctest.h>

#include <cstdlib>

#include "zetaver/point_count.hpp"
#include "zetaver/verify.hpp"

using namespace zv;

namespace {

std::string data_path(const char* name) { return std::string(ZETAVER_DATA_DIR) + "/" + name; }

std::string q_with_invariants(const char* inv) {
    return std::string(R"({"label":"Q","degree":1,"r1":1,"r2":0,"disc":1,)"
                       R"("characters":[{"modulus":1,"order":1,"values":[[1,0]]}],)"
                       R"("invariants":)") +
           inv + "}";
}

} // namespace

TEST_CASE("field ingestion") {
    NumberFieldRecord Q = ingest_field(data_path("q.json"));
    CHECK(Q.degree() == 1);
    CHECK(Q.invariants()->has(1));

    NumberFieldRecord Qi = ingest_field(data_path("qi.json"));
    CHECK(Qi.abs_disc() == 4);
    CHECK(Qi.characters().size() == 2);

    // signature mismatch
    CHECK_THROWS_AS(ingest_field_json(R"({"label":"bad","degree":3,"r1":1,"r2":0,"disc":5})"), error);
    // conductor-discriminant mismatch (disc perturbed by 1)
    CHECK_THROWS_AS(ingest_field_json(
                        R"({"label":"bad","degree":2,"r1":0,"r2":1,"disc":-3,)"
                        R"("characters":[{"modulus":1,"order":1,"values":[[1,0]]},)"
                        R"({"modulus":4,"order":2,"values":[[1,0],[3,1]]}]})"),
                    error);
    // parity/signature mismatch: odd character on a totally real signature
    CHECK_THROWS_AS(ingest_field_json(
                        R"({"label":"bad","degree":2,"r1":2,"r2":0,"disc":-4,)"
                        R"("characters":[{"modulus":1,"order":1,"values":[[1,0]]},)"
                        R"({"modulus":4,"order":2,"values":[[1,0],[3,1]]}]})"),
                    error);
}

TEST_CASE("variety ingestion") {
    VarietyRecord E = ingest_variety(data_path("e_f5.json"));
    CHECK(E.W.dim_c == 1);
    CHECK(E.hodge.has_value());
    CHECK_THROWS_AS(ingest_variety_json(R"({"label":"bad","q":5,"dim":1,"polys":{"0":[1,-2]}})"), error);
}

TEST_CASE("verification run over Q passes every check") {
    VerificationJob job;
    job.field = ingest_field(data_path("q.json"));
    job.twist_lo = -3;
    job.twist_hi = 3;
    job.precision = 128;
    Report rep = run_verification(job);
    CHECK(rep.pass);
    bool saw_fail = false;
    for (auto& e : rep.entries) saw_fail |= (e.status == check_status::fail);
    CHECK(!saw_fail);
}

TEST_CASE("verification run over E/F5") {
    VerificationJob job;
    job.variety = ingest_variety(data_path("e_f5.json"));
    job.twist_lo = 0;
    job.twist_hi = 1;
    job.checks = {check_kind::order, check_kind::detstar, check_kind::rank_order};
    Report rep = run_verification(job);
    CHECK(rep.pass);
    CHECK(rep.entries.size() == 6);
}

TEST_CASE("reports are deterministic") {
    VerificationJob job;
    job.field = ingest_field(data_path("qi.json"));
    job.twist_lo = -2;
    job.twist_hi = 2;
    Report a = run_verification(job);
    Report b = run_verification(job);
    CHECK(a.to_json() == b.to_json());
    CHECK(a.to_text() == b.to_text());
}

TEST_CASE("precision escalation keeps passing with smaller radii") {
    VerificationJob job;
    job.field = ingest_field(data_path("qsqrt5.json"));
    job.twist_lo = 2;
    job.twist_hi = 2;
    job.checks = {check_kind::order};
    job.precision = 128;
    Report lo = run_verification(job);
    job.precision = 256;
    Report hi = run_verification(job);
    CHECK(lo.pass);
    CHECK(hi.pass);
    REQUIRE(!lo.entries.empty());
    REQUIRE(!hi.entries.empty());
    double rlo = std::strtod(lo.entries[0].radius.c_str(), nullptr);
    double rhi = std::strtod(hi.entries[0].radius.c_str(), nullptr);
    CHECK(rhi < rlo);
}

TEST_CASE("negative control: fabricated h flips the special-value check") {
    NumberFieldRecord bad = ingest_field_json(q_with_invariants(R"({"2":{"h":999,"w":24,"R":1}})"));
    VerificationJob job;
    job.field = bad;
    job.twist_lo = 2;
    job.twist_hi = 2;
    job.checks = {check_kind::special_value};
    Report rep = run_verification(job);
    CHECK(!rep.pass);
}

TEST_CASE("negative control: perturbed w flips the class-number check") {
    for (const char* inv : {R"({"1":{"h":1,"w":3,"R":1}})", R"({"1":{"h":1,"w":5,"R":1}})"}) {
        std::string text = std::string(R"x({"label":"Qi","degree":2,"r1":0,"r2":1,"disc":-4,)x"
                                       R"x("characters":[{"modulus":1,"order":1,"values":[[1,0]]},)x"
                                       R"x({"modulus":4,"order":2,"values":[[1,0],[3,1]]}],"invariants":)x") +
                           inv + "}";
        NumberFieldRecord bad = ingest_field_json(text);
        VerificationJob job;
        job.field = bad;
        job.twist_lo = 1;
        job.twist_hi = 1;
        job.checks = {check_kind::special_value};
        Report rep = run_verification(job);
        CHECK(!rep.pass);
    }
}

TEST_CASE("negative control: perturbed trace disagrees with the point count") {
    WeilPolySet truth = curve_weil_data(parse_curve("y^2 = x^3 + x"), 5, "E");
    for (long a : {1L, 3L}) {
        std::string text = std::string(R"({"label":"E","q":5,"dim":1,"polys":{"0":[1,-1],)") +
                           "\"1\":[1," + std::to_string(-a) + ",5],\"2\":[1,-5]}}";
        VarietyRecord fake = ingest_variety_json(text);
        CHECK(!(fake.W.polys.at(1) == truth.polys.at(1)));
    }
}
