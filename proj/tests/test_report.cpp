#include "doctest.h"

#include <sstream>

#include "scatlab/report.hpp"

using namespace scatlab;

TEST_CASE("element and polynomial serialization") {
    Field F(3, 1, 6);
    Elem a = F.element(7); // digits 1,2,0,...
    json ja = elem_json(F, a);
    CHECK(ja == json({1, 2, 0, 0, 0, 0}));
    CHECK(F.from_coords(ja.get<std::vector<uint32_t>>()) == a);

    QPoly f = qpoly_monomial(F, 1, F.one());
    json jf = qpoly_json(f);
    REQUIRE(jf.size() == 6);
    CHECK(jf[1] == json({1, 0, 0, 0, 0, 0}));

    json ff = field_json(F);
    CHECK(ff["p"] == 3);
    CHECK(ff["q"] == 3);
    CHECK(ff["mu"].size() == 7);
}

TEST_CASE("family spec serialization carries the parameters") {
    Field F(5, 1, 6);
    FamilySpec tri{FamilyTag::tri, 1, F.from_int(2), {}};
    json jt = famspec_json(F, tri);
    CHECK(jt["tag"] == "tri");
    CHECK(jt["b"] == json({2, 0, 0, 0, 0, 0}));
    CHECK(!jt.contains("delta"));

    FamilySpec lp{FamilyTag::lp, 1, {}, F.generator()};
    json jl = famspec_json(F, lp);
    CHECK(jl["tag"] == "lp");
    CHECK(jl["s"] == 1);
    CHECK(jl.contains("delta"));
}

TEST_CASE("report validation catches structural defects") {
    json rep;
    rep["schema_version"] = kSchemaVersion;
    rep["command"] = "verify-scattered";
    rep["seed"] = 12345u;
    rep["threads"] = 1u;
    Field F(3, 1, 6);
    rep["field"] = field_json(F);
    rep["params"] = json::object();
    rep["results"] = json::object();
    rep["timing"] = {{"timestamp", "2026-01-01T00:00:00Z"}, {"elapsed_ms", 1.5}};
    CHECK(validate_report(rep).empty());

    // the suite report spans several fields and omits the field block
    json suite;
    suite["schema_version"] = kSchemaVersion;
    suite["command"] = "suite";
    suite["seed"] = 1u;
    suite["threads"] = 1u;
    suite["results"] = json::object();
    suite["timing"] = rep["timing"];
    CHECK(validate_report(suite).empty());

    json bad = rep;
    bad.erase("field");
    CHECK(!validate_report(bad).empty());
    bad = rep;
    bad["schema_version"] = "something-else";
    CHECK(!validate_report(bad).empty());
    bad = rep;
    bad["timing"].erase("timestamp");
    CHECK(!validate_report(bad).empty());
}

TEST_CASE("csv writers") {
    Field F(3, 1, 6);
    LinearSet L = linear_set(qpoly_monomial(F, 2, F.one()));
    std::ostringstream os;
    write_weight_histogram_csv(os, L);
    CHECK(os.str() == "weight,points\n2,91\n");

    std::map<uint32_t, uint64_t> spec{{4, 10}, {6, 3}};
    std::ostringstream rs;
    write_rank_spectrum_csv(rs, spec);
    CHECK(rs.str() == "rank,classes\n4,10\n6,3\n");
}

TEST_CASE("witness serialization round trip") {
    Field F(3, 1, 6);
    SemilinearMap w{{F.element(1), F.element(2), F.element(3), F.element(4)}, 2};
    json jw = semimap_json(F, w);
    CHECK(jw["j"] == 2);
    CHECK(F.from_coords(jw["a"].get<std::vector<uint32_t>>()) == F.element(1));
    CHECK(F.from_coords(jw["d"].get<std::vector<uint32_t>>()) == F.element(4));
}
