#include <doctest.h>

#include <stdexcept>

#include "qsd/certify.hpp"
#include "qsd/difference_sets.hpp"

using namespace qsd;

namespace {

// a synthetic certificate consistent with the reference table row for `id`
BiplaneCertificate fake_certificate(const std::string& id) {
    const BiplaneReference* row = nullptr;
    for (const auto& r : biplane_reference_table())
        if (r.id == id) row = &r;
    REQUIRE(row != nullptr);
    BiplaneCertificate c;
    c.biplane_id = id;
    c.design_check = *make_signature(2, 56, 11, 2);
    c.code_dimension = row->dimension;
    c.min_distance.kind = MinDistanceVerdict::Kind::confirmed;
    c.min_distance.claimed = 11;
    c.min_distance.found_weight = 11;
    c.min_distance.witness = GFVector(3, 56);
    c.min_distance.lower_bound = 11;
    c.min_distance.enumerated_up_to = 5;
    c.s_count = row->w12_count;
    c.row_sum_all_two = true;
    c.all_ones_in_row_space = true;
    c.embeddability_all_blocks = true;
    c.table_match = true;
    if (row->w12_count < 165) {
        c.eliminated = true;
        c.elimination_reason = "count-below-165";
    } else {
        CliqueResult cr;
        cr.size = id == "B1" ? 22 : 18;
        cr.witness.resize(cr.size);
        for (std::size_t i = 0; i < cr.size; i++) cr.witness[i] = i;
        cr.proof_mode = CliqueResult::ProofMode::exact_maximum;
        c.clique = cr;
        c.clique_exhaustive = true;
        c.eliminated = true;
        c.elimination_reason = "clique-below-165";
    }
    return c;
}

std::vector<BiplaneCertificate> five_fakes() {
    return {fake_certificate("B1"), fake_certificate("B2"), fake_certificate("B3"),
            fake_certificate("B4"), fake_certificate("B5")};
}

}  // namespace

TEST_CASE("premise registry") {
    CHECK(premise_registry().size() == 3);
    CHECK(premise("hall-connor").id == "hall-connor");
    CHECK(premise("five-biplanes").source.find("Kaski") != std::string::npos);
    CHECK_THROWS_AS(premise("nonsense"), std::out_of_range);
}

TEST_CASE("biplane fingerprints separate the five classes") {
    CHECK(identify_biplane(20, 2100) == std::string("B1"));
    CHECK(identify_biplane(22, 516) == std::string("B2"));
    CHECK(identify_biplane(26, 84) == std::string("B3"));
    CHECK(identify_biplane(24, 148) == std::string("B4"));
    CHECK(identify_biplane(26, 20) == std::string("B5"));
    CHECK_FALSE(identify_biplane(26, 148));
}

TEST_CASE("filter_S_B") {
    std::vector<SupportSet> s = {{{0, 1, 2}, 10}, {{1, 2, 3}, 10}};
    auto f = filter_S_B(s, 0);
    REQUIRE(f.size() == 1);
    CHECK(f[0].coordinates == std::vector<std::size_t>{1, 2, 3});
    CHECK(filter_S_B(s, 9).size() == 2);
    CHECK_THROWS_AS(filter_S_B(s, 10), std::out_of_range);
    // double counting: sum over B of |{s : B in s}| = |S| * w
    std::size_t contained = 0;
    for (std::size_t b = 0; b < 10; b++) contained += s.size() - filter_S_B(s, b).size();
    CHECK(contained == s.size() * 3);
}

TEST_CASE("certify_biplane rejects non-biplane input") {
    auto fano = develop_difference_set({GroupSpec::cyclic(7), {1, 2, 4}});
    CHECK_THROWS_AS(certify_biplane(fano), DataIntegrityError);
}

TEST_CASE("certify_main_theorem combines five certificates") {
    SUBCASE("all five eliminated: both verdicts with premises") {
        auto res = certify_main_theorem(five_fakes());
        CHECK(res.gaps.empty());
        REQUIRE(res.verdicts.size() == 2);
        CHECK(res.verdicts[0].claim_id == "QS-2-(56,12,9)-x0y3");
        CHECK(res.verdicts[1].claim_id == "QS-2-(57,12,11)-x0y3");
        for (const auto& v : res.verdicts) {
            CHECK(v.statement == "does not exist");
            CHECK(std::count(v.premise_ids.begin(), v.premise_ids.end(), "hall-connor") == 1);
            CHECK(std::count(v.premise_ids.begin(), v.premise_ids.end(), "five-biplanes") == 1);
        }
    }
    SUBCASE("missing certificate: explicit gap, no verdicts") {
        auto certs = five_fakes();
        certs.pop_back();
        auto res = certify_main_theorem(certs);
        CHECK(res.verdicts.empty());
        CHECK_FALSE(res.gaps.empty());
    }
    SUBCASE("duplicate ids: no verdicts") {
        auto certs = five_fakes();
        certs[4].biplane_id = "B1";
        auto res = certify_main_theorem(certs);
        CHECK(res.verdicts.empty());
    }
    SUBCASE("tampered certificate is rejected by consistency re-derivation") {
        auto certs = five_fakes();
        certs[2].s_count = 200;  // claims count-below-165 with s_count 200
        auto res = certify_main_theorem(certs);
        CHECK(res.verdicts.empty());
        bool mentioned = false;
        for (const auto& g : res.gaps)
            if (g.find("B3") != std::string::npos) mentioned = true;
        CHECK(mentioned);
    }
    SUBCASE("clique route requires an exhaustive bound") {
        auto certs = five_fakes();
        certs[0].clique_exhaustive = false;
        auto res = certify_main_theorem(certs);
        CHECK(res.verdicts.empty());
    }
    SUBCASE("not eliminated: no verdicts") {
        auto certs = five_fakes();
        certs[1].eliminated = false;
        auto res = certify_main_theorem(certs);
        CHECK(res.verdicts.empty());
    }
}

TEST_CASE("quasi-3 parameter arithmetic") {
    auto d267 = quasi3_block_derived_signature(267, 57, 12);
    REQUIRE(d267);
    CHECK(*d267 == *make_signature(2, 57, 12, 11));
    auto d149 = quasi3_block_derived_signature(149, 37, 9);
    REQUIRE(d149);
    CHECK(*d149 == *make_signature(2, 37, 9, 8));
    CHECK_FALSE(quasi3_block_derived_signature(267, 57, 13));  // inadmissible
    CHECK_FALSE(quasi3_block_derived_signature(56, 12, 9));    // not symmetric
}

TEST_CASE("derive_quasi3_implications") {
    auto main = certify_main_theorem(five_fakes());
    REQUIRE(main.verdicts.size() == 2);
    SUBCASE("both quasi-3 verdicts emitted with the right premises") {
        auto q = derive_quasi3_implications(main.verdicts);
        CHECK(q.gaps.empty());
        REQUIRE(q.verdicts.size() == 2);
        CHECK(q.verdicts[0].claim_id == "quasi3-2-(267,57,12)-x0y3");
        CHECK(q.verdicts[1].claim_id == "quasi3-2-(149,37,9)-x1y3");
        CHECK(q.verdicts[1].premise_ids == std::vector<std::string>{"hmt-37-9-8"});
    }
    SUBCASE("missing dependency blocks only the dependent verdict") {
        auto q = derive_quasi3_implications({});
        REQUIRE(q.verdicts.size() == 1);
        CHECK(q.verdicts[0].claim_id == "quasi3-2-(149,37,9)-x1y3");
        CHECK_FALSE(q.gaps.empty());
    }
}

TEST_CASE("report serialization round trip") {
    CertificateReport r;
    r.toolchain = "test";
    r.premises_used = {premise("hall-connor"), premise("hmt-37-9-8")};
    r.biplanes = five_fakes();
    auto main = certify_main_theorem(r.biplanes);
    r.verdicts = main.verdicts;
    auto q = derive_quasi3_implications(main.verdicts);
    for (auto& v : q.verdicts) r.verdicts.push_back(v);
    r.annotations = {"note"};
    r.total_seconds = 1.25;
    r.per_stage_seconds = {{"B1", 0.5}, {"B2", 0.75}};

    auto text = emit_report(r);
    auto back = parse_report(text);
    CHECK(emit_report(back) == text);

    auto stripped = emit_report_without_timing(r);
    CHECK(stripped.find("timing") == std::string::npos);
    CHECK(stripped.find("total_seconds") == std::string::npos);
    // identical content regardless of timing values
    auto r2 = r;
    r2.total_seconds = 99.0;
    r2.per_stage_seconds = {{"B1", 3.0}};
    CHECK(emit_report_without_timing(r2) == stripped);
}
