#include <doctest.h>

#include "corpus.hpp"
#include "hopfexp/io.hpp"

using namespace hopfexp;
using namespace hopfexp::corpus;

TEST_CASE("documents round-trip bit-exactly for every corpus algebra") {
    for (const auto& [name, h] : standard()) {
        INFO(name);
        AlgebraDocument doc = document_from_algebra(h);
        std::string one = canonical_serialize(doc);
        AlgebraDocument redoc = document_from_json(json::parse(one));
        HopfAlgebra h2 = algebra_from_document(redoc);
        CHECK(h2.mult == h.mult);
        CHECK(h2.comult == h.comult);
        CHECK(h2.antipode == h.antipode);
        CHECK(canonical_serialize(document_from_algebra(h2)) == one);
    }
}

TEST_CASE("canonical serialization is insensitive to triple order") {
    HopfAlgebra h = sweedler_h4(Q());
    AlgebraDocument doc = document_from_algebra(h);
    AlgebraDocument shuffled = doc;
    std::reverse(shuffled.mult.begin(), shuffled.mult.end());
    std::reverse(shuffled.comult.begin(), shuffled.comult.end());
    CHECK(canonical_serialize(doc) == canonical_serialize(shuffled));
    CHECK(document_digest(doc) == document_digest(shuffled));
}

TEST_CASE("missing antipode is derived and matches the closed form") {
    HopfAlgebra h4 = sweedler_h4(Q());
    AlgebraDocument doc = document_from_algebra(h4);
    doc.antipode.reset();
    HopfAlgebra rebuilt = algebra_from_document(doc);
    CHECK(rebuilt.antipode == h4.antipode);
}

TEST_CASE("broken coassociativity is rejected at the gate") {
    HopfAlgebra h = group_algebra(FiniteGroupTable::cyclic(2), Q());
    AlgebraDocument doc = document_from_algebra(h);
    doc.comult.emplace_back(1, 0, 0, FieldElement::one(Q()));
    CHECK_THROWS_AS(algebra_from_document(doc), Error);
    try {
        algebra_from_document(doc);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::AxiomViolation);
    }
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(document_from_json(json::parse("[1,2]")), Error);
    CHECK_THROWS_AS(document_from_json(json::parse(R"({"format_version":2})")), Error);
    json good = document_to_json(document_from_algebra(sweedler_h4(Q())));
    json bad = good;
    bad["mult"][0][3] = "not-a-scalar";
    CHECK_THROWS_AS(document_from_json(bad), Error);
    json bad2 = good;
    bad2["mult"][0][0] = 99;  // index out of range surfaces at algebra construction
    CHECK_THROWS_AS(algebra_from_document(document_from_json(bad2)), Error);
}

TEST_CASE("scalar codecs cover all three fields") {
    CHECK(parse_scalar(json("3/4"), Q()) == FieldElement::from_rational(Q(), mpq_class(3, 4)));
    CHECK(parse_scalar(json(5), F7()) == FieldElement::from_integer(F7(), 5));
    FieldElement z = FieldElement::root_power(Qz3(), 2);
    CHECK(parse_scalar(serialize_scalar(z), Qz3()) == z);
    CHECK_THROWS_AS(parse_scalar(json::array({"1"}), Q()), Error);
    CHECK_THROWS_AS(parse_scalar(json("1/2"), F7()), Error);
}

TEST_CASE("verification reports round-trip") {
    VerificationReport rep;
    rep.subject_digest = "abc";
    rep.checks.push_back({"some check", "exp0(H) = exp(H)", "pass", ""});
    rep.checks.push_back({"other", "", "fail", "witness text"});
    rep.exponents.emplace_back(0, "6");
    rep.exponents.emplace_back(-1, "infinite");
    VerificationReport back = VerificationReport::from_json(rep.to_json());
    CHECK(back.subject_digest == rep.subject_digest);
    CHECK(back.checks.size() == 2);
    CHECK(back.checks[1].witness == "witness text");
    CHECK(!back.all_passed());
    CHECK(back.exponents == rep.exponents);
}

TEST_CASE("field spec strings") {
    CHECK(field_from_spec_string("rational") == Q());
    CHECK(field_from_spec_string("cyclotomic:3") == Qz3());
    CHECK(field_from_spec_string("prime:7") == F7());
    CHECK_THROWS_AS(field_from_spec_string("galois:9"), Error);
    CHECK_THROWS_AS(field_from_spec_string("prime:6"), Error);
}
