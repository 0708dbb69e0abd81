#include <doctest.h>

#include "cmlg/emit.hpp"
#include "support.hpp"

using namespace cmlg;
using nlohmann::json;

TEST_CASE("model documents round-trip") {
    for (const Datum& d : sweep(6)) {
        CAPTURE(datum_name(d));
        const MinusculePoset P(d);
        const Superpotential W = assemble_superpotential(P);
        const json doc = model_json(P, W, {});
        CHECK(json::parse(doc.dump()) == doc);
        const Superpotential back = superpotential_from_json(P, json::parse(doc.dump(2)));
        REQUIRE(back.terms.size() == W.terms.size());
        for (size_t t = 0; t < W.terms.size(); ++t) {
            CHECK(back.terms[t].index == W.terms[t].index);
            CHECK(back.terms[t].quantum == W.terms[t].quantum);
            CHECK(back.terms[t].numerator == W.terms[t].numerator);
            CHECK(back.terms[t].denominator == W.terms[t].denominator);
        }
    }
}

TEST_CASE("model document layout") {
    const MinusculePoset P(make_datum("A", 1, 1));
    const Superpotential W = assemble_superpotential(P);
    const json doc = model_json(P, W, verify_model(P, W, {}).checks);
    for (const char* key : {"datum", "poset", "terms", "checks"}) CHECK(doc.contains(key));
    CHECK(doc["poset"] == json::parse(R"([{"id":0,"label":1,"covers":[]}])"));
    CHECK(doc["terms"][1]["quantum"] == true);
    CHECK(doc["terms"][1]["numerator"] == json::parse(R"([{"coeff":1,"q":1,"factors":[[]]}])"));
    CHECK(doc["terms"][1]["denominator"] == json::parse(R"([{"coeff":1,"q":0,"factors":[[0]]}])"));
    CHECK_FALSE(doc["checks"].empty());
}

TEST_CASE("malformed documents are rejected") {
    const MinusculePoset P(make_datum("A", 2, 1));
    json doc = model_json(P, assemble_superpotential(P), {});
    doc["terms"][0]["denominator"][0]["factors"][0] = json::array({1});  // not an ideal
    CHECK_THROWS_AS(superpotential_from_json(P, doc), std::invalid_argument);
    CHECK_THROWS_AS(superpotential_from_json(P, json::object()), std::invalid_argument);
    const MinusculePoset Q(make_datum("A", 2, 2));
    CHECK_THROWS_AS(superpotential_from_json(Q, model_json(P, assemble_superpotential(P), {})), std::invalid_argument);
}

TEST_CASE("output is deterministic") {
    const MinusculePoset P(make_datum("E6", 6, 6));
    const Superpotential W = assemble_superpotential(P);
    const MinusculePoset P2(make_datum("E6", 6, 6));
    const Superpotential W2 = assemble_superpotential(P2);
    CHECK(model_json(P, W, {}).dump() == model_json(P2, W2, {}).dump());
    CHECK(model_text(P, W, {}) == model_text(P2, W2, {}));
    CHECK(model_latex(P, W) == model_latex(P2, W2));
}

TEST_CASE("text rendering") {
    const MinusculePoset P(make_datum("A", 1, 1));
    const std::string t = model_text(P, assemble_superpotential(P), {});
    CHECK(t.find("W = sum of 2 terms") != std::string::npos);
    CHECK(t.find("[0]  (p[0]) / (p[])") != std::string::npos);
    CHECK(t.find("[1] (quantum)  (q*p[]) / (p[0])") != std::string::npos);
    const MinusculePoset Q(make_datum("D", 4, 1));
    CHECK(model_text(Q, assemble_superpotential(Q), {}).find("W = sum of 5 terms") != std::string::npos);
}

TEST_CASE("box layouts draw the Hasse diagram") {
    for (const Datum& d : sweep(7)) {
        CAPTURE(datum_name(d));
        const MinusculePoset P(d);
        const auto L = find_box_layout(P);
        REQUIRE(L.has_value());
        if (d.rank > 9) continue;
        const auto rows = layout_elements(P, layout_strings(P, *L));
        REQUIRE(rows.size() == L->rows.size());
        for (size_t r = 0; r < rows.size(); ++r)
            for (size_t j = 0; j < rows[r].size(); ++j) CHECK(rows[r][j] == L->rows[r][j].second);
    }
}

TEST_CASE("latex uses young diagrams") {
    const MinusculePoset P(make_datum("C", 3, 3));
    const std::string tex = model_latex(P, assemble_superpotential(P));
    CHECK(tex.find("\\young(") != std::string::npos);
    CHECK(tex.find("\\varnothing") != std::string::npos);
    CHECK(tex.find("\\frac") != std::string::npos);
}

TEST_CASE("poset dumps") {
    const MinusculePoset P(make_datum("C", 4, 4));
    CHECK(poset_json(P).size() == 10);
    CHECK(poset_dot(P).find("digraph") == 0);
    const MovePoset mp = generate_move_poset(P, 2);
    const json j = move_poset_json(P, mp);
    CHECK(j["states"].size() == 4);
    CHECK(j["graded"] == true);
    CHECK(move_poset_text(P, mp).find("4 states") != std::string::npos);
    CHECK(move_poset_dot(P, mp).find("s0 -> s1") != std::string::npos);
}
