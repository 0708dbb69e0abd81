#include <doctest.h>

#include <algorithm>

#include "cmlg/toric.hpp"
#include "support.hpp"

using namespace cmlg;
using cmlg::test::Drawing;

namespace {

std::vector<int> unit(int n, int b) {
    std::vector<int> e(n, 0);
    e[b] = 1;
    return e;
}

}  // namespace

TEST_CASE("laurent arithmetic") {
    const int n = 3;
    const auto a = LaurentPolynomial::monomial(unit(n, 0)), b = LaurentPolynomial::monomial(unit(n, 1));
    LaurentPolynomial s = a;
    s += b;
    LaurentPolynomial d = a;
    d -= b;
    LaurentPolynomial sq = a * a;
    sq -= b * b;
    CHECK(s * d == sq);
    LaurentPolynomial z = s;
    z -= s;
    CHECK(z.is_zero());
    const auto inv = LaurentPolynomial::monomial({-1, 0, 0});
    CHECK(a.divided_by_monomial(a) == LaurentPolynomial::one(n));
    CHECK(LaurentPolynomial::one(n).divided_by_monomial(a) == inv);
    CHECK_THROWS(a.divided_by_monomial(s));
    CHECK_THROWS(LaurentPolynomial::monomial({200, 0, 0}));
}

TEST_CASE("restrictions of the extreme Pluecker coordinates") {
    for (const Datum& d : sweep(6)) {
        const MinusculePoset P(d);
        const ToricRestriction R(P);
        CHECK(R.plucker(P.ideal_id(P.empty_set())) == LaurentPolynomial::one(P.size()));
        const auto full = R.plucker(P.ideal_id(P.full_set()));
        CHECK(full == LaurentPolynomial::monomial(std::vector<int>(P.size(), 1)));
        PluckerPolynomial prod;
        prod.add(PMonomial{0, {P.ideal_id(P.empty_set()), P.ideal_id(P.full_set())}}, 1);
        CHECK(R.polynomial(prod) == full);
    }
}

TEST_CASE("restrictions count embeddings") {
    const MinusculePoset P(make_datum("C", 5, 5));
    const ToricRestriction R(P);
    for (size_t id = 0; id < P.ideals().size(); ++id) {
        const auto& r = R.plucker(static_cast<int>(id));
        mpz_class total = 0;
        for (const auto& t : r.sorted_terms()) total += t.coeff;
        CHECK(total == static_cast<long>(P.embeddings(P.ideals()[id]).size()));
    }
}

TEST_CASE("expected minor monomial of LG(4,8), i*=2") {
    const MinusculePoset P(make_datum("C", 4, 4));
    const Drawing D(P, test::kLG48);
    // product of the indicator vectors of the two displayed ideals
    std::vector<int> want(P.size(), 0);
    for (const ElemSet& s : {D.shape({1, 2}), D.shape({1, 2, 2, 2})})
        for (int b : P.elements(s)) ++want[b];
    CHECK(expected_minor_monomial(P, 2) == want);
    CHECK(*std::max_element(want.begin(), want.end()) == 2);
}

TEST_CASE("expected minor monomial of E7, i*=4") {
    const MinusculePoset P(make_datum("E7", 7, 7));
    const auto e = expected_minor_monomial(P, 4);
    CHECK(*std::max_element(e.begin(), e.end()) == 4);
    CHECK(*std::min_element(e.begin(), e.end()) == 0);
}

TEST_CASE("verification of small models") {
    for (const char* fam : {"A", "D"}) {
        const Datum d = fam[0] == 'A' ? make_datum("A", 3, 2) : make_datum("D", 4, 1);
        const MinusculePoset P(d);
        const auto rep = verify_model(P, assemble_superpotential(P), {true, true});
        for (const auto& c : rep.checks) {
            CAPTURE(c.name);
            CAPTURE(c.istar);
            CAPTURE(c.detail);
            CHECK(c.pass);
        }
        CHECK(rep.all_pass());
    }
}

TEST_CASE("the leading Pluecker coordinate is a monomial") {
    for (const Datum& d : sweep(7)) {
        const MinusculePoset P(d);
        const ToricRestriction R(P);
        for (int i = 1; i <= d.rank; ++i) {
            if (i == d.node) continue;
            const auto seq = P.ideal_sequence(i);
            CHECK(R.plucker(P.ideal_id(seq[seq.size() - 2])).is_monomial());
        }
    }
}
