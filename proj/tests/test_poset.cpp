#include <doctest.h>

#include <map>

#include "cmlg/poset.hpp"
#include "cmlg/weyl_oracle.hpp"
#include "support.hpp"

using namespace cmlg;
using cmlg::test::Drawing;

namespace {

long binomial(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Sizes of Lambda and of its ideal lattice from the classical formulas.
std::pair<int, long> classical_counts(const Datum& d) {
    const int n = d.rank, k = d.node;
    switch (d.family) {
        case Family::A: return {k * (n + 1 - k), binomial(n + 1, k)};
        case Family::B: return {2 * n - 1, 2L * n};
        case Family::C: return {n * (n + 1) / 2, 1L << n};
        case Family::D:
            if (k == 1) return {2 * n - 2, 2L * n};
            return {n * (n - 1) / 2, 1L << (n - 1)};
        case Family::E6: return {16, 27};
        case Family::E7: return {27, 56};
    }
    return {0, 0};
}

std::map<int, int> label_counts(const MinusculePoset& P, const ElemSet& s) {
    std::map<int, int> m;
    for (int b : P.elements(s)) ++m[P.label(b)];
    return m;
}

}  // namespace

TEST_CASE("poset and ideal counts") {
    for (const Datum& d : sweep(7)) {
        CAPTURE(datum_name(d));
        const MinusculePoset P(d);
        const auto [size, ideals] = classical_counts(d);
        CHECK(P.size() == size);
        CHECK(static_cast<long>(P.ideals().size()) == ideals);
        CHECK(static_cast<long>(P.ideals().size()) == oracle::weyl_orbit_size(d));
    }
    CHECK(MinusculePoset(make_datum("A", 3, 2)).ideals().size() == 6);
    CHECK(MinusculePoset(make_datum("E7", 7, 7)).ideals().size() == 56);
}

TEST_CASE("displayed posets") {
    const MinusculePoset lg(make_datum("C", 4, 4));
    CHECK(label_counts(lg, lg.full_set()) == std::map<int, int>{{1, 1}, {2, 2}, {3, 3}, {4, 4}});
    CHECK_NOTHROW(Drawing(lg, test::kLG48));

    const MinusculePoset q(make_datum("D", 4, 1));
    CHECK_NOTHROW(Drawing(q, test::kQ8));

    const MinusculePoset lg5(make_datum("C", 5, 5));
    CHECK(lg5.size() == 15);
    CHECK_NOTHROW(Drawing(lg5, test::kLG510));
}

TEST_CASE("element ids follow a linear extension") {
    for (const Datum& d : sweep(6)) {
        const MinusculePoset P(d);
        for (int b = 0; b < P.size(); ++b)
            for (int a : P.lower_covers(b)) CHECK(a < b);
    }
}

TEST_CASE("adding boxes") {
    for (const Datum& d : sweep(6)) {
        CAPTURE(datum_name(d));
        const MinusculePoset P(d);
        const auto one = P.add_box(P.empty_set(), d.node);
        REQUIRE(one);
        CHECK(one->count() == 1);
        for (int j = 1; j <= d.rank; ++j) CHECK_FALSE(P.add_box(P.full_set(), j));
        // a box labelled j fits exactly when the weight pairs to -1 with j
        for (const ElemSet& I : P.ideals()) {
            const IntVec w = P.weight(I);
            for (int j = 1; j <= d.rank; ++j) CHECK(P.add_box(I, j).has_value() == (w[j - 1] == -1));
        }
    }
}

TEST_CASE("ideal weights do not depend on the linear extension") {
    for (const Datum& d : sweep(5)) {
        const MinusculePoset P(d);
        for (const ElemSet& I : P.ideals()) {
            std::vector<std::vector<int>> lc;
            std::vector<int> elems = P.elements(I);
            std::map<int, int> local;
            for (size_t t = 0; t < elems.size(); ++t) local[elems[t]] = static_cast<int>(t);
            for (int b : elems) {
                lc.emplace_back();
                for (int a : P.lower_covers(b)) lc.back().push_back(local.at(a));
            }
            for (std::uint32_t seed = 1; seed <= 3; ++seed) {
                std::vector<int> word;
                for (int t : oracle::random_linear_extension(lc, seed)) word.push_back(P.label(elems[t]));
                IntVec start(d.rank, 0);
                start[d.node - 1] = -1;
                CHECK(weyl_apply(P.cartan(), word, start) == P.weight(I));
            }
        }
    }
}

TEST_CASE("embeddings") {
    for (const Datum& d : sweep(6)) {
        const MinusculePoset P(d);
        CHECK(P.embeddings(P.full_set()).size() == 1);
        CHECK(P.embeddings(P.empty_set()).size() == 1);
    }
    const MinusculePoset P(make_datum("C", 5, 5));
    const Drawing D(P, test::kLG510);
    CHECK(P.embeddings(D.shape({1, 2, 3, 2, 2})).size() == 3);
    CHECK(P.embeddings(D.shape({1, 2, 3, 3, 3})).size() == 1);
    // the identity inclusion is always one of them
    for (const ElemSet& I : P.ideals()) {
        bool has_identity = false;
        for (const auto& e : P.embeddings(I)) has_identity = has_identity || e == P.elements(I);
        CHECK(has_identity);
    }
}

TEST_CASE("ideal sequences") {
    const MinusculePoset lg(make_datum("C", 4, 4));
    const Drawing D(lg, test::kLG48);
    const auto seq = lg.ideal_sequence(2);
    REQUIRE(seq.size() == 3);
    CHECK(seq[0] == D.shape({1, 2}));
    CHECK(seq[1] == D.shape({1, 2, 2, 2}));
    CHECK(seq[2] == lg.full_set());

    const MinusculePoset q(make_datum("D", 4, 1));
    const Drawing Q(q, test::kQ8);
    CHECK(q.ideal_sequence(3).front() == Q.shape({3}));

    for (const Datum& d : sweep(7)) {
        const MinusculePoset P(d);
        for (int i = 1; i <= d.rank; ++i)
            if (i != d.node) CHECK(P.ideal_sequence(i).back() == P.full_set());
    }
}

TEST_CASE("quantum ideals") {
    const MinusculePoset lg(make_datum("C", 4, 4));
    const Drawing D(lg, test::kLG48);
    auto [ipp, ip] = lg.quantum_ideals();
    CHECK(ipp == D.shape({1, 1, 1, 1}));
    CHECK(ip == D.shape({1, 2, 3}));

    const MinusculePoset q(make_datum("D", 4, 1));
    auto [qpp, qp] = q.quantum_ideals();
    REQUIRE(qp.count() == 1);
    CHECK(q.label(q.elements(qp)[0]) == 1);

    for (int n = 1; n <= 7; ++n) {
        CHECK(MinusculePoset(make_datum("A", n, n)).quantum_ideals().second.none());
        CHECK(MinusculePoset(make_datum("A", n, 1)).quantum_ideals().second.none());
    }

    for (const Datum& d : sweep(7)) {
        CAPTURE(datum_name(d));
        const MinusculePoset P(d);
        auto [a, b] = P.quantum_ideals();
        CHECK(label_counts(P, a)[d.node] == 1);
        CHECK(static_cast<int>(b.count()) == P.size() - static_cast<int>(a.count()));
        CHECK(label_counts(P, b) == label_counts(P, P.full_set() - a));
        CHECK(P.is_ideal(b));
    }
}
