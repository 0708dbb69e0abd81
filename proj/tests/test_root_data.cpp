#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "cmlg/root_data.hpp"

using namespace cmlg;

namespace {

// Positive roots by closing the simple roots under reflections; the
// highest root is the one of largest height. Independent of highest_root.
// Cartan columns describe the dual group, so roots pair through the
// transpose here.
IntVec highest_root_by_closure(const Datum& d) {
    const Matrix C = cartan_matrix(d);
    const int n = d.rank;
    auto refl = [&](int r, IntVec beta) {
        int pair = 0;
        for (int j = 0; j < n; ++j) pair += beta[j] * C[j][r];
        beta[r] -= pair;
        return beta;
    };
    std::set<IntVec> roots;
    std::vector<IntVec> todo;
    for (int i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        todo.push_back(e);
    }
    while (!todo.empty()) {
        IntVec b = todo.back();
        todo.pop_back();
        if (!roots.insert(b).second) continue;
        for (int r = 0; r < n; ++r) todo.push_back(refl(r, b));
    }
    IntVec best;
    int h = -1;
    for (const auto& b : roots) {
        const int s = std::accumulate(b.begin(), b.end(), 0);
        if (s > h) h = s, best = b;
    }
    return best;
}

int tabulated_index(const Datum& d) {
    switch (d.family) {
        case Family::A: return d.rank + 1;
        case Family::B:
        case Family::C: return 2 * d.rank;
        case Family::D: return 2 * d.rank - 2;
        case Family::E6: return 12;
        case Family::E7: return 18;
    }
    return -1;
}

}  // namespace

TEST_CASE("cartan matrices of rank two") {
    CHECK(cartan_matrix(Family::A, 2) == Matrix{{2, -1}, {-1, 2}});
    CHECK(cartan_matrix(Family::C, 2) == Matrix{{2, -1}, {-2, 2}});
}

TEST_CASE("highest roots") {
    CHECK(highest_root(make_datum("B", 5, 1)) == IntVec{1, 2, 2, 2, 2});
    CHECK(highest_root(make_datum("A", 4, 2)) == IntVec{1, 1, 1, 1});
    CHECK(highest_root(make_datum("E7", 7, 7)) == IntVec{2, 2, 3, 4, 3, 2, 1});
    for (const Datum& d : sweep(7)) {
        CAPTURE(datum_name(d));
        CHECK(highest_root(d) == highest_root_by_closure(d));
    }
}

TEST_CASE("cominuscule coefficients") {
    CHECK(comin_coefficients(make_datum("C", 5, 5)) == IntVec{2, 2, 2, 2, 1});
    CHECK(comin_coefficients(make_datum("E6", 6, 6))[3] == 3);
    CHECK(comin_coefficients(make_datum("E7", 7, 7))[3] == 4);
    for (const Datum& d : sweep(7)) {
        CAPTURE(datum_name(d));
        const IntVec c = comin_coefficients(d);
        CHECK(c[d.node - 1] == 1);
        CHECK(c == highest_root_by_closure(d));
        CHECK(1 + std::accumulate(c.begin(), c.end(), 0) == tabulated_index(d));
        CHECK(index_value(d) == tabulated_index(d));
    }
}

TEST_CASE("dynkin involutions") {
    const Datum e6 = make_datum("E6", 6, 6);
    const auto s6 = dynkin_involution(e6, 6);
    CHECK(s6[2] == 5);
    CHECK(s6[5] == 2);
    CHECK(s6[3] == 3);
    CHECK(s6[4] == 4);
    CHECK(s6[1] == 1);
    const auto s7 = dynkin_involution(make_datum("E7", 7, 7), 7);
    CHECK(s7[3] == 5);
    CHECK(s7[5] == 3);

    for (const Datum& d : sweep(7)) {
        const Matrix C = cartan_matrix(d);
        for (int j = 1; j <= d.rank; ++j) {
            CAPTURE(datum_name(d));
            CAPTURE(j);
            const auto s = dynkin_involution(d, j);
            CHECK(s[j] == j);
            for (int i = 1; i <= d.rank; ++i) {
                CHECK(s[s[i]] == i);
                // adjacency off j is preserved
                for (int l = 1; l <= d.rank; ++l)
                    if (i != j && l != j) CHECK((C[i - 1][l - 1] != 0) == (C[s[i] - 1][s[l] - 1] != 0));
            }
        }
    }
}

TEST_CASE("index sequences") {
    CHECK(index_sequence(make_datum("E7", 7, 7), 4) == std::vector<int>{4, 5, 3, 5, 4});
    CHECK(index_sequence(make_datum("E6", 6, 6), 1) == std::vector<int>{1, 6});
    // (n - i*, n, i*) for the Lagrangian Grassmannian
    for (int n = 2; n <= 6; ++n)
        for (int i = 1; i < n; ++i) CHECK(index_sequence(make_datum("C", n, n), i) == std::vector<int>{n - i, n, i});
    for (const Datum& d : sweep(7)) {
        const IntVec c = comin_coefficients(d);
        for (int i = 1; i <= d.rank; ++i)
            if (i != d.node) CHECK(static_cast<int>(index_sequence(d, i).size()) == c[i - 1] + 1);
    }
}

TEST_CASE("weyl group action") {
    const Matrix C = cartan_matrix(Family::A, 2);
    const IntVec w1 = fundamental_weight(2, 1);
    CHECK(weyl_apply(C, {}, w1) == w1);
    CHECK(reflect(C, 1, w1) == IntVec{-1, 1});
    const Matrix E = cartan_matrix(Family::E7, 7);
    const IntVec lam{3, -1, 0, 2, -5, 1, 1};
    for (int i = 1; i <= 7; ++i) CHECK(weyl_apply(E, {i, i}, lam) == lam);
}

TEST_CASE("invalid data are rejected") {
    CHECK_THROWS_AS(make_datum("E7", 7, 1), DatumError);
    CHECK_THROWS_AS(make_datum("B", 4, 4), DatumError);
    CHECK_THROWS_AS(make_datum("F4", 4, 1), DatumError);
    CHECK_THROWS_AS(make_datum("A", 0, 1), DatumError);
    CHECK_THROWS_AS(make_datum("A", 3, 4), DatumError);
    CHECK_NOTHROW(make_datum("D", 5, 4));
}
