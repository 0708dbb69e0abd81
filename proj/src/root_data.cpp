#include "cmlg/root_data.hpp"

#include <algorithm>
#include <functional>

namespace cmlg {

std::string family_name(Family f) {
    switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    if (s == "A") return Family::A;
    if (s == "B") return Family::B;
    if (s == "C") return Family::C;
    if (s == "D") return Family::D;
    if (s == "E6" || s == "E") return Family::E6;
    if (s == "E7") return Family::E7;
    throw DatumError("unknown family '" + s + "'");
}

static bool rank_ok(Family f, int n) {
    switch (f) {
    case Family::A: return n >= 1;
    case Family::B: return n >= 2;
    case Family::C: return n >= 2;
    case Family::D: return n >= 4;
    case Family::E6: return n == 6;
    case Family::E7: return n == 7;
    }
    return false;
}

static bool cominuscule(Family f, int n, int k) {
    if (k < 1 || k > n) return false;
    switch (f) {
    case Family::A: return true;
    case Family::B: return k == 1;
    case Family::C: return k == n;
    case Family::D: return k == 1 || k == n - 1 || k == n;
    case Family::E6: return k == 1 || k == 6;
    case Family::E7: return k == 7;
    }
    return false;
}

Datum make_datum(Family f, int rank, int node) {
    if (!rank_ok(f, rank))
        throw DatumError("rank " + std::to_string(rank) + " not allowed for family " + family_name(f));
    if (!cominuscule(f, rank, node))
        throw DatumError("node " + std::to_string(node) + " is not cominuscule for " + family_name(f) +
                         std::to_string(rank));
    return Datum{f, rank, node};
}

Datum make_datum(const std::string& family, int rank, int node) {
    return make_datum(parse_family(family), rank, node);
}

std::string datum_name(const Datum& d) {
    std::string s = family_name(d.family);
    if (d.family != Family::E6 && d.family != Family::E7) s += std::to_string(d.rank);
    return s + "/" + std::to_string(d.node);
}

Matrix cartan_matrix(Family f, int n) {
    if (!rank_ok(f, n)) throw DatumError("bad rank for " + family_name(f));
    Matrix C(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) C[i][i] = 2;
    auto link = [&](int a, int b) {  // 1-based
        C[a - 1][b - 1] = -1;
        C[b - 1][a - 1] = -1;
    };
    switch (f) {
    case Family::A:
        for (int i = 1; i < n; ++i) link(i, i + 1);
        break;
    case Family::B:
        for (int i = 1; i < n; ++i) link(i, i + 1);
        C[n - 2][n - 1] = -2;
        break;
    case Family::C:
        for (int i = 1; i < n; ++i) link(i, i + 1);
        C[n - 1][n - 2] = -2;  // C_2 = [[2,-1],[-2,2]]
        break;
    case Family::D:
        for (int i = 1; i < n - 1; ++i) link(i, i + 1);
        link(n - 2, n);
        break;
    case Family::E6:
    case Family::E7:
        link(1, 3);
        link(3, 4);
        link(2, 4);
        for (int i = 4; i < n; ++i) link(i, i + 1);
        break;
    }
    return C;
}

Matrix cartan_matrix(const Datum& d) { return cartan_matrix(d.family, d.rank); }

IntVec highest_root(const Datum& d) {
    const int n = d.rank;
    switch (d.family) {
    case Family::A: return IntVec(n, 1);
    case Family::B: {
        IntVec t(n, 2);
        t[0] = 1;
        return t;
    }
    case Family::C: {
        IntVec t(n, 2);
        t[n - 1] = 1;
        return t;
    }
    case Family::D: {
        IntVec t(n, 2);
        t[0] = t[n - 2] = t[n - 1] = 1;
        return t;
    }
    case Family::E6: return {1, 2, 2, 3, 2, 1};
    case Family::E7: return {2, 2, 3, 4, 3, 2, 1};
    }
    return {};
}

IntVec comin_coefficients(const Datum& d) { return highest_root(d); }

namespace {

// -w_0 on one connected component (nodes 1-based) of a Dynkin diagram.
void component_involution(const Matrix& C, const std::vector<int>& comp, std::vector<int>& perm) {
    const int m = static_cast<int>(comp.size());
    auto adj = [&](int a, int b) { return a != b && C[a - 1][b - 1] != 0; };
    for (int a : comp)
        for (int b : comp)
            if (adj(a, b) && (C[a - 1][b - 1] < -1 || C[b - 1][a - 1] < -1)) return;  // multiple edge

    std::vector<int> deg(m, 0);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) deg[x] += adj(comp[x], comp[y]);

    auto leg_from = [&](int start, int from) {  // walk away from 'from'
        std::vector<int> leg{start};
        int prev = from, cur = start;
        for (;;) {
            int next = -1;
            for (int y : comp)
                if (y != prev && adj(cur, y)) next = y;
            if (next < 0) break;
            leg.push_back(next);
            prev = cur;
            cur = next;
        }
        return leg;
    };

    auto branch = std::find_if(deg.begin(), deg.end(), [](int v) { return v >= 3; });
    if (branch == deg.end()) {
        // path: reverse it
        int end = comp[0];
        for (int x = 0; x < m; ++x)
            if (deg[x] <= 1) {
                end = comp[x];
                break;
            }
        auto path = leg_from(end, 0);
        for (int x = 0; x < m; ++x) perm[path[x]] = path[m - 1 - x];
        return;
    }
    const int center = comp[branch - deg.begin()];
    std::vector<std::vector<int>> legs;
    for (int y : comp)
        if (adj(center, y)) legs.push_back(leg_from(y, center));
    std::sort(legs.begin(), legs.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    const auto l0 = legs[0].size(), l1 = legs[1].size(), l2 = legs[2].size();
    if (l0 == 1 && l1 == 1) {
        // D_m with m = l2 + 3; swap the fork iff m odd
        if ((l2 + 3) % 2 == 1) {
            perm[legs[0][0]] = legs[1][0];
            perm[legs[1][0]] = legs[0][0];
        }
    } else if (l0 == 1 && l1 == 2 && l2 == 2) {
        for (int x = 0; x < 2; ++x) {
            perm[legs[1][x]] = legs[2][x];
            perm[legs[2][x]] = legs[1][x];
        }
    }
    // E7, E8: identity
}

}  // namespace

std::vector<int> dynkin_involution(const Datum& d, int removed) {
    const int n = d.rank;
    if (removed < 1 || removed > n) throw DatumError("node out of range");
    const Matrix C = cartan_matrix(d);
    std::vector<int> perm(n + 1);
    for (int i = 0; i <= n; ++i) perm[i] = i;
    std::vector<int> seen(n + 1, 0);
    seen[removed] = 1;
    for (int s = 1; s <= n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s}, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            for (int b = 1; b <= n; ++b)
                if (!seen[b] && b != a && C[a - 1][b - 1] != 0) {
                    seen[b] = 1;
                    comp.push_back(b);
                    stack.push_back(b);
                }
        }
        std::sort(comp.begin(), comp.end());
        component_involution(C, comp, perm);
    }
    return perm;
}

std::vector<int> index_sequence(const Datum& d, int istar) {
    if (istar == d.node) throw DatumError("i* = k is the quantum term");
    if (istar < 1 || istar > d.rank) throw DatumError("i* out of range");
    const int c = comin_coefficients(d)[istar - 1];
    int prev2 = istar, prev1 = d.node;
    std::vector<int> seq;
    for (int j = 1; j <= c + 1; ++j) {
        int next = dynkin_involution(d, prev1)[prev2];
        seq.push_back(next);
        prev2 = prev1;
        prev1 = next;
    }
    return seq;
}

IntVec fundamental_weight(int n, int i) {
    IntVec w(n, 0);
    w[i - 1] = 1;
    return w;
}

IntVec simple_root(const Matrix& C, int i) {
    IntVec a(C.size());
    for (size_t r = 0; r < C.size(); ++r) a[r] = C[r][i - 1];
    return a;
}

IntVec reflect(const Matrix& C, int i, IntVec lambda) {
    const int li = lambda[i - 1];
    if (li != 0)
        for (size_t r = 0; r < C.size(); ++r) lambda[r] -= li * C[r][i - 1];
    return lambda;
}

IntVec weyl_apply(const Matrix& C, const std::vector<int>& word, IntVec lambda) {
    for (int i : word) lambda = reflect(C, i, std::move(lambda));
    return lambda;
}

int index_value(const Datum& d) {
    const int n = d.rank;
    switch (d.family) {
    case Family::A: return n + 1;
    case Family::B: return 2 * n;
    case Family::C: return 2 * n;
    case Family::D: return 2 * n - 2;
    case Family::E6: return 12;
    case Family::E7: return 18;
    }
    return 0;
}

std::vector<Datum> sweep(int max_rank) {
    std::vector<Datum> out;
    for (int n = 1; n <= max_rank; ++n)
        for (int k = 1; k <= n; ++k) out.push_back({Family::A, n, k});
    for (int n = 2; n <= std::min(max_rank, 6); ++n) out.push_back({Family::B, n, 1});
    for (int n = 2; n <= std::min(max_rank, 6); ++n) out.push_back({Family::C, n, n});
    for (int n = 4; n <= max_rank; ++n)
        for (int k : {1, n - 1, n}) out.push_back({Family::D, n, k});
    if (max_rank >= 6) {
        out.push_back({Family::E6, 6, 1});
        out.push_back({Family::E6, 6, 6});
    }
    if (max_rank >= 7) out.push_back({Family::E7, 7, 7});
    return out;
}

}  // namespace cmlg
