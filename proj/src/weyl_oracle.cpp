#include "cmlg/weyl_oracle.hpp"

#include <deque>
#include <random>
#include <set>
#include <stdexcept>

namespace cmlg::oracle {

IntVec levi_longest_image(const Datum& d, int istar) {
    const Matrix C = cartan_matrix(d);
    IntVec mu = fundamental_weight(d.rank, istar);
    // each step is one letter of w_{0,P}; this bound exceeds its length
    const int guard = 4 * d.rank * d.rank * d.rank + 64;
    for (int step = 0;; ++step) {
        if (step > guard) throw std::logic_error("Levi lowering does not terminate");
        int j = 0;
        while (j < d.rank && (j + 1 == d.node || mu[j] <= 0)) ++j;
        if (j == d.rank) return mu;
        mu = reflect(C, j + 1, std::move(mu));
    }
}

IntVec antidominant(const Matrix& C, IntVec lambda) {
    const int n = static_cast<int>(C.size());
    for (;;) {
        int j = 0;
        while (j < n && lambda[j] <= 0) ++j;
        if (j == n) return lambda;
        lambda = reflect(C, j + 1, std::move(lambda));
    }
}

MinorExponents minor_exponents_via_weights(const Datum& d, const std::vector<int>& labels,
                                           const std::vector<int>& order, int istar) {
    const Matrix C = cartan_matrix(d);
    IntVec mu = levi_longest_image(d, istar);
    MinorExponents out;
    out.exponents.assign(labels.size(), 0);
    for (int b : order) {
        const int i = labels[b];
        const int db = mu[i - 1];
        if (db < 0) throw std::logic_error("negative minor exponent at element " + std::to_string(b));
        out.exponents[b] = db;
        out.height += db;
        mu = reflect(C, i, std::move(mu));
    }
    if (mu != antidominant(C, fundamental_weight(d.rank, istar)))
        throw std::logic_error("walk does not end at w_0(omega_i)");
    return out;
}

std::vector<int> random_linear_extension(const std::vector<std::vector<int>>& lower_covers, std::uint32_t seed) {
    const int N = static_cast<int>(lower_covers.size());
    std::mt19937 rng(seed);
    std::vector<int> missing(N), order;
    for (int b = 0; b < N; ++b) missing[b] = static_cast<int>(lower_covers[b].size());
    std::vector<int> placed(N, 0);
    while (static_cast<int>(order.size()) < N) {
        std::vector<int> avail;
        for (int b = 0; b < N; ++b)
            if (!placed[b] && missing[b] == 0) avail.push_back(b);
        std::uniform_int_distribution<size_t> pick(0, avail.size() - 1);
        const int b = avail[pick(rng)];
        placed[b] = 1;
        order.push_back(b);
        for (int c = 0; c < N; ++c)
            for (int a : lower_covers[c])
                if (a == b) --missing[c];
    }
    return order;
}

long weyl_orbit_size(const Datum& d) {
    const Matrix C = cartan_matrix(d);
    IntVec start(d.rank, 0);
    start[d.node - 1] = -1;
    std::set<IntVec> seen{start};
    std::deque<IntVec> queue{start};
    while (!queue.empty()) {
        IntVec mu = queue.front();
        queue.pop_front();
        for (int i = 1; i <= d.rank; ++i) {
            IntVec nu = reflect(C, i, mu);
            if (seen.insert(nu).second) queue.push_back(std::move(nu));
        }
    }
    return static_cast<long>(seen.size());
}

}  // namespace cmlg::oracle
