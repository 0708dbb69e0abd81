#include "cmlg/plucker.hpp"

#include <algorithm>

namespace cmlg {

PluckerPolynomial PluckerPolynomial::single(int ideal_id, int q) {
    PluckerPolynomial p;
    p.add(PMonomial{q, {ideal_id}}, 1);
    return p;
}

void PluckerPolynomial::add(PMonomial m, const mpz_class& c) {
    if (c == 0) return;
    std::sort(m.factors.begin(), m.factors.end());
    auto [it, fresh] = terms_.emplace(std::move(m), c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

PluckerPolynomial& PluckerPolynomial::operator+=(const PluckerPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

PluckerPolynomial& PluckerPolynomial::operator-=(const PluckerPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

PluckerPolynomial PluckerPolynomial::operator*(const PluckerPolynomial& o) const {
    PluckerPolynomial r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            PMonomial m{m1.q + m2.q, m1.factors};
            m.factors.insert(m.factors.end(), m2.factors.begin(), m2.factors.end());
            r.add(std::move(m), c1 * c2);
        }
    return r;
}

PluckerPolynomial PluckerPolynomial::scaled(const mpz_class& c) const {
    PluckerPolynomial r;
    for (const auto& [m, v] : terms_) r.add(m, v * c);
    return r;
}

int PluckerPolynomial::degree() const {
    if (terms_.empty()) return 0;
    const size_t d = terms_.begin()->first.factors.size();
    for (const auto& [m, c] : terms_)
        if (m.factors.size() != d) return -1;
    return static_cast<int>(d);
}

}  // namespace cmlg
