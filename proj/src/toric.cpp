#include "cmlg/toric.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cmlg {

namespace {

constexpr int kExpLimit = 120;

LaurentPolynomial::Key make_key(const std::vector<int>& exps, int q) {
    LaurentPolynomial::Key k(exps.size() + 1, '\0');
    if (q < 0 || q > kExpLimit) throw std::overflow_error("q-degree out of range");
    k[0] = static_cast<char>(q);
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < -kExpLimit || exps[i] > kExpLimit) throw std::overflow_error("exponent out of range");
        k[i + 1] = static_cast<char>(static_cast<signed char>(exps[i]));
    }
    return k;
}

int key_at(const LaurentPolynomial::Key& k, size_t i) { return static_cast<signed char>(k[i]); }

LaurentPolynomial::Key key_combine(const LaurentPolynomial::Key& a, const LaurentPolynomial::Key& b, int sign) {
    LaurentPolynomial::Key k(a.size(), '\0');
    for (size_t i = 0; i < a.size(); ++i) {
        const int v = key_at(a, i) + sign * key_at(b, i);
        if (v < -kExpLimit || v > kExpLimit || (i == 0 && v < 0)) throw std::overflow_error("exponent out of range");
        k[i] = static_cast<char>(static_cast<signed char>(v));
    }
    return k;
}

}  // namespace

LaurentPolynomial LaurentPolynomial::one(int nvars) {
    return monomial(std::vector<int>(nvars, 0));
}

LaurentPolynomial LaurentPolynomial::monomial(const std::vector<int>& exps, int q, const mpz_class& c) {
    LaurentPolynomial p(static_cast<int>(exps.size()));
    p.add(make_key(exps, q), c);
    return p;
}

LaurentPolynomial LaurentPolynomial::linear_form(const MinusculePoset& P, int label) {
    LaurentPolynomial p(P.size());
    for (int b = 0; b < P.size(); ++b)
        if (P.label(b) == label) {
            std::vector<int> e(P.size(), 0);
            e[b] = 1;
            p.add(make_key(e, 0), 1);
        }
    return p;
}

void LaurentPolynomial::add(const Key& k, const mpz_class& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    LaurentPolynomial r(n_);
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_) r.add(key_combine(k1, k2, 1), c1 * c2);
    return r;
}

bool LaurentPolynomial::operator==(const LaurentPolynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (const auto& [k, c] : terms_) {
        auto it = o.terms_.find(k);
        if (it == o.terms_.end() || it->second != c) return false;
    }
    return true;
}

bool LaurentPolynomial::is_monomial() const {
    return terms_.size() == 1 && terms_.begin()->second == 1;
}

LaurentPolynomial LaurentPolynomial::divided_by_monomial(const LaurentPolynomial& m) const {
    if (m.terms_.size() != 1 || (m.terms_.begin()->second != 1 && m.terms_.begin()->second != -1))
        throw std::invalid_argument("divisor is not a unit monomial");
    const auto& [mk, mc] = *m.terms_.begin();
    LaurentPolynomial r(n_);
    for (const auto& [k, c] : terms_) r.add(key_combine(k, mk, -1), c * mc);
    return r;
}

std::vector<LaurentPolynomial::Term> LaurentPolynomial::sorted_terms() const {
    std::vector<Term> out;
    for (const auto& [k, c] : terms_) {
        Term t{key_at(k, 0), {}, c};
        for (size_t i = 1; i < k.size(); ++i) t.exps.push_back(key_at(k, i));
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
        return std::tie(a.q, a.exps) > std::tie(b.q, b.exps);
    });
    return out;
}

std::string LaurentPolynomial::term_string(const Term& t) {
    std::ostringstream os;
    os << t.coeff.get_str();
    if (t.q) os << "*q" << (t.q > 1 ? "^" + std::to_string(t.q) : "");
    for (size_t b = 0; b < t.exps.size(); ++b)
        if (t.exps[b]) os << "*a" << b << (t.exps[b] != 1 ? "^" + std::to_string(t.exps[b]) : "");
    return os.str();
}

std::string LaurentPolynomial::to_string(size_t max_terms) const {
    if (terms_.empty()) return "0";
    std::string s;
    auto ts = sorted_terms();
    for (size_t i = 0; i < ts.size() && i < max_terms; ++i) s += (i ? " + " : "") + term_string(ts[i]);
    if (ts.size() > max_terms) s += " + ... (" + std::to_string(ts.size()) + " terms)";
    return s;
}

ToricRestriction::ToricRestriction(const MinusculePoset& P) : P_(P), cache_(P.ideals().size()) {}

const LaurentPolynomial& ToricRestriction::plucker(int ideal_id) const {
    auto& slot = cache_.at(ideal_id);
    if (!slot) slot = std::make_unique<LaurentPolynomial>(restrict_plucker(P_, P_.ideals()[ideal_id]));
    return *slot;
}

LaurentPolynomial ToricRestriction::polynomial(const PluckerPolynomial& poly) const {
    LaurentPolynomial sum(P_.size());
    for (const auto& [m, c] : poly.terms()) {
        std::vector<int> zero(P_.size(), 0);
        LaurentPolynomial prod = LaurentPolynomial::monomial(zero, m.q, c);
        for (int id : m.factors) prod = prod * plucker(id);
        sum += prod;
    }
    return sum;
}

LaurentPolynomial restrict_plucker(const MinusculePoset& P, const ElemSet& ideal) {
    LaurentPolynomial p(P.size());
    for (const auto& emb : P.embeddings(ideal)) {
        std::vector<int> e(P.size(), 0);
        for (int b : emb) e[b] = 1;
        p += LaurentPolynomial::monomial(e);
    }
    return p;
}

LaurentPolynomial restrict_polynomial(const MinusculePoset& P, const PluckerPolynomial& poly) {
    return ToricRestriction(P).polynomial(poly);
}

std::vector<int> expected_minor_monomial(const MinusculePoset& P, int istar) {
    const auto seq = P.ideal_sequence(istar);
    const int c = static_cast<int>(seq.size()) - 1;
    std::vector<int> e(P.size(), 0);
    for (int j = 1; j <= c; ++j)
        for (int b : P.elements(seq[j - 1])) e[b] += 1;
    return e;
}

}  // namespace cmlg
