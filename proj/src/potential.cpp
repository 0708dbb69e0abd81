#include "cmlg/potential.hpp"

#include <stdexcept>

namespace cmlg {

namespace {

// Product rule with a per-factor rule f: ideal id -> polynomial of degree 1.
template <class Rule>
PluckerPolynomial product_rule(const PluckerPolynomial& poly, Rule&& rule) {
    PluckerPolynomial out;
    for (const auto& [m, c] : poly.terms()) {
        for (size_t t = 0; t < m.factors.size(); ++t) {
            const PluckerPolynomial image = rule(m.factors[t]);
            for (const auto& [im, ic] : image.terms()) {
                PMonomial nm{m.q + im.q, {}};
                for (size_t u = 0; u < m.factors.size(); ++u)
                    if (u != t) nm.factors.push_back(m.factors[u]);
                nm.factors.insert(nm.factors.end(), im.factors.begin(), im.factors.end());
                out.add(std::move(nm), c * ic);
            }
        }
    }
    return out;
}

}  // namespace

PluckerPolynomial apply_derivation(const MinusculePoset& P, int j, const PluckerPolynomial& poly) {
    return product_rule(poly, [&](int id) {
        PluckerPolynomial r;
        if (auto next = P.add_box(P.ideals()[id], j)) r.add(PMonomial{0, {P.ideal_id(*next)}}, 1);
        return r;
    });
}

PluckerPolynomial numerator_polynomial(const MinusculePoset& P, int istar) {
    const Datum& d = P.datum();
    if (istar == 0) return apply_derivation(P, d.node, denominator_polynomial(P, 0));
    if (istar == d.node) {
        auto [ipp, ip] = P.quantum_ideals();
        return PluckerPolynomial::single(P.ideal_id(ip), 1);
    }
    const int i1 = dynkin_involution(d, d.node)[istar];
    return apply_derivation(P, i1, denominator_polynomial(P, istar));
}

Superpotential assemble_superpotential(const MinusculePoset& P) {
    Superpotential W{P.datum(), {}};
    for (int i = 0; i <= P.datum().rank; ++i) {
        PotentialTerm t;
        t.index = i;
        t.quantum = i == P.datum().node;
        t.denominator = denominator_polynomial(P, i);
        t.numerator = numerator_polynomial(P, i);
        W.terms.push_back(std::move(t));
    }
    return W;
}

PluckerPolynomial quantum_chevalley(const MinusculePoset& P, int ideal_id) {
    const ElemSet& I = P.ideals()[ideal_id];
    PluckerPolynomial r;
    for (int j = 1; j <= P.datum().rank; ++j)
        if (auto next = P.add_box(I, j)) r.add(PMonomial{0, {P.ideal_id(*next)}}, 1);
    const ElemSet ipp = P.quantum_ideals().first;
    if (ipp.is_subset_of(I)) {
        auto minus = P.isomorphic_ideal(I - ipp);
        if (!minus) throw std::logic_error("rim-hook complement is not isomorphic to an ideal");
        r.add(PMonomial{1, {P.ideal_id(*minus)}}, 1);
    }
    return r;
}

PluckerPolynomial quantum_derivation(const MinusculePoset& P, const PluckerPolynomial& poly) {
    return product_rule(poly, [&](int id) { return quantum_chevalley(P, id); });
}

}  // namespace cmlg
