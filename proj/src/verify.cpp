#include <numeric>
#include <sstream>

#include "cmlg/toric.hpp"
#include "cmlg/weyl_oracle.hpp"

namespace cmlg {

namespace {

// First monomial of a - b in sorted order, for failure reports.
std::string first_difference(LaurentPolynomial a, const LaurentPolynomial& b) {
    a -= b;
    if (a.is_zero()) return "";
    auto ts = a.sorted_terms();
    return "difference has " + std::to_string(ts.size()) + " terms, e.g. " + LaurentPolynomial::term_string(ts[0]);
}

Check make_check(std::string name, int istar, bool pass, std::string detail = "") {
    return Check{std::move(name), istar, pass, std::move(detail)};
}

std::string vec_string(const std::vector<int>& v) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

std::vector<std::vector<int>> all_lower_covers(const MinusculePoset& P) {
    std::vector<std::vector<int>> lc;
    for (int b = 0; b < P.size(); ++b) lc.push_back(P.lower_covers(b));
    return lc;
}

void oracle_checks(const MinusculePoset& P, int istar, std::vector<Check>& out) {
    const Datum& d = P.datum();
    std::vector<int> expected;
    long height = 0;
    if (istar == d.node) {
        expected.assign(P.size(), 1);
        height = P.size();
    } else {
        expected = expected_minor_monomial(P, istar);
        const auto seq = P.ideal_sequence(istar);
        for (size_t j = 0; j + 1 < seq.size(); ++j) height += static_cast<long>(seq[j].count());
    }

    std::vector<int> id_order(P.size());
    std::iota(id_order.begin(), id_order.end(), 0);
    try {
        auto got = oracle::minor_exponents_via_weights(d, P.labels(), id_order, istar);
        out.push_back(make_check("oracle_exponents", istar, got.exponents == expected,
                                 got.exponents == expected ? "" : "oracle " + vec_string(got.exponents) +
                                                                      " vs " + vec_string(expected)));
        out.push_back(make_check("oracle_height", istar, got.height == height,
                                 "h=" + std::to_string(got.height) + " expected " + std::to_string(height)));
        bool same = true;
        std::string detail;
        const auto lc = all_lower_covers(P);
        for (std::uint32_t seed = 1; seed <= 3; ++seed) {
            auto order = oracle::random_linear_extension(lc, seed * 7919u + static_cast<std::uint32_t>(istar));
            auto alt = oracle::minor_exponents_via_weights(d, P.labels(), order, istar);
            if (alt.exponents != got.exponents) {
                same = false;
                detail = "extension " + vec_string(order) + " gives " + vec_string(alt.exponents);
                break;
            }
        }
        out.push_back(make_check("oracle_extensions", istar, same, detail));
    } catch (const std::logic_error& e) {
        out.push_back(make_check("oracle_exponents", istar, false, e.what()));
    }
}

}  // namespace

bool VerificationReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

VerificationReport verify_model(const MinusculePoset& P, const Superpotential& W, const VerifyOptions& opt) {
    const Datum& d = P.datum();
    VerificationReport rep{d, {}};
    auto& out = rep.checks;
    const ToricRestriction R(P);

    const IntVec c = comin_coefficients(d);
    const int deg = 1 + std::accumulate(c.begin(), c.end(), 0);
    out.push_back(make_check("index", -1, deg == index_value(d),
                             "1+sum c=" + std::to_string(deg) + " table=" + std::to_string(index_value(d))));
    out.push_back(make_check("term_count", -1, static_cast<int>(W.terms.size()) == d.rank + 1,
                             std::to_string(W.terms.size()) + " terms"));
    const long orbit = oracle::weyl_orbit_size(d);
    out.push_back(make_check("ideal_count", -1, static_cast<long>(P.ideals().size()) == orbit,
                             std::to_string(P.ideals().size()) + " ideals, orbit " + std::to_string(orbit)));

    // quantum ideal and the shape of the quantum term
    ElemSet iprime;
    try {
        iprime = P.quantum_ideals().second;
        bool ok = true;
        std::string detail = "I'=" + P.ids_string(iprime);
        if (d.family == Family::A && (d.node == 1 || d.node == d.rank) && iprime.any()) {
            ok = false;
            detail += " but the projective-space case needs I'=empty";
        }
        out.push_back(make_check("quantum_ideal", -1, ok, detail));
    } catch (const std::logic_error& e) {
        out.push_back(make_check("quantum_ideal", -1, false, e.what()));
    }

    // Per-i* identities.
    for (const PotentialTerm& t : W.terms) {
        const int i = t.index;
        if (i == 0 || i == d.node) continue;
        const MovePoset mp = generate_move_poset(P, i);
        const int cc = static_cast<int>(mp.indices.size()) - 1;

        const LaurentPolynomial expect = LaurentPolynomial::monomial(expected_minor_monomial(P, i));
        const LaurentPolynomial den = R.polynomial(t.denominator);
        out.push_back(make_check("minor_monomial", i, den == expect,
                                 den == expect ? std::to_string(t.denominator.size()) + " Pluecker monomials"
                                               : first_difference(den, expect)));

        const auto seq = P.ideal_sequence(i);
        const LaurentPolynomial& lead = R.plucker(P.ideal_id(seq[cc - 1]));
        out.push_back(make_check("leading_monomial", i, lead.is_monomial(),
                                 std::to_string(lead.size()) + " terms"));

        const int j = dynkin_involution(d, d.node)[i];
        const LaurentPolynomial num = R.polynomial(t.numerator);
        const LaurentPolynomial rhs = den * LaurentPolynomial::linear_form(P, j);
        out.push_back(make_check("derivation", i, num == rhs, first_difference(num, rhs)));

        std::string gdetail = std::to_string(mp.states.size()) + " states";
        if (!mp.diagnostics.empty()) gdetail += "; " + mp.diagnostics.front();
        out.push_back(make_check("graded", i, mp.graded, gdetail));
        if (cc == 2)
            out.push_back(make_check("single_box_moves", i, mp.max_filter <= 1,
                                     "largest filter " + std::to_string(mp.max_filter)));
    }

    // Full potential: every denominator restricts to a monomial, so each
    // term divides exactly.
    {
        LaurentPolynomial total(P.size());
        std::string detail;
        bool ok = true;
        for (const PotentialTerm& t : W.terms) {
            const LaurentPolynomial den = R.polynomial(t.denominator);
            if (den.size() != 1) {
                ok = false;
                detail = "denominator " + std::to_string(t.index) + " is not a monomial";
                break;
            }
            total += R.polynomial(t.numerator).divided_by_monomial(den);
        }
        if (ok) {
            LaurentPolynomial expect(P.size());
            for (int b = 0; b < P.size(); ++b) {
                std::vector<int> e(P.size(), 0);
                e[b] = 1;
                expect += LaurentPolynomial::monomial(e);
            }
            const LaurentPolynomial aLambda = R.plucker(P.ideal_id(P.full_set()));
            LaurentPolynomial qpart = R.plucker(P.ideal_id(iprime)).divided_by_monomial(aLambda);
            std::vector<int> zero(P.size(), 0);
            expect += qpart * LaurentPolynomial::monomial(zero, 1);
            ok = total == expect;
            detail = ok ? std::to_string(total.size()) + " Laurent terms" : first_difference(total, expect);
        }
        out.push_back(make_check("potential_identity", -1, ok, detail));
    }

    if (opt.with_oracle) {
        for (int i = 1; i <= d.rank; ++i) oracle_checks(P, i, out);
    }

    if (opt.with_quantum_derivation) {
        for (const PotentialTerm& t : W.terms) {
            try {
                const PluckerPolynomial lhs = quantum_derivation(P, t.denominator);
                const bool ok = lhs == t.numerator;
                std::string detail;
                if (!ok) {
                    // the residual is still worth classifying: it may die on the torus
                    PluckerPolynomial residual = lhs;
                    residual -= t.numerator;
                    const bool vanishes = R.polynomial(residual).size() == 0;
                    detail = std::to_string(lhs.size()) + " vs " + std::to_string(t.numerator.size()) +
                             " monomials, residual " + (vanishes ? "vanishes" : "does not vanish") + " on the torus";
                }
                out.push_back(make_check("quantum_derivation", t.index, ok, detail));
            } catch (const std::logic_error& e) {
                out.push_back(make_check("quantum_derivation", t.index, false, e.what()));
            }
        }
    }
    return rep;
}

}  // namespace cmlg
