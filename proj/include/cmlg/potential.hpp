#pragma once

#include <vector>

#include "cmlg/moves.hpp"
#include "cmlg/plucker.hpp"

namespace cmlg {

// delta_j: add a box labelled j to one factor, product rule.
PluckerPolynomial apply_derivation(const MinusculePoset& P, int j, const PluckerPolynomial& poly);

PluckerPolynomial numerator_polynomial(const MinusculePoset& P, int istar);

struct PotentialTerm {
    int index = 0;
    bool quantum = false;
    PluckerPolynomial numerator, denominator;
};

struct Superpotential {
    Datum datum;
    std::vector<PotentialTerm> terms;  // index 0..n
};

Superpotential assemble_superpotential(const MinusculePoset& P);

// Conjectural hyperplane rule: sigma_box *_q sigma_I. Reads "I'' in I"
// as subset containment.
PluckerPolynomial quantum_chevalley(const MinusculePoset& P, int ideal_id);
PluckerPolynomial quantum_derivation(const MinusculePoset& P, const PluckerPolynomial& poly);

}  // namespace cmlg
