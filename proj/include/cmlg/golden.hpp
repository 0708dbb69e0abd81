#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cmlg/plucker.hpp"
#include "cmlg/poset.hpp"

namespace cmlg {

// A case transcribed from displayed formulas. Ideals are drawn as row
// shapes over a labelled layout of the whole poset (':' marks an indent).
struct GoldenPolynomial {
    std::string kind;  // "numerator" or "denominator"
    int index = 0;
    PluckerPolynomial poly;
};

struct GoldenCase {
    std::string name;
    Datum datum;
    std::vector<std::string> layout;
    std::string note;
    std::vector<GoldenPolynomial> polynomials;
};

class GoldenError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Element id of every drawn box, row by row; throws GoldenError when the
// drawing's adjacency is not the Hasse diagram of P.
std::vector<std::vector<int>> layout_elements(const MinusculePoset& P, const std::vector<std::string>& layout);

GoldenCase load_golden(const std::string& path, const MinusculePoset& P);
Datum golden_datum(const std::string& path);

struct GoldenDiff {
    std::string kind;
    int index = 0;
    size_t expected_terms = 0;
    std::vector<std::string> missing, extra;
    bool ok() const { return missing.empty() && extra.empty(); }
};

std::vector<GoldenDiff> compare_golden(const MinusculePoset& P, const GoldenCase& g);

// "-1*q*p[0,1]*p[]" style rendering used in diffs.
std::string monomial_string(const MinusculePoset& P, const PMonomial& m, const mpz_class& c);

}  // namespace cmlg
