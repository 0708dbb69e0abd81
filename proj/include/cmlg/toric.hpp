#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "cmlg/plucker.hpp"
#include "cmlg/potential.hpp"

namespace cmlg {

// Laurent polynomial in the torus coordinates a_b (one per poset element)
// and a formal q. A key is one byte for the q-degree followed by one
// signed byte per element.
class LaurentPolynomial {
  public:
    using Key = std::string;

    explicit LaurentPolynomial(int nvars = 0) : n_(nvars) {}
    static LaurentPolynomial one(int nvars);
    static LaurentPolynomial monomial(const std::vector<int>& exps, int q = 0, const mpz_class& c = 1);
    // Sum of a_b over elements b with the given label.
    static LaurentPolynomial linear_form(const MinusculePoset& P, int label);

    int nvars() const { return n_; }
    void add(const Key& k, const mpz_class& c);
    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    bool operator==(const LaurentPolynomial& o) const;
    bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

    size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const;  // single term with coefficient 1
    // Exact division by a single monomial (coefficient +-1).
    LaurentPolynomial divided_by_monomial(const LaurentPolynomial& m) const;

    struct Term {
        int q;
        std::vector<int> exps;
        mpz_class coeff;
    };
    std::vector<Term> sorted_terms() const;
    static std::string term_string(const Term& t);
    std::string to_string(size_t max_terms = 8) const;

  private:
    int n_;
    std::unordered_map<Key, mpz_class> terms_;
};

class ToricRestriction {
  public:
    explicit ToricRestriction(const MinusculePoset& P);
    // Sum over embeddings of the image monomial.
    const LaurentPolynomial& plucker(int ideal_id) const;
    LaurentPolynomial polynomial(const PluckerPolynomial& poly) const;

  private:
    const MinusculePoset& P_;
    mutable std::vector<std::unique_ptr<LaurentPolynomial>> cache_;
};

LaurentPolynomial restrict_plucker(const MinusculePoset& P, const ElemSet& ideal);
LaurentPolynomial restrict_polynomial(const MinusculePoset& P, const PluckerPolynomial& poly);

// Exponent c-j+1 on I_{i_j} \ I_{i_{j-1}}, 0 outside I_{i_c}.
std::vector<int> expected_minor_monomial(const MinusculePoset& P, int istar);

struct Check {
    std::string name;
    int istar = -1;  // -1: global check
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    bool with_oracle = false;
    bool with_quantum_derivation = false;
};

struct VerificationReport {
    Datum datum;
    std::vector<Check> checks;
    bool all_pass() const;
};

VerificationReport verify_model(const MinusculePoset& P, const Superpotential& W, const VerifyOptions& opt);

}  // namespace cmlg
