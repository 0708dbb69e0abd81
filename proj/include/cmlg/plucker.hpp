#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "cmlg/poset.hpp"

namespace cmlg {

// A monomial is a q-power times a sorted multiset of ideal ids
// (indices into MinusculePoset::ideals()).
struct PMonomial {
    int q = 0;
    std::vector<int> factors;

    auto operator<=>(const PMonomial&) const = default;
};

class PluckerPolynomial {
  public:
    using Terms = std::map<PMonomial, mpz_class>;

    PluckerPolynomial() = default;
    static PluckerPolynomial single(int ideal_id, int q = 0);

    void add(PMonomial m, const mpz_class& c);
    PluckerPolynomial& operator+=(const PluckerPolynomial& o);
    PluckerPolynomial& operator-=(const PluckerPolynomial& o);
    PluckerPolynomial operator*(const PluckerPolynomial& o) const;
    PluckerPolynomial scaled(const mpz_class& c) const;
    bool operator==(const PluckerPolynomial& o) const { return terms_ == o.terms_; }

    const Terms& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    // Number of factors if all monomials agree, -1 otherwise (0 if empty).
    int degree() const;

  private:
    Terms terms_;
};

}  // namespace cmlg
