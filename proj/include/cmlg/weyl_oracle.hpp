#pragma once

#include <cstdint>
#include <vector>

#include "cmlg/root_data.hpp"

// Brute-force weight-lattice recomputation. Uses only root data plus the
// element labels and cover lists of the poset, never moves/toric code.
namespace cmlg::oracle {

// w_{0,P}(omega_i): lower by s_j (j != k) while the j-th entry is positive.
IntVec levi_longest_image(const Datum& d, int istar);

// The antidominant element of the W-orbit of lambda, i.e. w_0(lambda).
IntVec antidominant(const Matrix& C, IntVec lambda);

struct MinorExponents {
    std::vector<int> exponents;  // indexed by element id
    long height = 0;
};

// Walk 'order' (a linear extension, element ids) from w_{0,P}(omega_i*).
// Throws std::logic_error on a negative exponent or a wrong end weight.
MinorExponents minor_exponents_via_weights(const Datum& d, const std::vector<int>& labels,
                                           const std::vector<int>& order, int istar);

// Uniformly random choice among available minimal elements at each step.
std::vector<int> random_linear_extension(const std::vector<std::vector<int>>& lower_covers, std::uint32_t seed);

long weyl_orbit_size(const Datum& d);

}  // namespace cmlg::oracle
