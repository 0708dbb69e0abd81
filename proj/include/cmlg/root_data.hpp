#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cmlg {

enum class Family { A, B, C, D, E6, E7 };

// Nodes are numbered 1..n (Bourbaki); vectors indexed by node-1.
using IntVec = std::vector<int>;
using Matrix = std::vector<IntVec>;

struct Datum {
    Family family;
    int rank;
    int node;

    bool operator==(const Datum&) const = default;
};

class DatumError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

std::string family_name(Family f);
Family parse_family(const std::string& s);  // throws DatumError

// Validates rank bounds and the cominuscule condition.
Datum make_datum(Family f, int rank, int node);
Datum make_datum(const std::string& family, int rank, int node);
std::string datum_name(const Datum& d);  // e.g. "E7/7"

// C[i][j] with C[i][i]=2. Column i is the simple root alpha_i of the dual
// group in its fundamental weight basis (C_2 = [[2,-1],[-2,2]]).
Matrix cartan_matrix(const Datum& d);
Matrix cartan_matrix(Family f, int rank);

IntVec highest_root(const Datum& d);
IntVec comin_coefficients(const Datum& d);

// sigma_j as a permutation of 1..n stored at [1..n]; entry 0 unused.
std::vector<int> dynkin_involution(const Datum& d, int removed);

// (i_1, ..., i_{c+1}) for i* != k.
std::vector<int> index_sequence(const Datum& d, int istar);

IntVec fundamental_weight(int n, int i);
IntVec simple_root(const Matrix& C, int i);
IntVec reflect(const Matrix& C, int i, IntVec lambda);
// Applies the letters left to right.
IntVec weyl_apply(const Matrix& C, const std::vector<int>& word, IntVec lambda);

// Anticanonical degree as tabulated per family.
int index_value(const Datum& d);

// All cominuscule data of the verification sweep with rank <= max_rank.
std::vector<Datum> sweep(int max_rank);

}  // namespace cmlg
