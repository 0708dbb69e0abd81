#pragma once

#include <boost/dynamic_bitset.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmlg/root_data.hpp"

namespace cmlg {

using ElemSet = boost::dynamic_bitset<>;

// Heap of the minimal coset representative w_P. Element ids follow the
// greedy reduced word, so id order is a linear extension.
class MinusculePoset {
  public:
    explicit MinusculePoset(const Datum& d);

    const Datum& datum() const { return datum_; }
    const Matrix& cartan() const { return cartan_; }
    int size() const { return static_cast<int>(labels_.size()); }
    int label(int b) const { return labels_[b]; }
    const std::vector<int>& labels() const { return labels_; }
    const std::vector<int>& word() const { return labels_; }
    const std::vector<int>& lower_covers(int b) const { return lower_[b]; }
    const std::vector<int>& upper_covers(int b) const { return upper_[b]; }
    bool leq(int a, int b) const { return below_[b][a]; }

    ElemSet empty_set() const { return ElemSet(size()); }
    ElemSet full_set() const;
    bool is_ideal(const ElemSet& s) const;
    bool is_filter_of(const ElemSet& f, const ElemSet& ideal) const;

    // -omega_k plus the roots of the labels in s (dual weight lattice).
    IntVec weight(const ElemSet& s) const;

    // Canonical ideal list: by size, then lexicographic on sorted ids.
    const std::vector<ElemSet>& ideals() const { return ideals_; }
    int ideal_id(const ElemSet& ideal) const;  // -1 if not an ideal
    std::optional<ElemSet> ideal_of_weight(const IntVec& w) const;

    std::optional<ElemSet> add_box(const ElemSet& ideal, int j) const;
    // Largest ideal reachable from 'start' adding only labels != avoid.
    ElemSet saturate_avoiding(const ElemSet& start, int avoid) const;

    // Each embedding lists images of the elements of 'ideal' in id order.
    std::vector<std::vector<int>> embeddings(const ElemSet& ideal) const;

    // Label- and order-isomorphism from the subposet s to the ideal t
    // (r-th element of a label goes to the r-th), if it exists.
    std::optional<std::vector<int>> label_isomorphism(const ElemSet& s, const ElemSet& t) const;
    // The ideal label-order-isomorphic to s, if any.
    std::optional<ElemSet> isomorphic_ideal(const ElemSet& s) const;

    std::vector<ElemSet> ideal_sequence(int istar) const;
    // (I'', I')
    std::pair<ElemSet, ElemSet> quantum_ideals() const;

    std::vector<int> elements(const ElemSet& s) const;
    std::string ids_string(const ElemSet& s) const;

  private:
    Datum datum_;
    Matrix cartan_;
    std::vector<int> labels_;
    std::vector<std::vector<int>> lower_, upper_;
    std::vector<ElemSet> below_;  // below_[b][a] iff a <= b
    std::vector<ElemSet> ideals_;
    std::map<ElemSet, int> ideal_index_;
    std::map<IntVec, int> weight_index_;
};

// Greedy raise from -omega_k, smallest eligible node first.
std::vector<int> reduced_word_wP(const Datum& d);

}  // namespace cmlg
