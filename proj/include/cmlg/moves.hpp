#pragma once

#include <string>
#include <vector>

#include "cmlg/plucker.hpp"
#include "cmlg/poset.hpp"

namespace cmlg {

struct MovableFilter {
    ElemSet filter;  // upward closed inside the source ideal
    ElemSet image;   // label-isomorphic copy attached to the target
};

// Inclusion-minimal filters of src that can be re-attached on top of dst.
std::vector<MovableFilter> minimal_movable_filters(const MinusculePoset& P, const ElemSet& src, const ElemSet& dst);

using TupleState = std::vector<int>;  // ideal ids, one per component

struct MoveEvent {
    int from = 0, to = 0;  // state indices
    int src = 0, dst = 0;  // components, src < dst
    ElemSet filter, image;
};

struct MovePoset {
    int istar = 0;
    std::vector<int> indices;  // i_1 .. i_{c+1}
    std::vector<TupleState> states;  // states[0] is the top
    std::vector<int> level;
    std::vector<MoveEvent> moves;
    bool graded = true;
    size_t max_filter = 0;
    std::vector<std::string> diagnostics;
};

MovePoset generate_move_poset(const MinusculePoset& P, int istar);
PluckerPolynomial denominator_polynomial(const MovePoset& mp);
// Also covers i* = 0 (p_empty) and i* = k (p_full).
PluckerPolynomial denominator_polynomial(const MinusculePoset& P, int istar);

}  // namespace cmlg
