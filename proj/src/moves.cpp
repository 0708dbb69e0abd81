#include "cmlg/moves.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace cmlg {

std::vector<MovableFilter> minimal_movable_filters(const MinusculePoset& P, const ElemSet& src, const ElemSet& dst) {
    std::vector<MovableFilter> movable;
    const IntVec wdst = P.weight(dst);
    for (const ElemSet& rest : P.ideals()) {
        if (!rest.is_subset_of(src) || rest == src) continue;
        const ElemSet B = src - rest;
        // the target ideal is pinned down by its weight
        IntVec w = wdst;
        for (int b : P.elements(B))
            for (int r = 0; r < P.datum().rank; ++r) w[r] += P.cartan()[r][P.label(b) - 1];
        auto target = P.ideal_of_weight(w);
        if (!target || !dst.is_subset_of(*target)) continue;
        const ElemSet image = *target - dst;
        if (!P.label_isomorphism(B, image)) continue;
        movable.push_back({B, image});
    }
    std::vector<MovableFilter> minimal;
    for (const auto& m : movable) {
        bool keep = true;
        for (const auto& o : movable)
            if (o.filter != m.filter && o.filter.is_proper_subset_of(m.filter)) {
                keep = false;
                break;
            }
        if (keep) minimal.push_back(m);
    }
    return minimal;
}

MovePoset generate_move_poset(const MinusculePoset& P, int istar) {
    MovePoset mp;
    mp.istar = istar;
    mp.indices = index_sequence(P.datum(), istar);
    const auto seq = P.ideal_sequence(istar);
    const int c = static_cast<int>(seq.size()) - 1;

    TupleState top;
    for (int j = 0; j < c; ++j) top.push_back(P.ideal_id(seq[j]));
    std::map<TupleState, int> index{{top, 0}};
    mp.states.push_back(top);
    mp.level.push_back(0);

    for (size_t s = 0; s < mp.states.size(); ++s) {
        const TupleState cur = mp.states[s];
        for (int l = 0; l < c; ++l) {
            for (int m = l + 1; m < c; ++m) {
                const ElemSet& Il = P.ideals()[cur[l]];
                const ElemSet& Im = P.ideals()[cur[m]];
                for (auto& mv : minimal_movable_filters(P, Il, Im)) {
                    TupleState next = cur;
                    next[l] = P.ideal_id(Il - mv.filter);
                    next[m] = P.ideal_id(Im | mv.image);
                    auto [it, fresh] = index.emplace(next, static_cast<int>(mp.states.size()));
                    if (fresh) {
                        mp.states.push_back(next);
                        mp.level.push_back(mp.level[s] + 1);
                    }
                    mp.max_filter = std::max(mp.max_filter, mv.filter.count());
                    mp.moves.push_back({static_cast<int>(s), it->second, l, m, mv.filter, mv.image});
                }
            }
        }
    }

    for (const auto& e : mp.moves) {
        if (mp.level[e.to] != mp.level[e.from] + 1) {
            mp.graded = false;
            std::ostringstream os;
            os << "move " << e.from << "->" << e.to << " jumps from level " << mp.level[e.from] << " to "
               << mp.level[e.to];
            mp.diagnostics.push_back(os.str());
        }
        if (e.filter.count() > 1) {
            std::ostringstream os;
            os << "move " << e.from << "->" << e.to << " carries " << e.filter.count() << " boxes";
            mp.diagnostics.push_back(os.str());
        }
    }
    return mp;
}

PluckerPolynomial denominator_polynomial(const MovePoset& mp) {
    PluckerPolynomial p;
    for (size_t s = 0; s < mp.states.size(); ++s)
        p.add(PMonomial{0, mp.states[s]}, mp.level[s] % 2 ? -1 : 1);
    return p;
}

PluckerPolynomial denominator_polynomial(const MinusculePoset& P, int istar) {
    if (istar == 0) return PluckerPolynomial::single(P.ideal_id(P.empty_set()));
    if (istar == P.datum().node) return PluckerPolynomial::single(P.ideal_id(P.full_set()));
    return denominator_polynomial(generate_move_poset(P, istar));
}

}  // namespace cmlg
