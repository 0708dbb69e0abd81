#include "cmlg/poset.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace cmlg {

std::vector<int> reduced_word_wP(const Datum& d) {
    const Matrix C = cartan_matrix(d);
    const int n = d.rank;
    IntVec mu(n, 0);
    mu[d.node - 1] = -1;
    std::vector<int> word;
    for (;;) {
        int i = 0;
        while (i < n && mu[i] >= 0) ++i;
        if (i == n) break;
        mu = reflect(C, i + 1, std::move(mu));
        word.push_back(i + 1);
        if (word.size() > 4096) throw std::logic_error("greedy word does not terminate");
    }
    return word;
}

MinusculePoset::MinusculePoset(const Datum& d) : datum_(d), cartan_(cartan_matrix(d)) {
    labels_ = reduced_word_wP(d);
    const int N = size();
    auto commute = [&](int a, int b) { return cartan_[a - 1][b - 1] == 0; };

    below_.assign(N, ElemSet(N));
    for (int j = 0; j < N; ++j) {
        below_[j].set(j);
        for (int i = 0; i < j; ++i)
            if (!commute(labels_[i], labels_[j])) below_[j] |= below_[i];
    }
    lower_.assign(N, {});
    upper_.assign(N, {});
    for (int j = 0; j < N; ++j)
        for (int i = 0; i < j; ++i) {
            if (!below_[j][i]) continue;
            bool cover = true;
            for (int l = i + 1; l < j && cover; ++l)
                if (below_[j][l] && below_[l][i]) cover = false;
            if (cover) {
                lower_[j].push_back(i);
                upper_[i].push_back(j);
            }
        }

    // heap sanity: one minimal element, equal labels form chains
    for (int j = 1; j < N; ++j)
        if (lower_[j].empty()) throw std::logic_error("heap has several minimal elements");
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b)
            if (labels_[a] == labels_[b] && !below_[b][a]) throw std::logic_error("equal labels not comparable");

    // order ideals by breadth-first box addition
    std::map<ElemSet, int> seen;
    std::deque<ElemSet> queue{ElemSet(N)};
    std::vector<ElemSet> all;
    seen.emplace(ElemSet(N), 0);
    while (!queue.empty()) {
        ElemSet cur = queue.front();
        queue.pop_front();
        all.push_back(cur);
        for (int b = 0; b < N; ++b) {
            if (cur[b]) continue;
            bool ok = std::all_of(lower_[b].begin(), lower_[b].end(), [&](int a) { return cur[a]; });
            if (!ok) continue;
            ElemSet next = cur;
            next.set(b);
            if (seen.emplace(next, 0).second) queue.push_back(next);
        }
    }
    std::sort(all.begin(), all.end(), [&](const ElemSet& x, const ElemSet& y) {
        if (x.count() != y.count()) return x.count() < y.count();
        return elements(x) < elements(y);
    });
    ideals_ = std::move(all);
    for (int t = 0; t < static_cast<int>(ideals_.size()); ++t) {
        ideal_index_[ideals_[t]] = t;
        if (!weight_index_.emplace(weight(ideals_[t]), t).second)
            throw std::logic_error("two ideals share a weight");
    }
}

ElemSet MinusculePoset::full_set() const {
    ElemSet s(size());
    s.set();
    return s;
}

bool MinusculePoset::is_ideal(const ElemSet& s) const {
    for (int b = 0; b < size(); ++b)
        if (s[b])
            for (int a : lower_[b])
                if (!s[a]) return false;
    return true;
}

bool MinusculePoset::is_filter_of(const ElemSet& f, const ElemSet& ideal) const {
    if (!f.is_subset_of(ideal)) return false;
    for (int b = 0; b < size(); ++b)
        if (f[b])
            for (int c : upper_[b])
                if (ideal[c] && !f[c]) return false;
    return true;
}

IntVec MinusculePoset::weight(const ElemSet& s) const {
    const int n = datum_.rank;
    IntVec w(n, 0);
    w[datum_.node - 1] = -1;
    for (int b = 0; b < size(); ++b)
        if (s[b])
            for (int r = 0; r < n; ++r) w[r] += cartan_[r][labels_[b] - 1];
    return w;
}

int MinusculePoset::ideal_id(const ElemSet& ideal) const {
    auto it = ideal_index_.find(ideal);
    return it == ideal_index_.end() ? -1 : it->second;
}

std::optional<ElemSet> MinusculePoset::ideal_of_weight(const IntVec& w) const {
    auto it = weight_index_.find(w);
    if (it == weight_index_.end()) return std::nullopt;
    return ideals_[it->second];
}

std::optional<ElemSet> MinusculePoset::add_box(const ElemSet& ideal, int j) const {
    for (int b = 0; b < size(); ++b) {
        if (ideal[b] || labels_[b] != j) continue;
        // smallest missing element with label j; equal labels form a chain
        for (int a : lower_[b])
            if (!ideal[a]) return std::nullopt;
        ElemSet next = ideal;
        next.set(b);
        return next;
    }
    return std::nullopt;
}

ElemSet MinusculePoset::saturate_avoiding(const ElemSet& start, int avoid) const {
    ElemSet cur = start;
    // lower covers have smaller ids, so one ascending pass reaches the fixpoint
    for (int b = 0; b < size(); ++b) {
        if (cur[b] || labels_[b] == avoid) continue;
        if (std::all_of(lower_[b].begin(), lower_[b].end(), [&](int a) { return cur[a]; })) cur.set(b);
    }
    return cur;
}

std::vector<std::vector<int>> MinusculePoset::embeddings(const ElemSet& ideal) const {
    const std::vector<int> src = elements(ideal);
    const int N = size();
    std::vector<int> image(N, -1);
    ElemSet used(N);
    std::vector<std::vector<int>> out;
    std::vector<int> cur;

    auto rec = [&](auto&& self, size_t t) -> void {
        if (t == src.size()) {
            out.push_back(cur);
            return;
        }
        const int b = src[t];
        for (int c = 0; c < N; ++c) {
            if (used[c] || labels_[c] != labels_[b]) continue;
            bool ok = true;
            for (int a : lower_[b])
                if (!(below_[c][image[a]] && image[a] != c)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            used.set(c);
            image[b] = c;
            cur.push_back(c);
            self(self, t + 1);
            cur.pop_back();
            image[b] = -1;
            used.reset(c);
        }
    };
    rec(rec, 0);
    return out;
}

std::optional<std::vector<int>> MinusculePoset::label_isomorphism(const ElemSet& s, const ElemSet& t) const {
    if (s.count() != t.count()) return std::nullopt;
    const int N = size();
    std::vector<int> phi(N, -1);
    std::map<int, std::vector<int>> by_label_t;
    for (int b = 0; b < N; ++b)
        if (t[b]) by_label_t[labels_[b]].push_back(b);
    std::map<int, size_t> used;
    for (int b = 0; b < N; ++b) {
        if (!s[b]) continue;
        auto& pool = by_label_t[labels_[b]];
        size_t& r = used[labels_[b]];
        if (r >= pool.size()) return std::nullopt;
        phi[b] = pool[r++];
    }
    for (auto& [lab, pool] : by_label_t)
        if (used[lab] != pool.size()) return std::nullopt;
    for (int a = 0; a < N; ++a) {
        if (!s[a]) continue;
        for (int b = 0; b < N; ++b)
            if (s[b] && below_[b][a] != below_[phi[b]][phi[a]]) return std::nullopt;
    }
    return phi;
}

std::optional<ElemSet> MinusculePoset::isomorphic_ideal(const ElemSet& s) const {
    IntVec w(datum_.rank, 0);
    w[datum_.node - 1] = -1;
    for (int b = 0; b < size(); ++b)
        if (s[b])
            for (int r = 0; r < datum_.rank; ++r) w[r] += cartan_[r][labels_[b] - 1];
    auto cand = ideal_of_weight(w);
    if (!cand || !label_isomorphism(s, *cand)) return std::nullopt;
    return cand;
}

std::vector<ElemSet> MinusculePoset::ideal_sequence(int istar) const {
    std::vector<ElemSet> out;
    ElemSet cur = empty_set();
    for (int ij : index_sequence(datum_, istar)) {
        cur = saturate_avoiding(cur, ij);
        out.push_back(cur);
    }
    if (out.back() != full_set()) throw std::logic_error("ideal sequence does not end at the full poset");
    return out;
}

std::pair<ElemSet, ElemSet> MinusculePoset::quantum_ideals() const {
    ElemSet first = empty_set();
    first.set(0);
    ElemSet ipp = saturate_avoiding(first, datum_.node);
    auto ip = isomorphic_ideal(full_set() - ipp);
    if (!ip) throw std::logic_error("no ideal isomorphic to the complement of I''");
    return {ipp, *ip};
}

std::vector<int> MinusculePoset::elements(const ElemSet& s) const {
    std::vector<int> v;
    for (auto b = s.find_first(); b != ElemSet::npos; b = s.find_next(b)) v.push_back(static_cast<int>(b));
    return v;
}

std::string MinusculePoset::ids_string(const ElemSet& s) const {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (int b : elements(s)) {
        os << (first ? "" : ",") << b;
        first = false;
    }
    os << ']';
    return os.str();
}

}  // namespace cmlg
