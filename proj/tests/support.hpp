#pragma once

#include <string>
#include <vector>

#include "cmlg/golden.hpp"
#include "cmlg/poset.hpp"

namespace cmlg::test {

// Ideals drawn as row lengths over a labelled box layout, as in the
// golden files.
struct Drawing {
    const MinusculePoset& P;
    std::vector<std::vector<int>> rows;

    Drawing(const MinusculePoset& p, const std::vector<std::string>& layout)
        : P(p), rows(layout_elements(p, layout)) {}

    ElemSet shape(const std::vector<int>& lens) const {
        ElemSet s = P.empty_set();
        for (size_t r = 0; r < lens.size(); ++r)
            for (int j = 0; j < lens[r]; ++j) s.set(rows.at(r).at(j));
        return s;
    }
    int id(const std::vector<int>& lens) const { return P.ideal_id(shape(lens)); }
};

inline std::string golden_path(const std::string& name) { return std::string(CMLG_GOLDEN_DIR) + "/" + name + ".json"; }

// Layouts of the displayed posets.
inline const std::vector<std::string> kLG36 = {"3", "23", "123"};
inline const std::vector<std::string> kLG48 = {"4", "34", "234", "1234"};
inline const std::vector<std::string> kLG510 = {"5", "45", "345", "2345", "12345"};
inline const std::vector<std::string> kQ8 = {"123", ":421"};

}  // namespace cmlg::test
