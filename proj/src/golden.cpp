#include "cmlg/golden.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <json.hpp>

#include "cmlg/potential.hpp"

namespace cmlg {

namespace {

using nlohmann::json;

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GoldenError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw GoldenError(path + ": " + e.what());
    }
}

Datum datum_of(const json& j) {
    const auto& d = j.at("datum");
    return make_datum(d.at("family").get<std::string>(), d.at("rank").get<int>(), d.at("node").get<int>());
}

}  // namespace

std::vector<std::vector<int>> layout_elements(const MinusculePoset& P, const std::vector<std::string>& layout) {
    // j-th drawn box of a label is the j-th element of that label
    std::map<int, std::vector<int>> by_label;
    for (int b = 0; b < P.size(); ++b) by_label[P.label(b)].push_back(b);
    std::map<int, size_t> used;
    std::map<std::pair<int, int>, int> at;  // (row, column) -> element
    std::vector<std::vector<int>> rows;
    int total = 0;
    for (size_t r = 0; r < layout.size(); ++r) {
        rows.emplace_back();
        for (size_t col = 0; col < layout[r].size(); ++col) {
            const char ch = layout[r][col];
            if (ch == ':') continue;
            const int lab = ch - '0';
            auto& pool = by_label[lab];
            if (lab < 1 || lab > P.datum().rank || used[lab] >= pool.size())
                throw GoldenError("layout box '" + std::string(1, ch) + "' has no matching element");
            const int b = pool[used[lab]++];
            rows.back().push_back(b);
            at[{static_cast<int>(r), static_cast<int>(col)}] = b;
            ++total;
        }
    }
    if (total != P.size()) throw GoldenError("layout has " + std::to_string(total) + " boxes");
    for (const auto& [pos, b] : at) {
        std::vector<int> drawn;
        for (auto nb : {std::pair{pos.first, pos.second - 1}, std::pair{pos.first - 1, pos.second}})
            if (auto it = at.find(nb); it != at.end()) drawn.push_back(it->second);
        std::vector<int> covers = P.lower_covers(b);
        std::sort(drawn.begin(), drawn.end());
        std::sort(covers.begin(), covers.end());
        if (drawn != covers) throw GoldenError("layout adjacency differs from the poset at element " + std::to_string(b));
    }
    return rows;
}

Datum golden_datum(const std::string& path) { return datum_of(read_json(path)); }

GoldenCase load_golden(const std::string& path, const MinusculePoset& P) {
    const json j = read_json(path);
    GoldenCase g;
    try {
        g.name = j.at("case").get<std::string>();
        g.datum = datum_of(j);
        if (!(g.datum == P.datum())) throw GoldenError(path + ": datum does not match the poset");
        g.layout = j.at("layout").get<std::vector<std::string>>();
        g.note = j.value("note", "");
        const auto rows = layout_elements(P, g.layout);
        for (const auto& jp : j.at("polynomials")) {
            GoldenPolynomial gp;
            gp.kind = jp.at("kind").get<std::string>();
            gp.index = jp.at("index").get<int>();
            for (const auto& jt : jp.at("terms")) {
                PMonomial m{jt.value("q", 0), {}};
                for (const auto& shape : jt.at("factors")) {
                    ElemSet s = P.empty_set();
                    size_t r = 0;
                    for (int len : shape.get<std::vector<int>>()) {
                        if (r >= rows.size() || len < 0 || static_cast<size_t>(len) > rows[r].size())
                            throw GoldenError(path + ": shape does not fit the layout");
                        for (int t = 0; t < len; ++t) s.set(rows[r][t]);
                        ++r;
                    }
                    const int id = P.ideal_id(s);
                    if (id < 0) throw GoldenError(path + ": shape " + shape.dump() + " is not an order ideal");
                    m.factors.push_back(id);
                }
                gp.poly.add(std::move(m), jt.at("coeff").get<long>());
            }
            g.polynomials.push_back(std::move(gp));
        }
    } catch (const json::exception& e) {
        throw GoldenError(path + ": " + e.what());
    }
    return g;
}

std::string monomial_string(const MinusculePoset& P, const PMonomial& m, const mpz_class& c) {
    std::string s = c.get_str();
    if (m.q) s += "*q" + (m.q > 1 ? "^" + std::to_string(m.q) : std::string());
    for (int id : m.factors) s += "*p" + P.ids_string(P.ideals()[id]);
    return s;
}

std::vector<GoldenDiff> compare_golden(const MinusculePoset& P, const GoldenCase& g) {
    std::vector<GoldenDiff> out;
    for (const auto& gp : g.polynomials) {
        const PluckerPolynomial ours =
            gp.kind == "numerator" ? numerator_polynomial(P, gp.index) : denominator_polynomial(P, gp.index);
        GoldenDiff d{gp.kind, gp.index, gp.poly.size(), {}, {}};
        for (const auto& [m, c] : gp.poly.terms()) {
            auto it = ours.terms().find(m);
            if (it == ours.terms().end() || it->second != c) d.missing.push_back(monomial_string(P, m, c));
        }
        for (const auto& [m, c] : ours.terms()) {
            auto it = gp.poly.terms().find(m);
            if (it == gp.poly.terms().end() || it->second != c) d.extra.push_back(monomial_string(P, m, c));
        }
        out.push_back(std::move(d));
    }
    return out;
}

}  // namespace cmlg
