#include "cmlg/emit.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cmlg {

using nlohmann::json;

namespace {

json coeff_json(const mpz_class& c) {
    if (c.fits_slong_p()) return c.get_si();
    return c.get_str();  // never happens for the tabulated cases
}

mpz_class coeff_from(const json& j) {
    if (j.is_number_integer()) return mpz_class(j.get<long>());
    if (j.is_string()) return mpz_class(j.get<std::string>());
    throw std::invalid_argument("coefficient is neither an integer nor a string");
}

json ideal_json(const MinusculePoset& P, int id) { return P.elements(P.ideals()[id]); }

json poly_json(const MinusculePoset& P, const PluckerPolynomial& p) {
    json arr = json::array();
    for (const auto& [m, c] : p.terms()) {
        json f = json::array();
        for (int id : m.factors) f.push_back(ideal_json(P, id));
        arr.push_back({{"coeff", coeff_json(c)}, {"q", m.q}, {"factors", std::move(f)}});
    }
    return arr;
}

PluckerPolynomial poly_from(const MinusculePoset& P, const json& arr) {
    PluckerPolynomial p;
    for (const auto& t : arr) {
        PMonomial m{t.value("q", 0), {}};
        for (const auto& f : t.at("factors")) {
            ElemSet s = P.empty_set();
            for (int b : f.get<std::vector<int>>()) {
                if (b < 0 || b >= P.size()) throw std::invalid_argument("element id out of range");
                s.set(b);
            }
            const int id = P.ideal_id(s);
            if (id < 0) throw std::invalid_argument("factor is not an order ideal");
            m.factors.push_back(id);
        }
        p.add(std::move(m), coeff_from(t.at("coeff")));
    }
    return p;
}

std::string ideal_text(const MinusculePoset& P, int id) { return "p" + P.ids_string(P.ideals()[id]); }

std::string poly_text(const MinusculePoset& P, const PluckerPolynomial& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool neg = c < 0;
        const mpz_class a = neg ? mpz_class(-c) : c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        std::vector<std::string> parts;
        if (a != 1) parts.push_back(a.get_str());
        if (m.q) parts.push_back(m.q == 1 ? "q" : "q^" + std::to_string(m.q));
        for (int id : m.factors) parts.push_back(ideal_text(P, id));
        if (parts.empty()) parts.push_back("1");
        for (size_t i = 0; i < parts.size(); ++i) os << (i ? "*" : "") << parts[i];
    }
    return os.str();
}

std::string set_latex(const MinusculePoset& P, const ElemSet& s) {
    std::string ids = P.ids_string(s);
    return "\\{" + ids.substr(1, ids.size() - 2) + "\\}";
}

// Young-diagram rendering of one ideal over a fixed layout.
std::string young(const BoxLayout& L, const ElemSet& s) {
    if (s.none()) return "\\varnothing";
    int last = -1;
    for (int r = 0; r < static_cast<int>(L.rows.size()); ++r)
        for (auto [col, b] : L.rows[r])
            if (s[b]) last = r;
    std::string out = "\\young(";
    for (int r = 0; r <= last; ++r) {
        if (r) out += ',';
        const auto& row = L.rows[r];
        if (row.empty()) continue;
        out += std::string(row.front().first, ':');
        for (auto [col, b] : row)
            if (s[b]) out += '~';
    }
    return out + ")";
}

std::string latex_poly(const MinusculePoset& P, const std::optional<BoxLayout>& L, const PluckerPolynomial& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool neg = c < 0;
        const mpz_class a = neg ? mpz_class(-c) : c;
        os << (first ? (neg ? "-" : "") : (neg ? "-" : "+"));
        first = false;
        if (a != 1) os << a.get_str();
        if (m.q) os << (m.q == 1 ? "q" : "q^{" + std::to_string(m.q) + "}");
        for (int id : m.factors) {
            const ElemSet& s = P.ideals()[id];
            os << "p_{" << (L ? young(*L, s) : set_latex(P, s)) << "}";
        }
        if (a == 1 && !m.q && m.factors.empty()) os << "1";
    }
    return os.str();
}

}  // namespace

json checks_json(const std::vector<Check>& checks) {
    json arr = json::array();
    for (const auto& c : checks) {
        json j{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
        j["istar"] = c.istar < 0 ? json(nullptr) : json(c.istar);
        arr.push_back(std::move(j));
    }
    return arr;
}

json poset_json(const MinusculePoset& P) {
    json arr = json::array();
    for (int b = 0; b < P.size(); ++b) arr.push_back({{"id", b}, {"label", P.label(b)}, {"covers", P.lower_covers(b)}});
    return arr;
}

json model_json(const MinusculePoset& P, const Superpotential& W, const std::vector<Check>& checks) {
    const Datum& d = P.datum();
    json doc;
    doc["datum"] = {{"family", family_name(d.family)}, {"rank", d.rank}, {"node", d.node}, {"name", datum_name(d)}};
    doc["poset"] = poset_json(P);
    json terms = json::array();
    for (const auto& t : W.terms)
        terms.push_back({{"index", t.index},
                         {"quantum", t.quantum},
                         {"numerator", poly_json(P, t.numerator)},
                         {"denominator", poly_json(P, t.denominator)}});
    doc["terms"] = std::move(terms);
    doc["checks"] = checks_json(checks);
    return doc;
}

Superpotential superpotential_from_json(const MinusculePoset& P, const json& doc) {
    try {
        const auto& dj = doc.at("datum");
        const Datum d = make_datum(dj.at("family").get<std::string>(), dj.at("rank").get<int>(), dj.at("node").get<int>());
        if (!(d == P.datum())) throw std::invalid_argument("document datum does not match the poset");
        Superpotential W{d, {}};
        for (const auto& tj : doc.at("terms")) {
            PotentialTerm t;
            t.index = tj.at("index").get<int>();
            t.quantum = tj.at("quantum").get<bool>();
            t.numerator = poly_from(P, tj.at("numerator"));
            t.denominator = poly_from(P, tj.at("denominator"));
            W.terms.push_back(std::move(t));
        }
        return W;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed model document: ") + e.what());
    }
}

std::string model_text(const MinusculePoset& P, const Superpotential& W, const std::vector<Check>& checks) {
    std::ostringstream os;
    os << "datum " << datum_name(P.datum()) << ": " << P.size() << " elements, " << P.ideals().size()
       << " ideals\n";
    os << "W = sum of " << W.terms.size() << " terms\n";
    for (const auto& t : W.terms) {
        os << "[" << t.index << "]" << (t.quantum ? " (quantum)" : "") << "  (" << poly_text(P, t.numerator)
           << ") / (" << poly_text(P, t.denominator) << ")\n";
    }
    if (!checks.empty()) {
        size_t bad = 0;
        for (const auto& c : checks) bad += !c.pass;
        os << "checks: " << checks.size() - bad << "/" << checks.size() << " pass\n";
        for (const auto& c : checks)
            if (!c.pass) os << "  FAIL " << c.name << " i*=" << c.istar << " " << c.detail << "\n";
    }
    return os.str();
}

std::optional<BoxLayout> find_box_layout(const MinusculePoset& P) {
    const int N = P.size();
    std::vector<std::pair<int, int>> cell(N);
    std::map<std::pair<int, int>, int> at;

    auto fits = [&](int b, std::pair<int, int> pos) {
        if (at.count(pos)) return false;
        // later boxes never sit left of or above an earlier one
        if (at.count({pos.first, pos.second + 1}) || at.count({pos.first + 1, pos.second})) return false;
        std::vector<int> drawn;
        for (auto nb : {std::pair{pos.first, pos.second - 1}, std::pair{pos.first - 1, pos.second}})
            if (auto it = at.find(nb); it != at.end()) drawn.push_back(it->second);
        std::vector<int> covers = P.lower_covers(b);
        std::sort(drawn.begin(), drawn.end());
        std::sort(covers.begin(), covers.end());
        return drawn == covers;
    };

    // ids are a linear extension, so covers are always placed first
    long budget = 200000;
    std::function<bool(int)> place = [&](int b) -> bool {
        if (b == N) return true;
        if (--budget < 0) return false;
        std::set<std::pair<int, int>> options;
        const auto& lc = P.lower_covers(b);
        if (lc.empty()) {
            if (b == 0) options.insert({0, 0});
        } else {
            for (int a : lc) {
                options.insert({cell[a].first, cell[a].second + 1});
                options.insert({cell[a].first + 1, cell[a].second});
            }
        }
        for (auto pos : options) {
            if (pos.first < 0 || pos.second < 0 || !fits(b, pos)) continue;
            cell[b] = pos;
            at[pos] = b;
            if (place(b + 1)) return true;
            at.erase(pos);
        }
        return false;
    };
    if (N == 0 || !place(0)) return std::nullopt;

    BoxLayout L;
    for (const auto& [pos, b] : at) {
        if (static_cast<int>(L.rows.size()) <= pos.first) L.rows.resize(pos.first + 1);
        auto& row = L.rows[pos.first];
        if (!row.empty() && row.back().first + 1 != pos.second) return std::nullopt;  // gap inside a row
        row.push_back({pos.second, b});
    }
    return L;
}

std::vector<std::string> layout_strings(const MinusculePoset& P, const BoxLayout& L) {
    std::vector<std::string> out;
    for (const auto& row : L.rows) {
        std::string s(row.empty() ? 0 : row.front().first, ':');
        for (auto [col, b] : row) s += static_cast<char>('0' + P.label(b));
        out.push_back(std::move(s));
    }
    return out;
}

std::string model_latex(const MinusculePoset& P, const Superpotential& W) {
    const auto L = find_box_layout(P);
    std::ostringstream os;
    os << "% " << datum_name(P.datum()) << "\n";
    if (!L) os << "% no box layout found; ideals are written as element sets\n";
    os << "\\begin{align*}\n\\mathcal{W} &=";
    bool first = true;
    for (const auto& t : W.terms) {
        os << (first ? " " : "\\\\\n&\\quad+ ") << "\\frac{" << latex_poly(P, L, t.numerator) << "}{"
           << latex_poly(P, L, t.denominator) << "}";
        first = false;
    }
    os << "\n\\end{align*}\n";
    return os.str();
}

std::string poset_text(const MinusculePoset& P) {
    std::ostringstream os;
    os << "poset " << datum_name(P.datum()) << ": " << P.size() << " elements\n";
    for (int b = 0; b < P.size(); ++b) {
        os << b << " label " << P.label(b) << " covers";
        for (int a : P.lower_covers(b)) os << " " << a;
        os << "\n";
    }
    return os.str();
}

std::string poset_dot(const MinusculePoset& P) {
    std::ostringstream os;
    os << "digraph lambda {\n  rankdir=BT;\n";
    for (int b = 0; b < P.size(); ++b) os << "  e" << b << " [label=\"" << P.label(b) << "\"];\n";
    for (int b = 0; b < P.size(); ++b)
        for (int a : P.lower_covers(b)) os << "  e" << a << " -> e" << b << ";\n";
    os << "}\n";
    return os.str();
}

json move_poset_json(const MinusculePoset& P, const MovePoset& mp) {
    json states = json::array();
    for (size_t s = 0; s < mp.states.size(); ++s) {
        json tuple = json::array();
        for (int id : mp.states[s]) tuple.push_back(ideal_json(P, id));
        states.push_back({{"id", s}, {"level", mp.level[s]}, {"ideals", std::move(tuple)}});
    }
    json moves = json::array();
    for (const auto& e : mp.moves)
        moves.push_back({{"from", e.from},
                         {"to", e.to},
                         {"source", e.src},
                         {"target", e.dst},
                         {"filter", P.elements(e.filter)},
                         {"image", P.elements(e.image)}});
    return {{"datum", datum_name(P.datum())},
            {"istar", mp.istar},
            {"indices", mp.indices},
            {"graded", mp.graded},
            {"states", std::move(states)},
            {"moves", std::move(moves)}};
}

std::string move_poset_text(const MinusculePoset& P, const MovePoset& mp) {
    std::ostringstream os;
    os << "move poset " << datum_name(P.datum()) << " i*=" << mp.istar << ": " << mp.states.size() << " states, "
       << mp.moves.size() << " moves, " << (mp.graded ? "graded" : "not graded") << "\n";
    os << "indices";
    for (int i : mp.indices) os << " " << i;
    os << "\n";
    for (size_t s = 0; s < mp.states.size(); ++s) {
        os << s << " level " << mp.level[s] << ":";
        for (int id : mp.states[s]) os << " " << P.ids_string(P.ideals()[id]);
        os << "\n";
    }
    for (const auto& e : mp.moves)
        os << e.from << " -> " << e.to << " (" << e.src + 1 << "," << e.dst + 1 << ") " << P.ids_string(e.filter)
           << "\n";
    for (const auto& msg : mp.diagnostics) os << "note: " << msg << "\n";
    return os.str();
}

std::string move_poset_dot(const MinusculePoset& P, const MovePoset& mp) {
    std::ostringstream os;
    os << "digraph moves {\n";
    for (size_t s = 0; s < mp.states.size(); ++s) {
        os << "  s" << s << " [label=\"";
        for (size_t j = 0; j < mp.states[s].size(); ++j)
            os << (j ? " " : "") << P.ids_string(P.ideals()[mp.states[s][j]]);
        os << "\"];\n";
    }
    for (const auto& e : mp.moves)
        os << "  s" << e.from << " -> s" << e.to << " [label=\"" << e.src + 1 << "," << e.dst + 1 << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace cmlg
