#include "cmlg/cmlg.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "cmlg/emit.hpp"
#include "cmlg/golden.hpp"

using namespace cmlg;

struct cmlg_model {
    explicit cmlg_model(const Datum& d) : P(d), W(assemble_superpotential(P)), name(datum_name(d)) {}
    MinusculePoset P;
    Superpotential W;
    std::string name;
    std::vector<Check> checks;
};

namespace {

thread_local std::string last_error;

cmlg_status fail(cmlg_status s, const std::string& msg) {
    last_error = msg;
    return s;
}

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p) std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

cmlg_status hand_out(const std::string& s, char** out) {
    *out = dup(s);
    return *out ? CMLG_OK : fail(CMLG_ERR_INTERNAL, "out of memory");
}

// Maps exceptions to status codes; every entry point runs through here.
template <class F>
cmlg_status guarded(F&& f) {
    last_error.clear();
    try {
        return f();
    } catch (const DatumError& e) {
        return fail(CMLG_ERR_DATUM, e.what());
    } catch (const GoldenError& e) {
        return fail(CMLG_ERR_IO, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(CMLG_ERR_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(CMLG_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(CMLG_ERR_INTERNAL, "unknown exception");
    }
}

}  // namespace

extern "C" {

cmlg_status cmlg_model_create(const char* family, int rank, int node, cmlg_model** out) {
    return guarded([&] {
        if (!family || !out) return fail(CMLG_ERR_ARGUMENT, "null argument");
        *out = nullptr;
        const Datum d = make_datum(family, rank, node);
        *out = new cmlg_model(d);
        return CMLG_OK;
    });
}

void cmlg_model_destroy(cmlg_model* model) { delete model; }

const char* cmlg_model_name(const cmlg_model* model) { return model ? model->name.c_str() : ""; }

int cmlg_model_poset_size(const cmlg_model* model) { return model ? model->P.size() : -1; }

cmlg_status cmlg_model_verify(cmlg_model* model, unsigned flags, int* all_pass) {
    return guarded([&] {
        if (!model) return fail(CMLG_ERR_ARGUMENT, "null model");
        VerifyOptions opt;
        opt.with_oracle = flags & CMLG_VERIFY_ORACLE;
        opt.with_quantum_derivation = flags & CMLG_VERIFY_QUANTUM_DERIVATION;
        auto rep = verify_model(model->P, model->W, opt);
        model->checks = std::move(rep.checks);
        if (all_pass) {
            *all_pass = 1;
            for (const auto& c : model->checks) *all_pass &= c.pass;
        }
        return CMLG_OK;
    });
}

cmlg_status cmlg_model_checks(const cmlg_model* model, char** out) {
    return guarded([&] {
        if (!model || !out) return fail(CMLG_ERR_ARGUMENT, "null argument");
        return hand_out(checks_json(model->checks).dump(), out);
    });
}

cmlg_status cmlg_model_document(const cmlg_model* model, const char* format, char** out) {
    return guarded([&] {
        if (!model || !format || !out) return fail(CMLG_ERR_ARGUMENT, "null argument");
        const std::string f = format;
        if (f == "json") return hand_out(model_json(model->P, model->W, model->checks).dump(2) + "\n", out);
        if (f == "text") return hand_out(model_text(model->P, model->W, model->checks), out);
        if (f == "latex") return hand_out(model_latex(model->P, model->W), out);
        return fail(CMLG_ERR_ARGUMENT, "unknown format '" + f + "'");
    });
}

cmlg_status cmlg_model_poset(const cmlg_model* model, int istar, const char* format, char** out) {
    return guarded([&] {
        if (!model || !format || !out) return fail(CMLG_ERR_ARGUMENT, "null argument");
        const std::string f = format;
        if (f != "json" && f != "text" && f != "dot") return fail(CMLG_ERR_ARGUMENT, "unknown format '" + f + "'");
        const MinusculePoset& P = model->P;
        if (istar < 0) {
            if (f == "json") return hand_out(poset_json(P).dump(2) + "\n", out);
            return hand_out(f == "text" ? poset_text(P) : poset_dot(P), out);
        }
        if (istar == 0 || istar > P.datum().rank || istar == P.datum().node)
            return fail(CMLG_ERR_ARGUMENT, "move posets exist for i* in [1,n] other than the node");
        const MovePoset mp = generate_move_poset(P, istar);
        if (f == "json") return hand_out(move_poset_json(P, mp).dump(2) + "\n", out);
        return hand_out(f == "text" ? move_poset_text(P, mp) : move_poset_dot(P, mp), out);
    });
}

cmlg_status cmlg_golden_compare(const char* path, int* matches, char** out) {
    return guarded([&] {
        if (!path || !out) return fail(CMLG_ERR_ARGUMENT, "null argument");
        const MinusculePoset P(golden_datum(path));
        const GoldenCase g = load_golden(path, P);
        nlohmann::json rep{{"case", g.name}, {"datum", datum_name(g.datum)}, {"note", g.note}};
        nlohmann::json diffs = nlohmann::json::array();
        bool ok = true;
        for (const auto& d : compare_golden(P, g)) {
            ok = ok && d.ok();
            diffs.push_back({{"kind", d.kind},
                             {"index", d.index},
                             {"expected_terms", d.expected_terms},
                             {"match", d.ok()},
                             {"missing", d.missing},
                             {"extra", d.extra}});
        }
        rep["polynomials"] = std::move(diffs);
        rep["match"] = ok;
        if (matches) *matches = ok;
        return hand_out(rep.dump(2) + "\n", out);
    });
}

cmlg_status cmlg_sweep(int max_rank, char** out) {
    return guarded([&] {
        if (!out) return fail(CMLG_ERR_ARGUMENT, "null argument");
        nlohmann::json arr = nlohmann::json::array();
        for (const Datum& d : sweep(max_rank))
            arr.push_back({{"family", family_name(d.family)}, {"rank", d.rank}, {"node", d.node}});
        return hand_out(arr.dump(), out);
    });
}

const char* cmlg_last_error(void) { return last_error.c_str(); }

void cmlg_string_free(char* s) { std::free(s); }

}  // extern "C"
