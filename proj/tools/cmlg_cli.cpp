// Command-line front end. Talks to the library only through cmlg.h.
#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "cmlg/cmlg.h"

#ifndef CMLG_DEFAULT_GOLDEN_DIR
#define CMLG_DEFAULT_GOLDEN_DIR "data/golden"
#endif

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0, kExitFailed = 1, kExitInvalid = 2;

struct CString {
    char* p = nullptr;
    ~CString() { cmlg_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

using ModelPtr = std::unique_ptr<cmlg_model, decltype(&cmlg_model_destroy)>;

// Invalid data exit 2, everything else 1.
int exit_for(cmlg_status s) { return s == CMLG_ERR_DATUM || s == CMLG_ERR_ARGUMENT ? kExitInvalid : kExitFailed; }

struct DatumArgs {
    std::string family;
    int rank = 0, node = 0;
    void add(CLI::App* app, bool required) {
        auto* f = app->add_option("--family", family, "A, B, C, D, E6 or E7");
        auto* r = app->add_option("--rank", rank, "rank n");
        auto* k = app->add_option("--node", node, "cominuscule node k (1-based)");
        if (required) {
            f->required();
            r->required();
            k->required();
        }
    }
    bool given() const { return !family.empty(); }
};

std::optional<ModelPtr> open_model(const DatumArgs& a, int& code) {
    cmlg_model* m = nullptr;
    const cmlg_status s = cmlg_model_create(a.family.c_str(), a.rank, a.node, &m);
    if (s != CMLG_OK) {
        std::cerr << "error: " << cmlg_last_error() << "\n";
        code = exit_for(s);
        return std::nullopt;
    }
    return ModelPtr(m, &cmlg_model_destroy);
}

int write_out(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream out(path);
    if (!out || !(out << text)) {
        std::cerr << "error: cannot write " << path << "\n";
        return kExitFailed;
    }
    return kExitOk;
}

int cmd_model(const DatumArgs& a, const std::string& format, const std::string& out) {
    int code = kExitOk;
    auto m = open_model(a, code);
    if (!m) return code;
    if (format != "latex") {
        if (cmlg_status s = cmlg_model_verify(m->get(), 0, nullptr); s != CMLG_OK) {
            std::cerr << "error: " << cmlg_last_error() << "\n";
            return exit_for(s);
        }
    }
    CString doc;
    if (cmlg_status s = cmlg_model_document(m->get(), format.c_str(), &doc.p); s != CMLG_OK) {
        std::cerr << "error: " << cmlg_last_error() << "\n";
        return exit_for(s);
    }
    return write_out(doc.str(), out);
}

struct CaseResult {
    std::string name;
    int status = CMLG_OK;
    std::string error;
    json checks = json::array();
};

// quantum_derivation is only claimed for types A and C up to rank 5;
// elsewhere a mismatch is reported as a finding.
bool finding_only(const json& datum, const json& check) {
    if (check.at("name") != "quantum_derivation") return false;
    const std::string fam = datum.at("family");
    return !((fam == "A" || fam == "C") && datum.at("rank").get<int>() <= 5);
}

int cmd_verify(const DatumArgs& a, bool all, int max_rank, bool oracle, bool qder, unsigned jobs) {
    json data = json::array();
    if (all) {
        CString s;
        cmlg_sweep(max_rank, &s.p);
        data = json::parse(s.str());
    } else {
        data.push_back({{"family", a.family}, {"rank", a.rank}, {"node", a.node}});
    }
    unsigned flags = 0;
    if (oracle) flags |= CMLG_VERIFY_ORACLE;
    if (qder) flags |= CMLG_VERIFY_QUANTUM_DERIVATION;

    std::vector<CaseResult> results(data.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next++) < data.size();) {
            const json& d = data[i];
            CaseResult& r = results[i];
            r.name = d.at("family").get<std::string>() + std::to_string(d.at("rank").get<int>()) + "/" +
                     std::to_string(d.at("node").get<int>());
            cmlg_model* raw = nullptr;
            cmlg_status s = cmlg_model_create(d.at("family").get<std::string>().c_str(), d.at("rank"), d.at("node"), &raw);
            ModelPtr m(raw, &cmlg_model_destroy);
            if (s == CMLG_OK) {
                r.name = cmlg_model_name(m.get());
                s = cmlg_model_verify(m.get(), flags, nullptr);
            }
            if (s != CMLG_OK) {
                r.status = s;
                r.error = cmlg_last_error();
                continue;
            }
            CString cj;
            cmlg_model_checks(m.get(), &cj.p);
            r.checks = json::parse(cj.str());
            // global checks first, then by i*
            std::stable_sort(r.checks.begin(), r.checks.end(), [](const json& x, const json& y) {
                const int ix = x["istar"].is_null() ? -1 : x["istar"].get<int>();
                const int iy = y["istar"].is_null() ? -1 : y["istar"].get<int>();
                return ix < iy;
            });
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(data.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    int code = kExitOk;
    size_t passed = 0, failed = 0, findings = 0;
    std::string first_failure;
    for (size_t i = 0; i < results.size(); ++i) {
        const CaseResult& r = results[i];
        if (r.status != CMLG_OK) {
            std::cout << "ERROR " << r.name << " " << r.error << "\n";
            if (first_failure.empty()) first_failure = r.name + ": " + r.error;
            code = std::max(code, exit_for(static_cast<cmlg_status>(r.status)));
            continue;
        }
        for (const auto& c : r.checks) {
            const std::string istar = c["istar"].is_null() ? "-" : std::to_string(c["istar"].get<int>());
            const bool pass = c["pass"];
            const bool finding = !pass && finding_only(data[i], c);
            const char* tag = pass ? "PASS" : finding ? "FINDING" : "FAIL";
            std::cout << tag << " " << r.name << " " << istar << " " << c["name"].get<std::string>();
            if (!c["detail"].get<std::string>().empty()) std::cout << " " << c["detail"].get<std::string>();
            std::cout << "\n";
            if (pass) {
                ++passed;
            } else if (finding) {
                ++findings;
            } else {
                ++failed;
                if (first_failure.empty())
                    first_failure = r.name + " i*=" + istar + " " + c["name"].get<std::string>() + ": " +
                                    c["detail"].get<std::string>();
            }
        }
    }
    std::cout << "summary: " << results.size() << " data, " << passed << " passed, " << failed << " failed, "
              << findings << " findings\n";
    if (failed && code == kExitOk) code = kExitFailed;
    if (!first_failure.empty()) std::cerr << "first failure: " << first_failure << "\n";
    return code;
}

int cmd_poset(const DatumArgs& a, int move_istar, const std::string& format, const std::string& out) {
    int code = kExitOk;
    auto m = open_model(a, code);
    if (!m) return code;
    CString doc;
    if (cmlg_status s = cmlg_model_poset(m->get(), move_istar, format.c_str(), &doc.p); s != CMLG_OK) {
        std::cerr << "error: " << cmlg_last_error() << "\n";
        return exit_for(s);
    }
    return write_out(doc.str(), out);
}

fs::path golden_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("CMLG_GOLDEN_DIR"); env && *env) return env;
    return CMLG_DEFAULT_GOLDEN_DIR;
}

int cmd_golden(const std::vector<std::string>& cases, const std::string& dir_flag, bool as_json) {
    const fs::path dir = golden_dir(dir_flag);
    std::vector<fs::path> files;
    if (cases.empty()) {
        std::error_code ec;
        for (const auto& e : fs::directory_iterator(dir, ec))
            if (e.path().extension() == ".json") files.push_back(e.path());
        if (ec) {
            std::cerr << "error: cannot read " << dir << ": " << ec.message() << "\n";
            return kExitFailed;
        }
        std::sort(files.begin(), files.end());
    } else {
        for (const auto& c : cases) files.push_back(dir / (c + ".json"));
    }
    int code = kExitOk;
    json all = json::array();
    for (const auto& f : files) {
        CString rep;
        int match = 0;
        if (cmlg_status s = cmlg_golden_compare(f.string().c_str(), &match, &rep.p); s != CMLG_OK) {
            std::cerr << "error: " << cmlg_last_error() << "\n";
            code = kExitFailed;
            continue;
        }
        const json r = json::parse(rep.str());
        if (!match) code = kExitFailed;
        if (as_json) {
            all.push_back(r);
            continue;
        }
        std::cout << "case " << r["case"].get<std::string>() << " (" << r["datum"].get<std::string>()
                  << "): " << (match ? "match" : "DIFFERS") << "\n";
        for (const auto& p : r["polynomials"]) {
            std::cout << "  " << p["kind"].get<std::string>() << " " << p["index"] << ": "
                      << (p["match"].get<bool>() ? "ok" : "differs") << " (" << p["expected_terms"]
                      << " expected monomials";
            if (!p["match"].get<bool>())
                std::cout << ", " << p["missing"].size() << " missing, " << p["extra"].size() << " extra";
            std::cout << ")\n";
            for (const auto& s : p["missing"]) std::cout << "    missing " << s.get<std::string>() << "\n";
            for (const auto& s : p["extra"]) std::cout << "    extra   " << s.get<std::string>() << "\n";
        }
    }
    if (as_json) std::cout << all.dump(2) << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Canonical LG models of cominuscule spaces"};
    app.require_subcommand(1);

    auto* model = app.add_subcommand("model", "emit the superpotential of one datum");
    DatumArgs model_datum;
    model_datum.add(model, true);
    std::string model_format = "text", model_out;
    model->add_option("--format", model_format)->check(CLI::IsMember({"json", "latex", "text"}));
    model->add_option("--out", model_out, "write to a file instead of stdout");

    auto* verify = app.add_subcommand("verify", "run the torus-level checks");
    DatumArgs verify_datum;
    verify_datum.add(verify, false);
    bool verify_all = false, with_oracle = false, with_qder = false;
    int max_rank = 7;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    verify->add_flag("--all", verify_all, "every datum of the sweep");
    verify->add_option("--max-rank", max_rank, "sweep bound")->capture_default_str();
    verify->add_flag("--with-oracle", with_oracle, "cross-check minors against weight walks");
    verify->add_flag("--with-quantum-derivation", with_qder, "compare the quantum derivation with delta");
    verify->add_option("-j,--jobs", jobs, "worker threads");

    auto* poset = app.add_subcommand("poset", "dump the minuscule poset or a move poset");
    DatumArgs poset_datum;
    poset_datum.add(poset, true);
    int move_istar = -1;
    std::string poset_format = "text", poset_out;
    poset->add_option("--move-poset", move_istar, "i* of the move poset to dump");
    poset->add_option("--format", poset_format)->check(CLI::IsMember({"dot", "json", "text"}));
    poset->add_option("--out", poset_out);

    auto* golden = app.add_subcommand("golden", "compare against the golden corpus");
    std::vector<std::string> cases;
    std::string dir;
    bool golden_json = false;
    golden->add_option("cases", cases, "case names (default: every file)");
    golden->add_option("--dir", dir, "corpus directory (else $CMLG_GOLDEN_DIR)");
    golden->add_flag("--json", golden_json, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int r = app.exit(e);
        return r == 0 ? kExitOk : kExitInvalid;
    }

    if (*model) return cmd_model(model_datum, model_format, model_out);
    if (*verify) {
        if (verify_all == verify_datum.given()) {
            std::cerr << "error: give either --all or --family/--rank/--node\n";
            return kExitInvalid;
        }
        return cmd_verify(verify_datum, verify_all, max_rank, with_oracle, with_qder, jobs);
    }
    if (*poset) return cmd_poset(poset_datum, move_istar, poset_format, poset_out);
    return cmd_golden(cases, dir, golden_json);
}
