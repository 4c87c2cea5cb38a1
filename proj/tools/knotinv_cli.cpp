// knotinv command line. Talks to the library only through knotinv.h.
//
// Exit codes: 0 ok, 1 mismatch, 2 input error, 3 pipeline error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "knotinv.h"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0, kMismatch = 1, kInput = 2, kPipeline = 3;

// Thrown to unwind to main with an exit code and a message.
struct Exit {
    int code;
    std::string msg;
};

int exit_for(kn_status s) {
    switch (s) {
    case KN_OK: return kOk;
    case KN_ERR_FRAMING:
    case KN_ERR_CERTIFICATION:
    case KN_ERR_SINGULAR:
    case KN_ERR_INTERNAL:
    case KN_ERR_DIVISION_BY_ZERO: return kPipeline;
    default: return kInput;
    }
}

void check(kn_status s, const std::string& stage) {
    if (s != KN_OK) throw Exit{exit_for(s), stage + " failed: " + kn_last_error()};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Exit{kInput, "cannot read " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Takes ownership of a library string.
json take_json(char* s) {
    std::unique_ptr<char, void (*)(char*)> hold(s, kn_string_free);
    return json::parse(s);
}

using DiagramPtr = std::unique_ptr<kn_diagram, void (*)(kn_diagram*)>;

DiagramPtr load_diagram(const std::string& pd_file, const std::string& gauss_file) {
    kn_diagram* d = nullptr;
    if (!pd_file.empty() && !gauss_file.empty()) throw Exit{kInput, "give --pd or --gauss, not both"};
    if (!pd_file.empty())
        check(kn_diagram_from_pd(read_file(pd_file).c_str(), &d), "parse " + pd_file);
    else if (!gauss_file.empty())
        check(kn_diagram_from_gauss(read_file(gauss_file).c_str(), &d), "parse " + gauss_file);
    else
        throw Exit{kInput, "a diagram is required (--pd or --gauss)"};
    return DiagramPtr(d, kn_diagram_free);
}

struct PipelineFlags {
    std::string pd, gauss, marked, auto_unknot = "descending";
    int r3_budget = 1000, size_budget = 3;
    std::uint64_t seed = 0;
    bool json_out = false;

    void attach(CLI::App* c, bool with_seed = true) {
        c->add_option("--pd", pd, "PD code file");
        c->add_option("--gauss", gauss, "signed Gauss code file");
        c->add_option("--marked", marked, "crossing ids to change, e.g. 1,3");
        c->add_option("--auto-unknot", auto_unknot, "unknotting set search when --marked is absent")
            ->check(CLI::IsMember({"descending", "minimal"}));
        c->add_option("--r3-budget", r3_budget, "Reidemeister III moves allowed in certification")->check(CLI::NonNegativeNumber);
        c->add_option("--size-budget", size_budget, "largest set tried by --auto-unknot minimal")->check(CLI::NonNegativeNumber);
        if (with_seed) c->add_option("--seed", seed, "choice seed (0 = canonical choices)");
        c->add_flag("--json", json_out, "print the JSON report");
    }

    json options() const {
        json o = {{"auto_unknot", auto_unknot}, {"r3_budget", r3_budget}, {"size_budget", size_budget}, {"seed", seed}};
        if (!marked.empty()) {
            json ids = json::array();
            std::stringstream ss(marked);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                try {
                    std::size_t used = 0;
                    long v = std::stol(tok, &used);
                    if (used != tok.size()) throw std::invalid_argument(tok);
                    ids.push_back(v);
                } catch (const std::exception&) {
                    throw Exit{kInput, "bad --marked entry '" + tok + "'"};
                }
            }
            o["marked"] = ids;
        }
        return o;
    }
};

std::string poly_text(const json& report, const char* key) { return report.value(key, std::string()); }

// Exponent-keyed JSON polynomial as "a*t^k + ..." text.
std::string poly_json_text(const json& p) {
    std::vector<std::pair<long, std::string>> terms;
    for (const auto& [k, v] : p.items()) terms.emplace_back(std::stol(k), v.is_string() ? v.get<std::string>() : v.dump());
    if (terms.empty()) return "0";
    std::sort(terms.begin(), terms.end());
    std::string out;
    for (const auto& [e, c] : terms) {
        bool neg = c[0] == '-';
        std::string mag = neg ? c.substr(1) : c;
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        if (e == 0) out += mag;
        else out += (mag == "1" ? "" : mag + "*") + (e == 1 ? std::string("t") : "t^" + std::to_string(e));
    }
    return out;
}

void print_matrix(const char* name, const json& m) {
    std::cout << name << " (" << m["rows"] << "x" << m["cols"] << ")\n";
    for (const auto& row : m["entries"]) {
        std::cout << "  [";
        bool first = true;
        for (const auto& e : row) {
            std::cout << (first ? "" : ", ") << poly_json_text(e);
            first = false;
        }
        std::cout << "]\n";
    }
}

int cmd_compute(const PipelineFlags& f) {
    DiagramPtr d = load_diagram(f.pd, f.gauss);
    char* out = nullptr;
    check(kn_compute(d.get(), f.options().dump().c_str(), &out), "pipeline");
    json r = take_json(out);
    if (f.json_out) {
        std::cout << r.dump(2) << "\n";
    } else {
        std::cout << "seed        " << r["seed"] << "\n"
                  << "marked      " << r["marked"].dump() << "\n"
                  << "epsilon     " << r["epsilon"].dump() << "\n"
                  << "tau         " << r["tau"].dump() << "\n"
                  << "route       " << r["route"].get<std::string>() << "\n"
                  << "delta       " << poly_text(r, "delta_text") << "\n"
                  << "oracle      " << poly_text(r, "oracle_delta_text") << "\n"
                  << "arf         " << r["arf"] << "\n";
        print_matrix("lambda", r["lambda"]);
        print_matrix("psi", r["psi"]);
        for (const auto& [k, v] : r["verdicts"].items()) std::cout << "  " << (v.get<bool>() ? "ok   " : "FAIL ") << k << "\n";
    }
    return r["ok"].get<bool>() ? kOk : kMismatch;
}

int cmd_oracle(const PipelineFlags& f) {
    DiagramPtr d = load_diagram(f.pd, f.gauss);
    char* out = nullptr;
    check(kn_oracle(d.get(), &out), "oracle");
    json r = take_json(out);
    if (f.json_out)
        std::cout << r.dump(2) << "\n";
    else
        std::cout << "delta  " << poly_text(r, "delta_text") << "\narf    " << r["arf"] << "\n";
    return kOk;
}

int cmd_compare(const PipelineFlags& f, unsigned trials, std::uint64_t first_seed) {
    DiagramPtr d = load_diagram(f.pd, f.gauss);
    char* out = nullptr;
    int all_equal = 0;
    check(kn_compare(d.get(), f.options().dump().c_str(), trials, first_seed, &out, &all_equal), "pipeline");
    json r = take_json(out);
    if (f.json_out) {
        std::cout << r.dump(2) << "\n";
    } else {
        std::cout << "oracle  " << poly_text(r, "oracle_delta_text") << "\n";
        for (const auto& t : r["trials"]) {
            bool eq = t["equal"].get<bool>();
            std::cout << (eq ? "  ok    seed " : "  DIFF  seed ") << t["seed"] << "  marked " << t["marked"].dump() << "  "
                      << t["delta_text"].get<std::string>() << "\n";
        }
    }
    return all_equal ? kOk : kMismatch;
}

int cmd_omega(const std::string& tower_file, bool json_out) {
    kn_tower* t = nullptr;
    check(kn_tower_from_json(read_file(tower_file).c_str(), &t), "tower " + tower_file);
    std::unique_ptr<kn_tower, void (*)(kn_tower*)> hold(t, kn_tower_free);
    char* out = nullptr;
    check(kn_omega(t, &out), "omega");
    json r = take_json(out);
    if (json_out) {
        std::cout << r.dump(2) << "\n";
    } else {
        print_matrix("omega", r["omega"]);
        std::cout << "det         " << r["det_text"].get<std::string>() << "\n"
                  << "normalized  " << r["det_normalized_text"].get<std::string>() << "\n"
                  << "arf         levine " << r["arf_levine"] << ", tower " << r["arf_tower"] << "\n"
                  << "consistent  " << (r["consistent"].get<bool>() ? "yes" : "no") << "\n";
    }
    return r["consistent"].get<bool>() ? kOk : kMismatch;
}

int cmd_blanchfield(const PipelineFlags& f, const std::string& matrix_file, long i, long j) {
    kn_matrix* m = nullptr;
    if (!matrix_file.empty()) {
        if (!f.pd.empty() || !f.gauss.empty()) throw Exit{kInput, "give a diagram or --matrix, not both"};
        check(kn_matrix_from_json(read_file(matrix_file).c_str(), &m), "matrix " + matrix_file);
    } else {
        DiagramPtr d = load_diagram(f.pd, f.gauss);
        char* out = nullptr;
        check(kn_compute(d.get(), f.options().dump().c_str(), &out), "pipeline");
        json r = take_json(out);
        check(kn_matrix_from_json(r["psi"].dump().c_str(), &m), "psi");
    }
    std::unique_ptr<kn_matrix, void (*)(kn_matrix*)> hold(m, kn_matrix_free);
    char* out = nullptr;
    if (i >= 0 || j >= 0) {
        if (i < 0 || j < 0) throw Exit{kInput, "--i and --j go together"};
        check(kn_pairing(m, static_cast<size_t>(i), static_cast<size_t>(j), &out), "pairing");
        json r = take_json(out);
        std::cout << (f.json_out ? r.dump(2) : r["text"].get<std::string>()) << "\n";
        return kOk;
    }
    check(kn_check_form(m, &out), "linking form");
    json r = take_json(out);
    if (f.json_out) {
        std::cout << r.dump(2) << "\n";
    } else {
        std::cout << "order  " << r["order_text"].get<std::string>() << "\n";
        for (const char* k : {"hermitian", "symmetric", "relations"})
            std::cout << "  " << (r[k].get<bool>() ? "ok   " : "FAIL ") << k << "\n";
    }
    return r["ok"].get<bool>() ? kOk : kMismatch;
}

// One corpus entry: NAME.pd next to NAME.json holding {"name", "delta", "arf"}.
struct CorpusRow {
    std::string name, delta_text, error;
    bool delta_ok = false, arf_ok = false, form_ok = false;
    int code = kOk;
};

CorpusRow run_corpus_entry(const fs::path& pd_path, const PipelineFlags& f) {
    CorpusRow row;
    row.name = pd_path.stem().string();
    try {
        fs::path side = pd_path;
        side.replace_extension(".json");
        json expect = json::parse(read_file(side.string()));
        if (!expect.contains("delta") || !expect.contains("arf")) throw Exit{kInput, side.string() + ": needs delta and arf"};
        DiagramPtr d = load_diagram(pd_path.string(), "");
        char* out = nullptr;
        check(kn_compute(d.get(), f.options().dump().c_str(), &out), "pipeline");
        json r = take_json(out);
        row.delta_text = r["delta_text"].get<std::string>();
        // both sides are unit-normalized, so equality up to units is plain equality
        row.delta_ok = r["delta"] == expect["delta"];
        row.arf_ok = r["arf"] == expect["arf"];
        row.form_ok = r["blanchfield"]["ok"].get<bool>() && r["verdicts"]["psi_hermitian"].get<bool>();
        row.code = row.delta_ok && row.arf_ok && row.form_ok ? kOk : kMismatch;
    } catch (const Exit& e) {
        row.error = e.msg;
        row.code = e.code;
    } catch (const json::exception& e) {
        row.error = e.what();
        row.code = kInput;
    }
    return row;
}

int cmd_corpus(const std::string& dir, unsigned jobs, const PipelineFlags& f) {
    if (!fs::is_directory(dir)) throw Exit{kInput, dir + " is not a directory"};
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".pd") files.push_back(e.path());
    std::sort(files.begin(), files.end());

    std::vector<CorpusRow> rows(files.size());
    jobs = std::max(1u, jobs);
    for (std::size_t start = 0; start < files.size(); start += jobs) {
        std::vector<std::future<CorpusRow>> batch;
        for (std::size_t k = start; k < std::min(files.size(), start + jobs); ++k)
            batch.push_back(std::async(std::launch::async, run_corpus_entry, files[k], f));
        for (std::size_t k = 0; k < batch.size(); ++k) rows[start + k] = batch[k].get();
    }

    int worst = kOk, failures = 0;
    json out = json::array();
    for (const auto& r : rows) {
        if (r.code != kOk) ++failures;
        worst = std::max(worst, r.code);
        out.push_back({{"name", r.name}, {"delta", r.delta_text}, {"delta_ok", r.delta_ok}, {"arf_ok", r.arf_ok},
                       {"form_ok", r.form_ok}, {"error", r.error}, {"pass", r.code == kOk}});
    }
    if (f.json_out) {
        std::cout << json{{"results", out}, {"failures", failures}}.dump(2) << "\n";
    } else {
        std::cout << "knot      delta  arf  form  result\n";
        for (const auto& r : rows) {
            auto mark = [](bool b) { return b ? "ok " : "-- "; };
            std::cout << std::left << std::setw(10) << r.name << mark(r.delta_ok) << "    " << mark(r.arf_ok) << "  "
                      << mark(r.form_ok) << "   " << (r.code == kOk ? "pass" : "FAIL");
            if (!r.error.empty()) std::cout << "  (" << r.error << ")";
            std::cout << "\n";
        }
        std::cout << rows.size() - static_cast<std::size_t>(failures) << "/" << rows.size() << " passed\n";
    }
    return failures ? (worst == kOk ? kMismatch : worst) : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Alexander polynomial, Blanchfield presentation and Arf invariant of knots"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kn_version()));

    PipelineFlags compute_f, oracle_f, compare_f, blanch_f, corpus_f;
    unsigned trials = 10, jobs = 1;
    std::uint64_t first_seed = 1;
    std::string tower_file, matrix_file, corpus_dir;
    bool omega_json = false;
    long pi = -1, pj = -1;

    auto* compute = app.add_subcommand("compute", "run the diagram pipeline and print delta, arf, lambda and psi");
    compute_f.attach(compute);
    auto* oracle = app.add_subcommand("oracle", "Fox calculus Alexander polynomial");
    oracle->add_option("--pd", oracle_f.pd, "PD code file");
    oracle->add_option("--gauss", oracle_f.gauss, "signed Gauss code file");
    oracle->add_flag("--json", oracle_f.json_out, "print the JSON report");
    auto* compare = app.add_subcommand("compare", "pipeline under several choice seeds against the oracle");
    compare_f.attach(compare, false);
    compare->add_option("--trials", trials, "number of seeds")->check(CLI::PositiveNumber);
    compare->add_option("--seed", first_seed, "first seed");
    auto* omega = app.add_subcommand("omega", "Omega matrix from tower data");
    omega->add_option("--tower", tower_file, "tower JSON file")->required();
    omega->add_flag("--json", omega_json, "print the JSON report");
    auto* blanch = app.add_subcommand("blanchfield", "pairing classes of a presentation matrix");
    blanch_f.attach(blanch);
    blanch->add_option("--matrix", matrix_file, "matrix JSON, or a compute report with psi");
    blanch->add_option("--i", pi, "first basis index (0-based)")->check(CLI::NonNegativeNumber);
    blanch->add_option("--j", pj, "second basis index (0-based)")->check(CLI::NonNegativeNumber);
    auto* corpus = app.add_subcommand("corpus", "check every NAME.pd against its NAME.json expectation");
    corpus_f.attach(corpus);
    corpus->add_option("--dir", corpus_dir, "corpus directory")->required();
    corpus->add_option("--jobs", jobs, "parallel jobs")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInput;
    }

    try {
        if (*compute) return cmd_compute(compute_f);
        if (*oracle) return cmd_oracle(oracle_f);
        if (*compare) return cmd_compare(compare_f, trials, first_seed);
        if (*omega) return cmd_omega(tower_file, omega_json);
        if (*blanch) return cmd_blanchfield(blanch_f, matrix_file, pi, pj);
        if (*corpus) return cmd_corpus(corpus_dir, jobs, corpus_f);
    } catch (const Exit& e) {
        std::cerr << "error: " << e.msg << "\n";
        return e.code;
    }
    return kInput;
}
