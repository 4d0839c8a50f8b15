// kmp: exact Poincare series of Kac-Moody Weyl groups from Cartan matrices
// or Coxeter graphs, plus the derived invariants and conjecture checks.
//
// Exit codes: 0 success, 1 input error, 2 internal theorem-violation
// diagnostic (indicates a bug, never a user error).

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "kmp/invariants.hpp"
#include "kmp/json_io.hpp"
#include "kmp/weyl.hpp"

namespace fs = std::filesystem;
using namespace kmp;

namespace {

struct Options {
    std::string input;
    int order = 40;
    int depth = 10;
    size_t cap = kDefaultBfsCap;
    std::string subset;
    std::string q;
    int n = 0;
    bool pretty = false;
    int jobs = 1;
};

std::vector<int> parse_subset(const std::string& s, int rank) {
    std::vector<int> idx;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        int v;
        try {
            v = std::stoi(tok);
        } catch (...) {
            throw InputError("bad subset entry '" + tok + "'");
        }
        if (v < 1 || v > rank) throw InputError("subset index " + tok + " out of range 1.." + std::to_string(rank));
        idx.push_back(v - 1);
    }
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return idx;
}

Rat parse_rational(const std::string& s) {
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (...) {
        throw InputError("bad rational '" + s + "' (use p or p/q)");
    }
}

// --- cosmetic factored rendering for --pretty ---------------------------

// Greedily split off (1 - t^k) and (1 + t + ... + t^(k-1)) factors; the
// canonical expanded form is what gets serialized, this is display only.
std::string pretty_poly(const IntPoly& p) {
    if (p.is_zero()) return "0";
    IntPoly rest = p;
    std::map<int, int> one_minus, geom;
    bool changed = true;
    while (changed && rest.degree() > 0) {
        changed = false;
        for (int k = rest.degree(); k >= 1 && !changed; --k) {
            if (auto q = IntPoly::div_exact(rest, IntPoly::one_minus_tk(k))) {
                ++one_minus[k];
                rest = *q;
                changed = true;
            }
        }
        for (int k = rest.degree() + 1; k >= 2 && !changed; --k) {
            if (auto q = IntPoly::div_exact(rest, IntPoly::geometric(k))) {
                ++geom[k];
                rest = *q;
                changed = true;
            }
        }
    }
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string& base, int mult) {
        if (!first) os << " * ";
        os << base;
        if (mult > 1) os << "^" << mult;
        first = false;
    };
    for (auto it = one_minus.rbegin(); it != one_minus.rend(); ++it)
        emit("(" + IntPoly::one_minus_tk(it->first).str(true) + ")", it->second);
    for (auto it = geom.rbegin(); it != geom.rend(); ++it)
        emit("(" + IntPoly::geometric(it->first).str(true) + ")", it->second);
    if (first || !rest.is_one()) emit("(" + rest.str() + ")", 1);
    return os.str();
}

std::string pretty_ratfunc(const RatFunc& f) {
    std::string s = pretty_poly(f.num());
    if (!f.den().is_one()) s += " / [ " + pretty_poly(f.den()) + " ]";
    return s;
}

// --- per-verb reports ----------------------------------------------------

Json labels_of(const TypeClass& tc) {
    Json arr = Json::array();
    for (const auto& c : tc.components) arr.push_back(c.kind == Kind::Finite ? c.label : kind_name(c.kind));
    return arr;
}

Json counts_to_json(const LengthCounts& lc) {
    Json j;
    j["counts"] = lc.counts;
    j["truncated"] = lc.truncated;
    j["depth"] = lc.depth;
    return j;
}

Json report_poincare(Engine& eng, const CartanMatrix& A, const Options& opt) {
    PoincareResult r = eng.poincare(A);
    Json j;
    j["poincare"] = ratfunc_to_json(r.series);
    j["type"] = labels_of(r.type);
    if (r.type.dim_flag.has_value())
        j["dim_flag"] = *r.type.dim_flag;
    else
        j["dim_flag"] = "infinity";
    if (!r.type.all_finite()) {
        auto [L, Q] = eng.lcm_numerator_form(A);
        j["lcm_numerator"] = poly_to_json(L);
    }
    if (opt.pretty) j["pretty"] = pretty_ratfunc(r.series);
    return j;
}

Json report_series(Engine& eng, const CartanMatrix& A, const Options& opt) {
    RatFunc p = eng.series_of(A);
    Json j;
    j["poincare"] = ratfunc_to_json(p);
    j["series"] = series_to_json(rf_series(p, opt.order));
    return j;
}

Json report_quotient(Engine& eng, const CartanMatrix& A, const Options& opt) {
    std::vector<int> I = parse_subset(opt.subset, A.rank());
    RatFunc q = eng.quotient_series(A, I);
    Json j;
    Json sub = Json::array();
    for (int v : I) sub.push_back(v + 1);
    j["subset"] = sub;
    j["quotient"] = ratfunc_to_json(q);
    if (opt.pretty) j["pretty"] = pretty_ratfunc(q);
    return j;
}

Json report_oracle(Engine& eng, const CartanMatrix& A, const Options& opt) {
    LengthCounts lc = weyl_counts(A, opt.depth, opt.cap);
    TruncSeries s = rf_series(eng.series_of(A), opt.depth);
    bool match = !lc.truncated;
    if (match)
        for (int k = 0; k <= opt.depth; ++k)
            if (Rat(static_cast<long>(lc.counts[static_cast<size_t>(k)])) != s.coeff(k)) {
                match = false;
                break;
            }
    Json j = counts_to_json(lc);
    Json coeffs = Json::array();
    for (const Rat& c : s.coeffs()) coeffs.push_back(c.get_str());
    j["series"] = coeffs;
    j["match"] = match;
    return j;
}

Json report_kac(Engine& eng, const CartanMatrix& A, const Options& opt) {
    KacReport rep = kac_check(eng, A, opt.order);
    Json j;
    j["epsilon"] = rep.symmetrizable ? 1 : 0;
    Json b = Json::array();
    for (const Rat& v : rep.B.coeffs()) b.push_back(v.get_str());
    j["b"] = b;
    if (rep.first_negative.has_value()) {
        Json fn;
        fn["k"] = rep.first_negative->first;
        fn["value"] = rep.first_negative->second.get_str();
        j["first_negative"] = fn;
    } else {
        j["first_negative"] = nullptr;
    }
    if (!rep.in_scope) j["scope_warning"] = "input is not of indefinite type";
    return j;
}

Json report_clr(Engine& eng, const CartanMatrix& A) {
    ClrReport rep = clr_check(eng, A);
    KInvariants ki = k_invariants(eng, A);
    Json j;
    j["degree"] = rep.degree;
    j["K0"] = ki.K0;
    j["K1"] = ki.K1;
    j["holds"] = rep.holds;
    if (!ki.consistent) j["degree_criterion_mismatch"] = true;
    return j;
}

Json chain_to_json(const Chain& c) {
    Json arr = Json::array();
    for (const auto& sub : c.subsets) {
        Json s = Json::array();
        for (int v : sub) s.push_back(v + 1);
        arr.push_back(s);
    }
    return arr;
}

Json report_chains(Engine& eng, const CartanMatrix& A) {
    auto [inf, quasi] = chains(eng, A);
    Json j;
    Json ji = Json::array(), jq = Json::array();
    for (const Chain& c : inf) ji.push_back(chain_to_json(c));
    for (const Chain& c : quasi) jq.push_back(chain_to_json(c));
    j["infinite"] = ji;
    j["quasi_infinite"] = jq;
    return j;
}

Json report_indices(Engine& eng, const CoxeterGraph& g, const Options& opt) {
    HomotopyIndices hi = homotopy_indices(eng, g, opt.order);
    Json j;
    Json idx = Json::object(), exps = Json::object();
    for (const auto& [k, e] : hi.exponents) {
        idx[std::to_string(k)] = e < 0 ? -e : e;
        exps[std::to_string(k)] = e;
    }
    j["order"] = hi.order;
    j["indices"] = idx;
    j["exponents"] = exps;
    return j;
}

Json report_graph(Engine& eng, const CoxeterGraph& g, const Options& opt) {
    RatFunc p = pc_invariant(eng, g);
    Json j;
    j["poincare"] = ratfunc_to_json(p);
    if (opt.pretty) j["pretty"] = pretty_ratfunc(p);
    return j;
}

Json report_eval(Engine& eng, const CartanMatrix& A, const Options& opt) {
    Rat q = parse_rational(opt.q);
    Rat v = eng.series_of(A).eval(q);
    Json j;
    j["q"] = q.get_str();
    j["value"] = v.get_str();
    return j;
}

CoxeterGraph graph_of_input(const std::variant<CartanMatrix, CoxeterGraph>& input) {
    if (std::holds_alternative<CoxeterGraph>(input)) return std::get<CoxeterGraph>(input);
    return coxeter_graph_of(std::get<CartanMatrix>(input));
}

Json run_verb(const std::string& verb, Engine& eng, const std::string& text, const Options& opt) {
    auto input = parse_input_text(text);
    if (verb == "classify") {
        Json j;
        j["type"] = typeclass_to_json(eng.classify(to_matrix(input)));
        return j;
    }
    if (verb == "poincare") return report_poincare(eng, to_matrix(input), opt);
    if (verb == "series") return report_series(eng, to_matrix(input), opt);
    if (verb == "quotient") return report_quotient(eng, to_matrix(input), opt);
    if (verb == "oracle-check") return report_oracle(eng, to_matrix(input), opt);
    if (verb == "kac-check") return report_kac(eng, to_matrix(input), opt);
    if (verb == "clr-check") return report_clr(eng, to_matrix(input));
    if (verb == "chains") return report_chains(eng, to_matrix(input));
    if (verb == "indices") return report_indices(eng, graph_of_input(input), opt);
    if (verb == "graph") return report_graph(eng, graph_of_input(input), opt);
    if (verb == "eval") return report_eval(eng, to_matrix(input), opt);
    throw InputError("unknown verb '" + verb + "'");
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file '" + path.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Directory inputs run the verb over every *.json file (sorted), in
// parallel when --jobs asks for it; per-file failures are reported, not
// fatal.
int run_batch(const std::string& verb, Engine& eng, const fs::path& dir, const Options& opt) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::vector<Json> reports(files.size());
    std::vector<std::string> errors(files.size());
    std::atomic<size_t> next{0};
    std::atomic<bool> violation{false};
    auto worker = [&]() {
        for (size_t i = next.fetch_add(1); i < files.size(); i = next.fetch_add(1)) {
            try {
                reports[i] = run_verb(verb, eng, read_file(files[i]), opt);
            } catch (const TheoremViolation& e) {
                violation = true;
                errors[i] = e.what();
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    int jobs = std::max(1, opt.jobs);
    std::vector<std::thread> pool;
    for (int k = 1; k < jobs; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    Json results = Json::object();
    size_t failed = 0;
    for (size_t i = 0; i < files.size(); ++i) {
        if (errors[i].empty()) {
            results[files[i].filename().string()] = reports[i];
        } else {
            Json err;
            err["error"] = errors[i];
            results[files[i].filename().string()] = err;
            ++failed;
        }
    }
    Json out;
    out["results"] = results;
    Json summary;
    summary["total"] = files.size();
    summary["failed"] = failed;
    out["summary"] = summary;
    std::cout << out.dump(2) << "\n";
    if (violation) return 2;
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Poincare series of Kac-Moody Weyl groups"};
    app.require_subcommand(1);

    Options opt;
    std::string verb;
    static const std::vector<std::string> kVerbs = {"classify", "poincare",  "series", "quotient",
                                                    "oracle-check", "kac-check", "clr-check", "chains",
                                                    "indices",  "graph",     "kn-survey", "eval"};
    for (const std::string& v : kVerbs) {
        CLI::App* sub = app.add_subcommand(v);
        if (v != "kn-survey")
            sub->add_option("input", opt.input, "input JSON file (or directory for batch mode)")->required();
        sub->add_option("--order,-N", opt.order, "series truncation order");
        sub->add_option("--depth,-L", opt.depth, "BFS depth");
        sub->add_option("--cap", opt.cap, "BFS element cap");
        sub->add_option("--subset", opt.subset, "comma-separated 1-based index subset");
        sub->add_option("--q", opt.q, "evaluation point (rational, e.g. 2 or 1/2)");
        if (v == "kn-survey") sub->add_option("--n", opt.n, "matrix rank to survey")->required();
        sub->add_flag("--pretty", opt.pretty, "add a factored human-readable rendering");
        sub->add_option("--jobs,-j", opt.jobs, "parallel workers for batch mode");
        sub->callback([&verb, v]() { verb = v; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 1;
    }

    Engine engine;
    const char* cache_dir = std::getenv("KMP_CACHE_DIR");
    std::string cache_file;
    if (cache_dir && *cache_dir) {
        std::error_code ec;
        fs::create_directories(cache_dir, ec);
        cache_file = (fs::path(cache_dir) / "poincare-cache.bin").string();
        engine.load_cache(cache_file);
    }

    int rc = 0;
    try {
        if (verb == "kn-survey") {
            if (opt.n < 2 || opt.n > 6) throw InputError("--n must be between 2 and 6");
            KnSurvey s = kn_survey(engine, opt.n);
            Json j;
            j["n"] = s.n;
            j["distinct"] = s.distinct;
            j["expected"] = s.expected;
            j["conjecture_holds"] = s.holds;
            std::cout << j.dump(2) << "\n";
        } else if (fs::is_directory(opt.input)) {
            rc = run_batch(verb, engine, opt.input, opt);
        } else {
            Json j = run_verb(verb, engine, read_file(opt.input), opt);
            std::cout << j.dump(2) << "\n";
        }
    } catch (const TheoremViolation& e) {
        std::cerr << "theorem violation (this is a bug): " << e.what() << "\n";
        rc = 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = 1;
    }

    if (!cache_file.empty() && rc == 0) engine.save_cache(cache_file);
    return rc;
}
