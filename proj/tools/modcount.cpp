// modcount: exact counting of squares/cubes/roots modulo n, block-sieved
// partial sums with predicted-law diagnostics, and high-precision evaluation
// of the associated Euler-product constants.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "modcount/asymptotics.hpp"
#include "modcount/hiprec.hpp"
#include "modcount/residues.hpp"
#include "modcount/verify.hpp"

using namespace modcount;
using ordered_json = nlohmann::ordered_json;

namespace {

struct GlobalOpts {
    std::string format = "json";
    bool no_timing = false;
    int threads = 0;
    u64 block_size = kDefaultBlockSize;
};

u64 env_u64(const char* name, u64 fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stoull(v);
    } catch (...) {
        throw invalid_input(std::string(name) + ": cannot parse '" + v + "'");
    }
}

void emit(const GlobalOpts& g, ordered_json record, double ms,
          const std::vector<std::vector<std::string>>& tsv_rows,
          const std::vector<std::string>& tsv_header) {
    if (!g.no_timing) record["timing_ms"] = ms;
    if (g.format == "json") {
        std::cout << record.dump(2) << "\n";
        return;
    }
    // tsv
    for (size_t i = 0; i < tsv_header.size(); ++i)
        std::cout << tsv_header[i] << (i + 1 < tsv_header.size() ? "\t" : "\n");
    for (const auto& row : tsv_rows) {
        for (size_t i = 0; i < row.size(); ++i)
            std::cout << row[i] << (i + 1 < row.size() ? "\t" : "\n");
    }
}

std::string fraction_string(u128 scaled, const SumScale& scale) {
    std::string num = to_string_u128(scaled);
    if (scale.pow2 == 0 && scale.pow3 == 0) return num;
    return num + "/" + std::to_string(scale.denominator());
}

int run_count(const GlobalOpts& g, const std::string& problem, u64 n, bool with_oracle,
              u64 oracle_cap) {
    auto t0 = std::chrono::steady_clock::now();
    auto kind = kind_from_name(problem);
    if (!kind) throw invalid_input("unknown problem '" + problem + "'");

    ordered_json rec;
    rec["command"] = "count";
    rec["inputs"] = {{"problem", problem}, {"n", std::to_string(n)},
                     {"oracle", with_oracle}};
    ordered_json results;
    std::vector<std::vector<std::string>> rows;

    std::string value, method;
    bool conjectural = is_conjectural(*kind);
    if (is_closed_form(*kind)) {
        CountResult r = count_formula(*kind, factorize(n));
        value = std::to_string(r.value);
        method = "formula";
    } else {
        CountResult r = count_oracle(*kind, n, oracle_cap);
        value = std::to_string(r.value);
        method = "oracle";
    }
    results["value"] = value;
    results["method"] = method;
    results["conjectural"] = conjectural;
    if (with_oracle) {
        CountResult o = count_oracle(*kind, n, oracle_cap);
        results["oracle_value"] = std::to_string(o.value);
        results["match"] = std::to_string(o.value) == value;
    }
    rec["results"] = results;

    std::vector<std::string> header{"problem", "n", "value", "method", "conjectural"};
    std::vector<std::string> row{problem, std::to_string(n), value, method,
                                 conjectural ? "true" : "false"};
    if (with_oracle) {
        header.push_back("oracle_value");
        header.push_back("match");
        row.push_back(results["oracle_value"].get<std::string>());
        row.push_back(results["match"].get<bool>() ? "true" : "false");
    }
    rows.push_back(row);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
    emit(g, rec, ms, rows, header);
    return 0;
}

int run_sum(const GlobalOpts& g, const std::string& weight_str, u64 limit, u32 mod, u32 res,
            u64 cap) {
    auto t0 = std::chrono::steady_clock::now();
    Weight w = weight_from_name(weight_str);
    if (mod == 0) throw invalid_input("--mod must be >= 1");
    if (res >= mod) throw invalid_input("--res must lie in [0, mod)");

    SweepOptions so;
    so.limit = limit;
    so.mod = mod;
    so.threads = g.threads;
    so.block_size = g.block_size;
    so.cap = cap;
    auto sweep = partial_sum_sweep(w, so);
    const AsymptoticForm* form = lookup_form(w, mod, res);

    ordered_json rec;
    rec["command"] = "sum";
    rec["inputs"] = {{"weight", weight_str}, {"limit", std::to_string(limit)},
                     {"mod", mod}, {"res", res}};
    ordered_json results;
    u128 total = sweep.scaled_total(mod > 1 ? res : mod);
    results["exact_sum"] = fraction_string(total, sweep.scale);
    results["sum"] = sum_as_bigreal(total, sweep.scale, 25).to_sci(20);
    results["conjectural"] = w.tag == Weight::Tag::Count && is_conjectural(w.kind);
    if (w.tag == Weight::Tag::Count && w.kind == ProblemKind::SqrtNegUnity)
        results["evaluator"] = "multiplicative rule validated against the oracle";

    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"N", "exact_sum", "ratio"};
    if (form && limit >= 3) {
        results["form"] = form->name;
        results["coefficient_constant"] = form->constant_name;
        results["coefficient_scale"] = form->scale.to_string();
        BigReal coeff = hiprec::constant(form->constant_name, 25).value *
                        BigReal::from_rat(form->scale, 25);
        results["coefficient"] = coeff.to_fixed(20);
        BigReal predicted = predicted_main_term(*form, limit, 25);
        results["predicted"] = predicted.to_sci(20);
        results["ratio"] =
            (sum_as_bigreal(total, sweep.scale, 25) / predicted).to_fixed(12);
    } else {
        results["form"] = nullptr;
    }

    ordered_json cps = ordered_json::array();
    for (size_t i = 0; i < sweep.checkpoint_ns.size(); ++i) {
        u64 ncp = sweep.checkpoint_ns[i];
        u128 v = sweep.scaled_sum(i, mod > 1 ? res : mod);
        ordered_json cp;
        cp["N"] = std::to_string(ncp);
        cp["exact_sum"] = fraction_string(v, sweep.scale);
        std::string ratio_str = "";
        if (form && limit >= 3 && ncp >= 3) {
            BigReal ratio =
                sum_as_bigreal(v, sweep.scale, 25) / predicted_main_term(*form, ncp, 25);
            ratio_str = ratio.to_fixed(12);
            cp["ratio"] = ratio_str;
        }
        cps.push_back(cp);
        rows.push_back({std::to_string(ncp), fraction_string(v, sweep.scale), ratio_str});
    }
    results["checkpoints"] = cps;
    rec["results"] = results;

    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
    emit(g, rec, ms, rows, header);
    return 0;
}

int run_dirichlet(const GlobalOpts& g, const std::string& weight_str, const std::string& s_str,
                  u64 limit, int digits, u64 cap) {
    auto t0 = std::chrono::steady_clock::now();
    Weight w = weight_from_name(weight_str);
    Rat s = Rat::from_string(s_str);
    SweepOptions so;
    so.threads = g.threads;
    so.block_size = g.block_size;
    so.cap = cap;
    BigReal v = dirichlet_partial_sum(w, s, limit, digits, so);
    ordered_json rec;
    rec["command"] = "dirichletsum";
    rec["inputs"] = {{"weight", weight_str}, {"s", s_str},
                     {"limit", std::to_string(limit)}, {"digits", digits}};
    rec["results"] = {{"value", v.to_fixed(digits)}};
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
    emit(g, rec, ms, {{s_str, std::to_string(limit), v.to_fixed(digits)}},
         {"s", "N", "value"});
    return 0;
}

int run_constant(const GlobalOpts& g, const std::string& name, int digits) {
    auto t0 = std::chrono::steady_clock::now();
    auto cv = hiprec::constant(name, digits);
    ordered_json rec;
    rec["command"] = "constant";
    rec["inputs"] = {{"name", name}, {"digits", digits}};
    rec["results"] = {{"value", cv.value.to_fixed(digits)},
                      {"digits", digits},
                      {"conjectural", cv.info.conjectural},
                      {"definition", cv.info.description}};
    if (!cv.info.assembled_form.empty()) {
        auto coeff = hiprec::constant(cv.info.assembled_form, std::min(digits, 20));
        rec["results"]["assembled_form"] = cv.info.assembled_form;
        rec["results"]["assembled_coefficient"] = coeff.value.to_fixed(std::min(digits, 20));
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
    emit(g, rec, ms, {{name, cv.value.to_fixed(digits), cv.info.conjectural ? "true" : "false"}},
         {"name", "value", "conjectural"});
    return 0;
}

int run_primezeta(const GlobalOpts& g, const std::string& s_str, const std::string& cls_str,
                  int digits) {
    auto t0 = std::chrono::steady_clock::now();
    Rat s = Rat::from_string(s_str);
    hiprec::PrimeClass cls;
    if (cls_str == "1,0")
        cls = {1, 0};
    else if (cls_str == "3,1")
        cls = {3, 1};
    else if (cls_str == "3,2")
        cls = {3, 2};
    else
        throw invalid_input("--class must be 1,0 or 3,1 or 3,2");
    BigReal v = hiprec::prime_zeta_class(cls, s, digits);
    ordered_json rec;
    rec["command"] = "primezeta";
    rec["inputs"] = {{"s", s_str}, {"class", cls_str}, {"digits", digits}};
    rec["results"] = {{"value", v.to_fixed(digits)}};
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
    emit(g, rec, ms, {{s_str, cls_str, v.to_fixed(digits)}}, {"s", "class", "value"});
    return 0;
}

int run_primeproduct(const GlobalOpts& g, const std::string& spec_path, u64 cutoff, int digits,
                     int max_n) {
    auto t0 = std::chrono::steady_clock::now();
    hiprec::ProductSpec spec = hiprec::load_product_spec(spec_path);
    hiprec::PrimeProductOptions popt;
    popt.cutoff = cutoff;
    popt.digits = digits;
    popt.truncate_n = max_n;
    auto r = hiprec::prime_product(spec, popt);
    ordered_json rec;
    rec["command"] = "primeproduct";
    rec["inputs"] = {{"spec", spec_path}, {"cutoff", std::to_string(cutoff)},
                     {"digits", digits}, {"max_n", max_n}};
    ordered_json results;
    results["value"] = r.value.to_fixed(digits);
    results["class"] = spec.cls.to_string();
    if (r.head_is_exact) results["head_exact"] = r.head_exact.to_string();
    results["head_primes"] = r.head_primes.size();
    results["tail_terms"] = r.terms_used;
    results["next_class_prime"] = r.next_class_prime;
    rec["results"] = results;
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
    emit(g, rec, ms,
         {{spec_path, std::to_string(cutoff), r.value.to_fixed(digits)}},
         {"spec", "cutoff", "value"});
    return 0;
}

int run_verify(const GlobalOpts& g, const std::string& suite, bool fast) {
    auto t0 = std::chrono::steady_clock::now();
    if (suite != "paper") throw invalid_input("unknown suite '" + suite + "'");
    verify::VerifyOptions vo;
    vo.fast = fast;
    vo.threads = g.threads;
    vo.block_size = g.block_size;
    vo.progress = &std::cerr;
    auto results = verify::run_paper_suite(vo);

    ordered_json rec;
    rec["command"] = "verify";
    rec["inputs"] = {{"suite", suite}, {"fast", fast}};
    ordered_json checks = ordered_json::array();
    int failed = 0;
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : results) {
        checks.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail},
                          {"seconds", r.seconds}});
        if (!r.pass) ++failed;
        rows.push_back({r.name, r.pass ? "PASS" : "FAIL", r.detail});
    }
    rec["results"] = {{"checks", checks},
                      {"passed", int(results.size()) - failed},
                      {"failed", failed}};
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
    emit(g, rec, ms, rows, {"check", "status", "detail"});
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"counting squares, cubes and roots modulo n, with the associated "
                 "asymptotic laws and Euler-product constants"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "tsv"}));
    app.add_flag("--no-timing", g.no_timing, "omit the timing field (byte-stable output)");

    std::string problem, weight, s_str = "2", cls_str = "1,0", name, spec_path, suite = "paper";
    u64 n = 0, limit = 0, cutoff = 101, oracle_cap = kDefaultOracleCap, sum_cap = kDefaultSumCap;
    u32 mod = 1, res = 0;
    int digits = 30, max_n = 0;
    bool with_oracle = false, fast = false;

    auto* c_count = app.add_subcommand("count", "exact count for one problem at one n");
    c_count->add_option("--problem", problem, "problem name")->required();
    c_count->add_option("--n", n, "modulus n")->required();
    c_count->add_flag("--oracle", with_oracle, "also run the brute-force oracle and compare");
    c_count->add_option("--oracle-cap", oracle_cap, "enumeration cap for the oracle");

    auto* c_sum = app.add_subcommand("sum", "exact partial sum over n <= limit");
    auto* o_problem = c_sum->add_option("--problem", problem, "counting problem to sum");
    auto* o_weight = c_sum->add_option("--weight", weight,
                                       "auxiliary weight: phi, 2^omega, 3^omega_tilde, "
                                       "phi/2^omega, phi/3^omega_tilde");
    o_problem->excludes(o_weight);
    c_sum->add_option("--limit", limit, "sum n from 1 to this limit")->required();
    c_sum->add_option("--mod", mod, "restrict to n = res (mod this)");
    c_sum->add_option("--res", res, "residue class");
    c_sum->add_option("--cap", sum_cap, "safety cap for the limit");

    auto* c_dir = app.add_subcommand("dirichletsum", "partial sum of a(n)/n^s");
    c_dir->add_option("--problem", problem, "counting problem (or use --weight phi)");
    c_dir->add_option("--weight", weight, "weight (phi)");
    c_dir->add_option("--s", s_str, "exponent s >= 3/2")->required();
    c_dir->add_option("--limit", limit, "sum n from 1 to this limit")->required();
    c_dir->add_option("--digits", digits, "reported digits");
    c_dir->add_option("--cap", sum_cap, "safety cap for the limit");

    auto* c_const = app.add_subcommand("constant", "named constant from the registry");
    c_const->add_option("--name", name, "constant name, e.g. K_cbrt_unity")->required();
    c_const->add_option("--digits", digits, "decimal digits after the point");

    auto* c_pz = app.add_subcommand("primezeta", "prime zeta value P_{k,l}(s)");
    c_pz->add_option("--s", s_str, "argument s >= 3/2")->required();
    c_pz->add_option("--class", cls_str, "prime class k,l (1,0 / 3,1 / 3,2)");
    c_pz->add_option("--digits", digits, "decimal digits after the point");

    auto* c_pp = app.add_subcommand("primeproduct", "evaluate a product spec file");
    c_pp->add_option("--spec", spec_path, "ProductSpec JSON path")->required();
    c_pp->add_option("--cutoff", cutoff, "head cutoff prime");
    c_pp->add_option("--digits", digits, "decimal digits after the point");
    c_pp->add_option("--max-n", max_n, "truncate the tail series at this n (0 = auto)");

    auto* c_verify = app.add_subcommand("verify", "run the verification suite");
    c_verify->add_option("--suite", suite, "suite name (paper)");
    c_verify->add_flag("--fast", fast, "cap the big sweeps at 10^6");

    // let --format / --no-timing appear after the subcommand too
    for (auto* sub : app.get_subcommands({})) sub->fallthrough(true);

    try {
        app.parse(argc, argv);
        g.threads = int(env_u64("MODCOUNT_THREADS", 0));
        g.block_size = env_u64("MODCOUNT_BLOCK_SIZE", kDefaultBlockSize);
        if (g.block_size < 1024) throw invalid_input("MODCOUNT_BLOCK_SIZE must be >= 1024");

        if (c_count->parsed()) return run_count(g, problem, n, with_oracle, oracle_cap);
        if (c_sum->parsed()) {
            if (problem.empty() && weight.empty())
                throw invalid_input("sum: need --problem or --weight");
            return run_sum(g, problem.empty() ? weight : problem, limit, mod, res, sum_cap);
        }
        if (c_dir->parsed()) {
            if (problem.empty() && weight.empty())
                throw invalid_input("dirichletsum: need --problem or --weight");
            return run_dirichlet(g, problem.empty() ? weight : problem, s_str, limit, digits,
                                 sum_cap);
        }
        if (c_const->parsed()) return run_constant(g, name, digits);
        if (c_pz->parsed()) return run_primezeta(g, s_str, cls_str, digits);
        if (c_pp->parsed()) return run_primeproduct(g, spec_path, cutoff, digits, max_n);
        if (c_verify->parsed()) return run_verify(g, suite, fast);
        throw invalid_input("no subcommand");
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    } catch (const cap_exceeded& e) {
        std::cerr << "error (cap): " << e.what() << "\n";
        return 3;
    } catch (const invalid_input& e) {
        std::cerr << "error (usage): " << e.what() << "\n";
        return 2;
    } catch (const math_error& e) {
        std::cerr << "error (math): " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
