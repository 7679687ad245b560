// CLI integration checks: golden outputs, JSON schema stability, exit codes.
// argv[1] = path to the modcount binary, argv[2] = shipped data directory.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

#include "modcount/asymptotics.hpp"

namespace {

int g_failures = 0;

#define REQUIRE_MSG(cond, msg)                                               \
    do {                                                                     \
        if (!(cond)) {                                                       \
            std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << "  "    \
                      << msg << "\n";                                        \
            ++g_failures;                                                    \
        }                                                                    \
    } while (0)

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& bin, const std::string& args) {
    std::string cmd = bin + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    RunResult r;
    if (!pipe) return r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json parse(const RunResult& r) {
    try {
        return nlohmann::json::parse(r.out);
    } catch (...) {
        return nlohmann::json();
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: cli_tests <modcount-binary> <data-dir>\n";
        return 2;
    }
    std::string bin = argv[1];
    std::string data = argv[2];

    // count: formula values and oracle agreement
    {
        auto r = run(bin, "count --problem sqrt_unity --n 8 --no-timing");
        auto j = parse(r);
        REQUIRE_MSG(r.exit_code == 0, "count exit code");
        REQUIRE_MSG(j["results"]["value"] == "4", "sqrt_unity(8) = 4, got " << r.out);
        REQUIRE_MSG(j["results"]["method"] == "formula", "formula path");
    }
    {
        auto j = parse(run(bin, "count --problem sqrt_unity --n 1 --no-timing"));
        REQUIRE_MSG(j["results"]["value"] == "1", "sqrt_unity(1) = 1");
    }
    {
        auto j = parse(run(bin, "count --problem cubes_ring --n 7 --oracle --no-timing"));
        REQUIRE_MSG(j["results"]["value"] == "3", "cubes_ring(7) = 3");
        REQUIRE_MSG(j["results"]["oracle_value"] == "3", "oracle agrees");
        REQUIRE_MSG(j["results"]["match"] == true, "match flag");
        REQUIRE_MSG(j["results"]["conjectural"] == true, "conjectural flag");
    }
    {
        auto j = parse(run(bin, "count --problem sqrt_neg_unity --n 13 --no-timing"));
        REQUIRE_MSG(j["results"]["value"] == "2", "x^2=-1 mod 13 has 2 roots");
        REQUIRE_MSG(j["results"]["method"] == "oracle", "oracle-backed problem");
    }

    // sum: golden values and a cross-check against the in-process engine
    {
        auto j = parse(run(bin, "sum --weight 2^omega --limit 10 --no-timing"));
        REQUIRE_MSG(j["results"]["exact_sum"] == "23", "sum 2^omega to 10");
    }
    {
        auto j = parse(run(bin, "sum --problem sqrt_unity --limit 10 --mod 8 --res 0 --no-timing"));
        REQUIRE_MSG(j["results"]["exact_sum"] == "4", "restricted sum picks n=8 only");
    }
    {
        auto j = parse(run(bin, "sum --weight phi --limit 100000 --no-timing"));
        using namespace modcount;
        u128 expect = naive_weight_sum(weight_from_name("phi"), 100000);
        REQUIRE_MSG(j["results"]["exact_sum"] == to_string_u128(expect),
                    "phi sum at 1e5 vs reference");
        double ratio = std::stod(j["results"]["ratio"].get<std::string>());
        REQUIRE_MSG(ratio > 0.99 && ratio < 1.01, "phi ratio near 1, got " << ratio);
        REQUIRE_MSG(j["results"]["form"] == "phi_sum", "form name attached");
    }
    {
        // dyadic weight reports an exact fraction
        auto j = parse(run(bin, "sum --weight phi/2^omega --limit 100 --no-timing"));
        std::string frac = j["results"]["exact_sum"].get<std::string>();
        REQUIRE_MSG(frac.find("/65536") != std::string::npos, "scaled fraction, got " << frac);
    }

    // constants: the full 25-decimal prints
    {
        auto j = parse(run(bin, "constant --name K_cbrt_unity --digits 25 --no-timing"));
        REQUIRE_MSG(j["results"]["value"] == "0.9410349413195354517900322",
                    "K_cbrt_unity 25 decimals, got " << j["results"]["value"]);
    }
    {
        // the quoted 25-digit string is a truncation; digit 26 is a 6, so the CLI's
        // round-half-even output carries the final digit up
        auto j = parse(run(bin, "constant --name K_squares_units --digits 25 --no-timing"));
        REQUIRE_MSG(j["results"]["value"] == "0.8121057111631225117062510", "K_squares_units");
        auto j32 = parse(run(bin, "constant --name K_squares_units --digits 32 --no-timing"));
        std::string v = j32["results"]["value"].get<std::string>();
        REQUIRE_MSG(v.substr(0, 27) == "0.8121057111631225117062509",
                    "paper prefix preserved, got " << v);
    }
    {
        auto j = parse(run(bin, "constant --name K_cbrt_nullity --digits 25 --no-timing"));
        REQUIRE_MSG(j["results"]["value"] == "0.2867474284344787341078927", "K_cbrt_nullity");
    }

    // primezeta
    {
        auto j = parse(run(bin, "primezeta --s 2 --digits 15 --no-timing"));
        REQUIRE_MSG(j["results"]["value"] == "0.452247420041065", "P(2) to 15 decimals");
    }
    {
        auto j1 = parse(run(bin, "primezeta --s 2 --class 3,1 --digits 20 --no-timing"));
        auto j2 = parse(run(bin, "primezeta --s 2 --class 3,2 --digits 20 --no-timing"));
        auto j = parse(run(bin, "primezeta --s 2 --digits 20 --no-timing"));
        double p = std::stod(j["results"]["value"].get<std::string>());
        double p31 = std::stod(j1["results"]["value"].get<std::string>());
        double p32 = std::stod(j2["results"]["value"].get<std::string>());
        REQUIRE_MSG(std::abs(p - p31 - p32 - 1.0 / 9) < 1e-15, "partition identity via CLI");
    }

    // primeproduct on the shipped spec
    {
        auto j = parse(run(bin, "primeproduct --spec " + data +
                                    "/cbrt_unity_factor.json --cutoff 31 --digits 25 "
                                    "--max-n 2 --no-timing"));
        // rounded output; digit 26 of the truncated table row is a 9
        REQUIRE_MSG(j["results"]["value"] == "0.9409438379523896292195207",
                    "table row n=2, got " << j["results"]["value"]);
        REQUIRE_MSG(j["results"]["head_exact"] == "3247695/3430336", "exact head fraction");
    }
    {
        auto j = parse(run(bin, "primeproduct --spec " + data +
                                    "/cbrt_unity_factor.json --cutoff 31 --digits 25 --no-timing"));
        REQUIRE_MSG(j["results"]["value"] == "0.9410349413195354517900322", "full product");
    }

    // determinism: byte-identical output without the timing field, including
    // across MODCOUNT_THREADS settings
    {
        std::string args = "sum --weight 3^omega_tilde --limit 20000 --mod 9 --res 4 --no-timing";
        auto a = run(bin, args);
        auto b = run(bin, args);
        REQUIRE_MSG(a.out == b.out && !a.out.empty(), "byte-identical reruns");
        auto t1 = run("MODCOUNT_THREADS=1 " + bin, args);
        auto t4 = run("MODCOUNT_THREADS=4 " + bin, args);
        REQUIRE_MSG(t1.out == t4.out && t1.out == a.out, "thread count does not change bytes");
        auto bs = run("MODCOUNT_BLOCK_SIZE=8192 " + bin, args);
        REQUIRE_MSG(bs.out == a.out, "block size does not change bytes");
    }

    // dirichlet partial sums
    {
        auto j = parse(run(bin, "dirichletsum --problem sqrt_nullity --s 2 --limit 1 "
                                "--digits 10 --no-timing"));
        REQUIRE_MSG(j["results"]["value"] == "1.0000000000", "single-term Dirichlet sum");
        REQUIRE_MSG(run(bin, "dirichletsum --problem sqrt_nullity --s 1.2 --limit 10").exit_code ==
                        2,
                    "dirichlet s below 3/2 -> 2");
    }

    // tsv format has a header row
    {
        auto r = run(bin, "count --problem sqrt_unity --n 8 --format tsv --no-timing");
        REQUIRE_MSG(r.out.rfind("problem\tn\tvalue", 0) == 0, "tsv header, got " << r.out);
        auto s = run(bin, "sum --weight phi --limit 100 --format tsv --no-timing");
        REQUIRE_MSG(s.out.rfind("N\texact_sum\tratio", 0) == 0, "sum tsv header");
    }

    // exit codes: 2 usage, 3 cap, 4 math
    REQUIRE_MSG(run(bin, "count --problem no_such --n 5").exit_code == 2, "unknown problem -> 2");
    REQUIRE_MSG(run(bin, "constant --name K_florb --digits 10").exit_code == 2,
                "unknown constant -> 2");
    REQUIRE_MSG(run(bin, "verify --suite nonexistent").exit_code == 2, "unknown suite -> 2");
    REQUIRE_MSG(run(bin, "count --problem sqrt_neg_unity --n 2000000").exit_code == 3,
                "oracle cap -> 3");
    REQUIRE_MSG(run(bin, "sum --weight phi --limit 100 --cap 10").exit_code == 3,
                "sum cap -> 3");
    REQUIRE_MSG(run(bin, "primezeta --s 1.2 --digits 10").exit_code == 2,
                "s below 3/2 -> 2");
    REQUIRE_MSG(run(bin, "nonsense").exit_code == 2, "bad subcommand -> 2");
    {
        // divergent product spec -> mathematical precondition failure (4)
        std::string path = "/tmp/modcount_divergent_spec.json";
        std::ofstream f(path);
        f << R"({"class":[1,0],"factors":[{"poly":["1","-1"],"exponent":"1"}]})";
        f.close();
        REQUIRE_MSG(run(bin, "primeproduct --spec " + path).exit_code == 4,
                    "divergent spec -> 4");
        std::remove(path.c_str());
    }
    {
        // the empty product is 1
        std::string path = "/tmp/modcount_empty_spec.json";
        std::ofstream f(path);
        f << R"({"class":[1,0],"factors":[]})";
        f.close();
        auto j = parse(run(bin, "primeproduct --spec " + path + " --digits 6 --no-timing"));
        REQUIRE_MSG(j["results"]["value"] == "1.000000", "empty factor list -> 1");
        std::remove(path.c_str());
    }

    if (g_failures == 0) {
        std::cout << "cli_tests: all checks passed\n";
        return 0;
    }
    std::cerr << "cli_tests: " << g_failures << " failures\n";
    return 1;
}
