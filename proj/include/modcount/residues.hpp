#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "modcount/arith.hpp"
#include "modcount/common.hpp"

namespace modcount {

// The counting problems. The first eight have closed-form multiplicative
// evaluators plus brute-force oracles; the last two are oracle-only.
enum class ProblemKind {
    SqrtUnity,        // # solutions of x^2 = 1 in Z_n^*
    CbrtUnity,        // # solutions of x^3 = 1 in Z_n^*
    SqrtNullity,      // # solutions of x^2 = 0 in Z_n
    CbrtNullity,      // # solutions of x^3 = 0 in Z_n
    SquaresUnits,     // # images of y -> y^2 in Z_n^*
    CubesUnits,       // # images of y -> y^3 in Z_n^*
    SquaresRing,      // # images of y -> y^2 in Z_n
    CubesRing,        // # images of y -> y^3 in Z_n (conjectural local table)
    SqrtNegUnity,     // # solutions of x^2 = -1 in Z_n^*
    SixthPowersRing,  // # images of y -> y^6 in Z_n
};

struct CountResult {
    u64 n = 1;
    ProblemKind kind = ProblemKind::SqrtUnity;
    u64 value = 0;
    enum class Method { Formula, Oracle } method = Method::Formula;
    bool conjectural = false;
};

struct ProblemInfo {
    ProblemKind kind;
    const char* name;        // stable snake_case id used in every external interface
    const char* equation;    // human description
    bool closed_form;        // has a formula evaluator
    bool conjectural;        // result rests on a conjectured local table
};

const std::vector<ProblemInfo>& problem_catalog();
const char* kind_name(ProblemKind kind);
std::optional<ProblemKind> kind_from_name(std::string_view name);
bool is_closed_form(ProblemKind kind);
bool is_conjectural(ProblemKind kind);

// Value of the multiplicative counting function at p^r. Closed-form kinds
// only; every rational local expression divides exactly (checked).
u64 local_factor(ProblemKind kind, u64 p, u32 r);

// Exact count via the multiplicative local factors. Rejects oracle-only kinds.
CountResult count_formula(ProblemKind kind, const Factorization& f);

// Exact count by exhaustive enumeration: root problems scan x in Z_n
// (restricted to units where applicable); image problems collect y^k mod n
// into a bitset and report its size.
CountResult count_oracle(ProblemKind kind, u64 n, u64 cap = kDefaultOracleCap);

namespace detail {
// Multiplicative rule for x^2 = -1, used by the summation harness only. Not
// part of the public evaluator surface: the catalog keeps this problem
// oracle-backed, and the rule is validated against count_oracle in the tests.
u64 sqrt_neg_unity_local(u64 p, u32 r);
}  // namespace detail

}  // namespace modcount
