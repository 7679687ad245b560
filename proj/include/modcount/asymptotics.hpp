#pragma once

#include <string>
#include <vector>

#include "modcount/arith.hpp"
#include "modcount/bigreal.hpp"
#include "modcount/residues.hpp"

namespace modcount {

// A summand for the partial-sum harness: one of the counting functions, or an
// auxiliary multiplicative weight.
struct Weight {
    enum class Tag { Phi, TwoOmega, ThreeOmegaTilde, PhiOver2Omega, PhiOver3OmegaTilde, Count };
    Tag tag = Tag::Phi;
    ProblemKind kind = ProblemKind::SqrtUnity;  // when tag == Count

    bool operator==(const Weight&) const = default;
};

// Names: "phi", "2^omega", "3^omega_tilde", "phi/2^omega", "phi/3^omega_tilde",
// or any problem name from the residues catalog.
Weight weight_from_name(const std::string& name);
std::string weight_name(const Weight& w);

// Sums are exact: integer-valued weights accumulate directly; the dyadic and
// triadic weights accumulate as integers scaled by 2^pow2 * 3^pow3.
struct SumScale {
    int pow2 = 0;
    int pow3 = 0;
    u64 denominator() const;
};
SumScale weight_scale(const Weight& w);

// weight value at one n from its factorization (reference path and tests)
u128 weight_value(const Weight& w, const Factorization& f);

// Predicted law  coefficient * N^alpha * (ln N)^beta, where the coefficient is
// scale * hiprec constant `constant_name`.
struct AsymptoticForm {
    std::string name;
    std::string constant_name;
    Rat scale = Rat(1);
    Rat alpha = Rat(1);
    Rat beta = Rat(0);
    bool conjectural = false;
};

struct ProgressionTarget {
    u32 k = 1;
    u32 l = 0;
    Weight weight;
    AsymptoticForm form;
};

const std::vector<std::pair<Weight, AsymptoticForm>>& asymptotic_forms();
const std::vector<ProgressionTarget>& progression_targets();
// k == 1 looks up the unrestricted law; otherwise the (k,l) registry entry.
const AsymptoticForm* lookup_form(const Weight& w, u32 k, u32 l);

BigReal predicted_main_term(const AsymptoticForm& form, u64 n, int digits);

struct SweepOptions {
    u64 limit = 0;
    u32 mod = 1;                         // bucket sums by n mod this
    u64 block_size = kDefaultBlockSize;
    int threads = 0;                     // 0 = OpenMP default
    std::vector<u64> extra_checkpoints;  // merged with the geometric ladder
    u64 cap = kDefaultSumCap;
};

// Exact partial sums of a weight over n <= N, bucketed by n mod `mod`, with
// snapshots at geometric checkpoints ceil(N/2^j). Blocks are processed
// independently (OpenMP) and merged in block order, so results are
// bit-identical for every thread count.
struct SweepResult {
    Weight weight;
    u32 mod = 1;
    u64 limit = 0;
    SumScale scale;
    std::vector<u64> checkpoint_ns;                     // ascending; back() == limit
    std::vector<std::vector<u128>> checkpoint_buckets;  // size mod each

    // residue == mod means "all residues"
    u128 scaled_sum(size_t checkpoint, u32 residue) const;
    u128 scaled_total(u32 residue) const;
};

SweepResult partial_sum_sweep(const Weight& w, const SweepOptions& opt);

// Serial reference: per-n factorize loop, identical semantics. Slow; used by
// the tests and the benchmark as the independent route.
u128 naive_weight_sum(const Weight& w, u64 limit, u32 k = 1, u32 l = 0);

BigReal sum_as_bigreal(u128 scaled, const SumScale& scale, int digits);

// sum_{n<=N} a(n)/n^s accumulated exactly in fixed point (integer s) or in
// MPFR merged in block order (other rational s >= 3/2).
BigReal dirichlet_partial_sum(const Weight& w, const Rat& s, u64 limit, int digits,
                              const SweepOptions& opt);

}  // namespace modcount
