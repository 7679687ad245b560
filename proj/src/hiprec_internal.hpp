#pragma once

#include <functional>

#include "modcount/hiprec.hpp"

namespace modcount::hiprec::detail {

// Single-run evaluators at an explicit working precision; the public wrappers
// in hiprec add the D / D+10 double-run validation on top.
BigReal hurwitz_core(const Rat& s, const Rat& a, int work_digits);
BigReal riemann_core(const Rat& s, int work_digits);
BigReal l_series_core(int j, const Rat& s, int work_digits);
BigReal prime_zeta_core(const Rat& s, int work_digits);
BigReal prime_zeta_mod3_core(int l, const Rat& s, int work_digits);
BigReal gamma_core(const Rat& q, int work_digits);
BigReal prime_product_core(const ProductSpec& spec, u64 cutoff, int truncate_n,
                           int work_digits, PrimeProductResult* meta);

BigReal run_validated(int digits, const std::function<BigReal(int)>& eval);

}  // namespace modcount::hiprec::detail
