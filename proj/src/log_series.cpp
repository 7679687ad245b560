#include "modcount/hiprec.hpp"

namespace modcount::hiprec {

// Formal power-series logarithm of each factor, scaled by its exponent and
// summed. For P(x) = 1 + p_1 x + ... the coefficients l_n of ln P satisfy
//   l_n = p_n - (1/n) sum_{k=1}^{n-1} k l_k p_{n-k},
// and the tail convention stores c_n = n * [x^n] ln f.
std::vector<Rat> expand_log_series(const std::vector<ProductFactor>& factors, int n_max) {
    if (n_max < 2) throw invalid_input("expand_log_series: n_max must be >= 2");
    std::vector<Rat> c(n_max + 1, Rat(0));
    for (const auto& f : factors) {
        if (f.poly.empty() || f.poly[0] != Rat(1))
            throw invalid_input("expand_log_series: factor polynomial must have constant term 1");
        std::vector<Rat> l(n_max + 1, Rat(0));
        auto p = [&](int i) { return i < int(f.poly.size()) ? f.poly[i] : Rat(0); };
        for (int n = 1; n <= n_max; ++n) {
            Rat acc = p(n);
            Rat inner(0);
            for (int k = 1; k < n; ++k) inner += Rat(k) * l[k] * p(n - k);
            l[n] = acc - inner / Rat(n);
            c[n] += f.exponent * Rat(n) * l[n];
        }
    }
    if (!c[1].is_zero())
        throw math_error("expand_log_series: nonzero c_1 = " + c[1].to_string() +
                         " (the specified product diverges)");
    return c;
}

}  // namespace modcount::hiprec
