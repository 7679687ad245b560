#include <map>

#include "hiprec_internal.hpp"

namespace modcount::hiprec {

namespace {

// A constant is a product of atoms raised to rational exponents:
// rationals, pi, Gamma(q), and cutoff prime products.
struct Atom {
    enum class Kind { Rational, Pi, Gamma, Product } kind = Kind::Rational;
    Rat r;          // Rational value or Gamma argument
    ProductSpec prod;
    Rat exponent = Rat(1);
};

struct Entry {
    ConstantInfo info;
    std::vector<Atom> atoms;
};

Atom rat_atom(Rat v, Rat e = Rat(1)) { return {Atom::Kind::Rational, std::move(v), {}, std::move(e)}; }
Atom pi_atom(Rat e) { return {Atom::Kind::Pi, Rat(0), {}, std::move(e)}; }
Atom gamma_atom(Rat q, Rat e) { return {Atom::Kind::Gamma, std::move(q), {}, std::move(e)}; }
Atom prod_atom(ProductSpec spec) { return {Atom::Kind::Product, Rat(0), std::move(spec), Rat(1)}; }

ProductFactor pf(std::vector<Rat> coeffs, Rat e) { return {std::move(coeffs), std::move(e)}; }

// (1 - 2/(p(p+1))) = (1-x)(1+2x)/(1+x) with x = 1/p
std::vector<ProductFactor> near_square_factors() {
    return {pf({Rat(1), Rat(-1)}, Rat(1)), pf({Rat(1), Rat(2)}, Rat(1)),
            pf({Rat(1), Rat(1)}, Rat(-1))};
}

// (1 + 1/(2p)) sqrt(1 - 1/p)
std::vector<ProductFactor> squares_units_factors() {
    return {pf({Rat(1), Rat(1, 2)}, Rat(1)), pf({Rat(1), Rat(-1)}, Rat(1, 2))};
}

// The cubes constants pair a (3,2)-class product with a (3,1)-class product
// whose individual ln-series carry c_1 = +1/3 and -1/3; only the pair
// converges. The divergent halves are regrouped through
//   prod_{p=2 mod 3}(1-1/p) / prod_{p=1 mod 3}(1-1/p) = L_1(1) * prod_{p=2 mod 3}(1-1/p^2)
// with L_1(1) = pi/3^(3/2), leaving two absolutely convergent c_1 = 0
// products and the scalars 3^(1/2) pi^(-1/3).

// (1 - 1/p^2)^(2/3)  [class p = 2 mod 3]
std::vector<ProductFactor> cubes_units_factors_mod2() {
    return {pf({Rat(1), Rat(0), Rat(-1)}, Rat(2, 3))};
}

// (1 + 1/(3p))(1 - 1/p)^(1/3)  [class p = 1 mod 3]
std::vector<ProductFactor> cubes_units_factors_mod1() {
    return {pf({Rat(1), Rat(1, 3)}, Rat(1)), pf({Rat(1), Rat(-1)}, Rat(1, 3))};
}

// (1 - (p^2+2)/(2(p^2+1)(p+1))) (1-1/p)^(-1/2)
//   = (1 + x/2 + x^2) / ((1+x)(1+x^2)) * (1-x)^(-1/2)
std::vector<ProductFactor> squares_ring_factors() {
    return {pf({Rat(1), Rat(1, 2), Rat(1)}, Rat(1)), pf({Rat(1), Rat(1)}, Rat(-1)),
            pf({Rat(1), Rat(0), Rat(1)}, Rat(-1)), pf({Rat(1), Rat(-1)}, Rat(-1, 2))};
}

// (1 - (p^2+1)/((p^2+p+1)(p^2-p+1)(p+1))) (1-1/p)^(-1/3)  [p = 2 mod 3]
//   = (1 + x + x^2 + x^4) / (1 + x + ... + x^5) * (1-x)^(-1/3),
// regrouped with the extra (1-x^2)^(-1/3) so that c_1 = 0
std::vector<ProductFactor> cubes_ring_factors_mod2() {
    return {pf({Rat(1), Rat(1), Rat(1), Rat(0), Rat(1)}, Rat(1)),
            pf({Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)}, Rat(-1)),
            pf({Rat(1), Rat(0), Rat(-1)}, Rat(-1, 3))};
}

// (1 - (2p^4+3p^2+3)/(3(p^2+p+1)(p^2-p+1)(p+1))) (1-1/p)^(-1/3)  [p = 1 mod 3]
//   = (1 + x/3 + x^2 + x^4) / (1 + x + ... + x^5) * (1-x)^(-1/3),
// regrouped with (1-x)^(-1/3) so that c_1 = 0
std::vector<ProductFactor> cubes_ring_factors_mod1() {
    return {pf({Rat(1), Rat(1, 3), Rat(1), Rat(0), Rat(1)}, Rat(1)),
            pf({Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)}, Rat(-1)),
            pf({Rat(1), Rat(-1)}, Rat(-2, 3))};
}

ProductSpec spec_of(int k, int l, std::vector<ProductFactor> f) {
    return {PrimeClass{k, l}, std::move(f)};
}

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = [] {
        std::vector<Entry> e;

        // ---- pure Euler-product constants, quoted to 25 decimals ----
        e.push_back({{"K_cbrt_unity",
                      "prod over p = 1 mod 3 of (1 - 2/(p(p+1)))",
                      "0.9410349413195354517900322", false, "cbrt_unity_sum"},
                     {prod_atom(spec_of(3, 1, near_square_factors()))}});
        e.push_back({{"K_squares_units",
                      "prod over p of (1 + 1/(2p)) sqrt(1 - 1/p)",
                      "0.8121057111631225117062509", false, "squares_units_sum"},
                     {prod_atom(spec_of(1, 0, squares_units_factors()))}});
        e.push_back({{"K_cubes_units",
                      "(1+1/3)(1-1/3)^(2/3) * prod_{p=2 mod 3} (1+1/p)(1-1/p)^(2/3)"
                      " * prod_{p=1 mod 3} (1+1/(3p))(1-1/p)^(2/3)",
                      "0.9477556177621765519078142", false, "cubes_units_sum"},
                     {rat_atom(Rat(4, 3)), rat_atom(Rat(2, 3), Rat(2, 3)),
                      rat_atom(Rat(3), Rat(1, 2)), pi_atom(Rat(-1, 3)),
                      prod_atom(spec_of(3, 2, cubes_units_factors_mod2())),
                      prod_atom(spec_of(3, 1, cubes_units_factors_mod1()))}});
        e.push_back({{"K_cbrt_nullity",
                      "(6/pi^2) prod over p of (1 - 2/(p(p+1)))",
                      "0.2867474284344787341078927", false, "cbrt_nullity_sum"},
                     {rat_atom(Rat(6)), pi_atom(Rat(-2)),
                      prod_atom(spec_of(1, 0, near_square_factors()))}});
        e.push_back({{"K_squares_ring",
                      "prod over p of (1 - (p^2+2)/(2(p^2+1)(p+1))) (1-1/p)^(-1/2)",
                      "1.2569136102101885959492115", false, "squares_ring_sum"},
                     {prod_atom(spec_of(1, 0, squares_ring_factors()))}});
        e.push_back({{"K_cubes_ring",
                      "(3/2)^(1/3) * prod_{p=2 mod 3} (1 - (p^2+1)/((p^4+p^2+1)(p+1))) (1-1/p)^(-1/3)"
                      " * prod_{p=1 mod 3} (1 - (2p^4+3p^2+3)/(3(p^4+p^2+1)(p+1))) (1-1/p)^(-1/3)",
                      "1.4225831466986636811460982", true, "cubes_ring_sum"},
                     {rat_atom(Rat(3, 2), Rat(1, 3)),
                      rat_atom(Rat(3), Rat(1, 2)), pi_atom(Rat(-1, 3)),
                      prod_atom(spec_of(3, 2, cubes_ring_factors_mod2())),
                      prod_atom(spec_of(3, 1, cubes_ring_factors_mod1()))}});

        // ---- assembled leading coefficients of the partial-sum laws ----
        e.push_back({{"phi_sum", "3/pi^2  [sum phi(n) ~ C N^2]", "", false},
                     {rat_atom(Rat(3)), pi_atom(Rat(-2))}});
        e.push_back({{"two_omega_sum", "6/pi^2  [sum 2^omega(n) ~ C N ln N]", "", false},
                     {rat_atom(Rat(6)), pi_atom(Rat(-2))}});
        e.push_back({{"sqrt_unity_sum", "6/pi^2  [sum a(n), x^2=1 ~ C N ln N]", "", false},
                     {rat_atom(Rat(6)), pi_atom(Rat(-2))}});
        e.push_back({{"three_omega_tilde_sum",
                      "(sqrt(3)/2pi) K_cbrt_unity  [sum 3^omega~(n) ~ C N ln N]", "", false},
                     {rat_atom(Rat(3), Rat(1, 2)), rat_atom(Rat(1, 2)), pi_atom(Rat(-1)),
                      prod_atom(spec_of(3, 1, near_square_factors()))}});
        e.push_back({{"cbrt_unity_sum",
                      "(11/9)(sqrt(3)/2pi) K_cbrt_unity  [sum a(n), x^3=1 ~ C N ln N]",
                      "0.317", false},
                     {rat_atom(Rat(3), Rat(1, 2)), rat_atom(Rat(11, 18)), pi_atom(Rat(-1)),
                      prod_atom(spec_of(3, 1, near_square_factors()))}});
        e.push_back({{"phi_over_2omega_sum",
                      "(1/2sqrt(pi)) K_squares_units  [sum phi/2^omega ~ C N^2 (ln N)^(-1/2)]",
                      "", false},
                     {rat_atom(Rat(1, 2)), pi_atom(Rat(-1, 2)),
                      prod_atom(spec_of(1, 0, squares_units_factors()))}});
        e.push_back({{"squares_units_sum",
                      "(43/80)(1/sqrt(pi)) K_squares_units  [sum b(n) in Z_n^* ~ C N^2 (ln N)^(-1/2)]",
                      "0.246", false},
                     {rat_atom(Rat(43, 80)), pi_atom(Rat(-1, 2)),
                      prod_atom(spec_of(1, 0, squares_units_factors()))}});
        e.push_back({{"phi_over_3omega_tilde_sum",
                      "(1/2Gamma(2/3)) K_cubes_units  [sum phi/3^omega~ ~ C N^2 (ln N)^(-1/3)]",
                      "", false},
                     {rat_atom(Rat(1, 2)), gamma_atom(Rat(2, 3), Rat(-1)),
                      rat_atom(Rat(4, 3)), rat_atom(Rat(2, 3), Rat(2, 3)),
                      rat_atom(Rat(3), Rat(1, 2)), pi_atom(Rat(-1, 3)),
                      prod_atom(spec_of(3, 2, cubes_units_factors_mod2())),
                      prod_atom(spec_of(3, 1, cubes_units_factors_mod1()))}});
        e.push_back({{"cubes_units_sum",
                      "(17/36)(1/Gamma(2/3)) K_cubes_units  [sum b(n) in Z_n^* ~ C N^2 (ln N)^(-1/3)]",
                      "0.330", false},
                     {rat_atom(Rat(17, 36)), gamma_atom(Rat(2, 3), Rat(-1)),
                      rat_atom(Rat(4, 3)), rat_atom(Rat(2, 3), Rat(2, 3)),
                      rat_atom(Rat(3), Rat(1, 2)), pi_atom(Rat(-1, 3)),
                      prod_atom(spec_of(3, 2, cubes_units_factors_mod2())),
                      prod_atom(spec_of(3, 1, cubes_units_factors_mod1()))}});
        e.push_back({{"sqrt_nullity_sum", "3/pi^2  [sum a(n), x^2=0 ~ C N ln N]", "", false},
                     {rat_atom(Rat(3)), pi_atom(Rat(-2))}});
        e.push_back({{"cbrt_nullity_sum",
                      "(1/2pi^2) prod (1 - 2/(p(p+1)))  [sum a(n), x^3=0 ~ C N (ln N)^2]",
                      "", false},
                     {rat_atom(Rat(1, 2)), pi_atom(Rat(-2)),
                      prod_atom(spec_of(1, 0, near_square_factors()))}});
        e.push_back({{"squares_ring_sum",
                      "(17/32)(1/sqrt(pi)) K_squares_ring  [sum b(n) in Z_n ~ C N^2 (ln N)^(-1/2)]",
                      "0.376", false},
                     {rat_atom(Rat(17, 32)), pi_atom(Rat(-1, 2)),
                      prod_atom(spec_of(1, 0, squares_ring_factors()))}});
        e.push_back({{"cubes_ring_sum",
                      "(6/13)(1/Gamma(2/3)) K_cubes_ring  [sum b(n) in Z_n ~ C N^2 (ln N)^(-1/3)]",
                      "0.484", true},
                     {rat_atom(Rat(6, 13)), gamma_atom(Rat(2, 3), Rat(-1)),
                      rat_atom(Rat(3, 2), Rat(1, 3)),
                      rat_atom(Rat(3), Rat(1, 2)), pi_atom(Rat(-1, 3)),
                      prod_atom(spec_of(3, 2, cubes_ring_factors_mod2())),
                      prod_atom(spec_of(3, 1, cubes_ring_factors_mod1()))}});
        e.push_back({{"sqrt_neg_unity_sum", "3/(2pi)  [sum a(n), x^2=-1 ~ C N]", "", false},
                     {rat_atom(Rat(3, 2)), pi_atom(Rat(-1))}});
        return e;
    }();
    return entries;
}

BigReal eval_atoms(const std::vector<Atom>& atoms, int work_digits) {
    BigReal out = BigReal::from_u64(1, work_digits);
    for (const auto& atom : atoms) {
        switch (atom.kind) {
            case Atom::Kind::Rational:
                out *= BigReal::from_rat(atom.r, work_digits).pow_rat(atom.exponent);
                break;
            case Atom::Kind::Pi:
                out *= BigReal::pi(work_digits).pow_rat(atom.exponent);
                break;
            case Atom::Kind::Gamma:
                out *= detail::gamma_core(atom.r, work_digits).pow_rat(atom.exponent);
                break;
            case Atom::Kind::Product:
                out *= detail::prime_product_core(atom.prod, 101, 0, work_digits, nullptr);
                break;
        }
    }
    return out;
}

}  // namespace

const std::vector<ConstantInfo>& constant_registry() {
    static const std::vector<ConstantInfo> infos = [] {
        std::vector<ConstantInfo> v;
        for (const auto& entry : registry()) v.push_back(entry.info);
        return v;
    }();
    return infos;
}

ConstantValue constant(const std::string& name, int digits) {
    for (const auto& entry : registry()) {
        if (entry.info.name != name) continue;
        BigReal value = detail::run_validated(
            digits, [&](int d) { return eval_atoms(entry.atoms, d + 15); });
        return {std::move(value), entry.info};
    }
    std::string known;
    for (const auto& entry : registry()) known += entry.info.name + " ";
    throw invalid_input("constant: unknown name '" + name + "'; expected one of: " + known);
}

}  // namespace modcount::hiprec
