#pragma once

#include "twist.hpp"

namespace bdtwist {

// One full pipeline run for a triple: exponent solution, session field,
// representation data, calibrated constants, standard R, twist, twisted R.
// Everything is exact; rebuilding with a larger denominator is cheap, which
// is how exponents outside 1/D * Z (from Cartan-factor fits) are absorbed.
struct Session {
    BDTriple triple;
    GaugeOptions gauge;
    TripleChains chains;
    ExponentSolution sol;
    VField field;
    CartanData cartan;
    NormalOrder order;
    FundamentalRep fund;
    ModifiedRep mrep;
    CartanWeylFamily family;
    RootConstants consts;
    StandardR rmat;
    FullTwist twist;
    SquareMatrix R;

    int n() const { return triple.n; }
    RepEnv env() const { return RepEnv{field, cartan, order, mrep, family}; }

    static Session build(const BDTriple& t, const GaugeOptions& g = {}, int extra_denominator = 1) {
        Session s;
        s.triple = t;
        s.gauge = g;
        s.chains = validate_triple(t);
        s.sol = solve_exponents(t, g);
        s.field.D = (int)lcm_int(Int(s.sol.D), Int(extra_denominator)).get_si();
        s.cartan = build_cartan(t.n);
        s.order = convex_order(t.n);
        s.fund = fundamental_rep(t.n);
        check_fundamental_relations(s.fund, s.field);
        s.mrep = modified_rep(s.fund, t, s.sol, s.field);
        s.family = cartan_weyl(s.mrep, s.order, s.field);
        s.consts = calibrate_constants(s.env());
        s.rmat = standard_R(s.env(), s.consts);
        s.twist = full_twist(s.env(), s.consts, t, s.chains);
        s.R = twisted_R(s.twist.F, s.rmat.R, t.n);
        return s;
    }

    static BDTriple empty_triple(int n) { return BDTriple::make(n, {}); }
};

} // namespace bdtwist
