#include "lgf/params.hpp"

#include <stdexcept>

namespace lgf {

namespace {

StdParameter plain(std::vector<ParamSummand> summands) {
    StdParameter par;
    par.summands = std::move(summands);
    for (const auto& s : par.summands) par.N += s.m;
    return par;
}

}  // namespace

StdParameter principal_parameter(const LocalFieldCtx& ctx,
                                 const HermSpace& space) {
    switch (classify_minimal(ctx, space)) {
        case MinimalTag::Trivial:
            if (space.tag == CaseTag::Sp || space.tag == CaseTag::Q1)
                return plain({{std_dimension(space), trivial_char()}});
            return plain({});
        case MinimalTag::SOa2:
        case MinimalTag::Qm1n1:
            return plain({{1, trivial_char()}, {1, quad_char(space.disc)}});
        case MinimalTag::SOa3:
            return plain({{2, trivial_char()}});
        case MinimalTag::SOa4:
            return plain({{3, trivial_char()}, {1, trivial_char()}});
        case MinimalTag::Q1n1:
            return plain({{3, trivial_char()}});
        case MinimalTag::U1: {
            StdParameter par =
                plain({{1, trivial_char()}, {1, quad_char(space.ext->d)}});
            par.mode = ParamMode::UnitaryU1;
            par.ext_d = space.ext->d;
            return par;
        }
        case MinimalTag::Ura2: {
            StdParameter par =
                plain({{2, trivial_char()}, {2, quad_char(space.ext->d)}});
            par.mode = ParamMode::UnitaryUra2;
            par.ext_d = space.ext->d;
            return par;
        }
        case MinimalTag::NotMinimal:
            break;
    }
    throw std::invalid_argument("space is not minimal");
}

RationalQS gamma_of_parameter(const LocalFieldCtx& ctx, const StdParameter& par,
                              const AddChar& psi) {
    long q = ctx.q();
    if (par.mode == ParamMode::UnitaryU1) {
        // zeta_F(1-s)/zeta_F(s) * gamma_F(s, chi_E, psi); the zeta ratio is
        // the trivial-character gamma, which keeps the expression covariant
        // in the level and seed of psi
        return tate_gamma(ctx, trivial_char(), psi) *
               tate_gamma(ctx, quad_char(par.ext_d), psi);
    }
    // the ramified binary unitary case falls through to the plain product
    // over its summands (2, 1) + (2, chi_E), which agrees with the closed
    // -q^{-s} zeta-ratio eps^2 expression
    RationalQS out = RationalQS::one(q);
    for (const auto& s : par.summands)
        for (int j = 0; j < s.m; ++j)
            out = out * tate_gamma(ctx, s.chi, psi).shift_half(s.m - 1 - 2 * j);
    return out;
}

RationalQS L_of_parameter(const LocalFieldCtx& ctx, const StdParameter& par) {
    RationalQS out = RationalQS::one(ctx.q());
    for (const auto& s : par.summands)
        for (int j = 0; j < s.m; ++j)
            out = out * tate_L(ctx, s.chi).shift_half(s.m - 1 - 2 * j);
    return out;
}

RationalQS eps_of_parameter(const LocalFieldCtx& ctx, const StdParameter& par,
                            const AddChar& psi) {
    RationalQS out = RationalQS::one(ctx.q());
    for (const auto& s : par.summands)
        for (int j = 0; j < s.m; ++j)
            out = out * tate_eps(ctx, s.chi, psi).shift_half(s.m - 1 - 2 * j);
    return out;
}

}  // namespace lgf
