#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lgf/params.hpp"

using namespace lgf;

namespace {

// zeta_F(-s + h/2) / zeta_F(s + h/2)
RationalQS zr(long q, int h) {
    RationalQS z = RationalQS::zeta(q).shift_half(h);
    return z.subst_neg_s() * z.inv();
}

struct NamedSpace {
    const char* name;
    HermSpace sp;
};

std::vector<NamedSpace> six_cases(const LocalFieldCtx& ctx) {
    SquareClass m1 = ctx.class_minus_one();
    return {
        {"SOa2", from_diagonal(ctx, CaseTag::SO, {SQ1, m1 * SQU})},
        {"SOa3", from_diagonal(ctx, CaseTag::SO, {SQ1, m1 * SQU, m1 * SQPI})},
        {"SOa4",
         from_diagonal(ctx, CaseTag::SO, {SQ1, m1 * SQU, m1 * SQPI, SQUPI})},
        {"U1", from_diagonal(ctx, CaseTag::U, {SQ1}, ExtData{false, SQU})},
        {"Ura2", from_diagonal(ctx, CaseTag::U, {SQ1, m1 * SQU},
                               ExtData{false, SQPI})},
        {"Q1n1", from_diagonal(ctx, CaseTag::Q1, {SQ1}, std::nullopt,
                               QuatData{false, SQU, SQPI})},
        {"Qm1n1", from_diagonal(ctx, CaseTag::Qm1, {m1 * SQU}, std::nullopt,
                                QuatData{false, SQU, SQPI})},
    };
}

}  // namespace

TEST_CASE("parameter gammas reproduce the closed forms at s + 1/2") {
    for (long q : {3L, 5L, 7L}) {
        LocalFieldCtx ctx = LocalFieldCtx::from_q(q);
        AddChar psi{0, 1};
        for (const auto& [name, sp] : six_cases(ctx)) {
            CAPTURE(q);
            CAPTURE(name);
            StdParameter par = principal_parameter(ctx, sp);
            RationalQS lhs = gamma_of_parameter(ctx, par, psi).shift_half(1);
            std::string tag(name);
            RationalQS rhs = RationalQS::one(q);
            if (tag == "SOa2" || tag == "Qm1n1") {
                rhs = zr(q, 1) *
                      tate_gamma(ctx, quad_char(sp.disc), psi).shift_half(1);
            } else if (tag == "SOa3") {
                rhs = zr(q, 0) * zr(q, 2);
            } else if (tag == "SOa4") {
                rhs = zr(q, 3) * zr(q, 1) * zr(q, 1) * zr(q, -1);
            } else if (tag == "Q1n1") {
                rhs = zr(q, 3) * zr(q, 1) * zr(q, -1);
            } else if (tag == "U1") {
                rhs = zr(q, 1) *
                      tate_gamma(ctx, quad_char(sp.ext->d), psi).shift_half(1);
            } else if (tag == "Ura2") {
                RationalQS e =
                    tate_eps(ctx, quad_char(sp.ext->d), psi).shift_half(1);
                rhs = RationalQS::monomial(Coeff(-1), 1) * zr(q, 2) * e * e;
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("parameter gamma decomposes as eps times the L ratio") {
    for (long q : {3L, 5L}) {
        LocalFieldCtx ctx = LocalFieldCtx::from_q(q);
        AddChar psi{1, 1};
        for (const auto& [name, sp] : six_cases(ctx)) {
            StdParameter par = principal_parameter(ctx, sp);
            if (par.mode != ParamMode::PlainF) continue;  // quadratic summands
            CAPTURE(name);
            // every summand character is self-inverse, so the dual parameter
            // coincides with the parameter itself
            RationalQS rhs = eps_of_parameter(ctx, par, psi) *
                             L_of_parameter(ctx, par).reflect() /
                             L_of_parameter(ctx, par);
            CHECK(gamma_of_parameter(ctx, par, psi) == rhs);
        }
    }
}

TEST_CASE("trivial spaces have trivial or zeta-shaped parameters") {
    LocalFieldCtx ctx = LocalFieldCtx::from_q(5);
    HermSpace sp0;
    sp0.tag = CaseTag::SO;
    sp0.n = 0;
    StdParameter p0 = principal_parameter(ctx, sp0);
    CHECK(p0.N == 0);
    CHECK(gamma_of_parameter(ctx, p0, AddChar{0, 1}) == RationalQS::one(5));
    // Sp(0) still has a one-dimensional standard representation
    HermSpace spc;
    spc.tag = CaseTag::Sp;
    spc.n = 0;
    StdParameter pc = principal_parameter(ctx, spc);
    CHECK(pc.N == 1);
    CHECK(L_of_parameter(ctx, pc) == RationalQS::zeta(5));
}

TEST_CASE("non-minimal spaces are rejected") {
    LocalFieldCtx ctx = LocalFieldCtx::from_q(3);
    SquareClass m1 = ctx.class_minus_one();
    HermSpace iso = from_diagonal(ctx, CaseTag::SO, {SQ1, m1});
    CHECK_THROWS(principal_parameter(ctx, iso));
}

TEST_CASE("parameter dimensions match the tables") {
    for (long q : {3L, 9L}) {
        LocalFieldCtx ctx = LocalFieldCtx::from_q(q);
        for (const auto& [name, sp] : six_cases(ctx)) {
            CAPTURE(name);
            StdParameter par = principal_parameter(ctx, sp);
            CHECK(par.N == std_dimension(sp));
        }
    }
}
