#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lgf/local_field.hpp"

using namespace lgf;

TEST_CASE("residue field structure") {
    for (auto [p, k] : {std::pair{3, 1}, {5, 1}, {7, 1}, {3, 2}, {5, 2}}) {
        ResidueField rf(p, k);
        long q = rf.q();
        // multiplicative group order, inverses, associativity spot checks
        int squares = 0;
        for (int x = 1; x < q; ++x) {
            CHECK(rf.mul(x, rf.inv(x)) == 1);
            if (rf.legendre(x) == 1) ++squares;
            CHECK(rf.pow(x, q - 1) == 1);
        }
        CHECK(squares == (q - 1) / 2);
        CHECK(rf.legendre(rf.nonsquare()) == -1);
        for (int x = 0; x < q; ++x)
            for (int y = 0; y < q; ++y)
                CHECK(rf.mul(x, y) == rf.mul(y, x));
        // trace is GF(p)-linear and not identically zero
        bool tr_nonzero = false;
        for (int x = 0; x < q; ++x)
            if (rf.trace(x) != 0) tr_nonzero = true;
        CHECK(tr_nonzero);
    }
}

TEST_CASE("legendre is multiplicative") {
    ResidueField rf(3, 2);
    for (int x = 1; x < rf.q(); ++x)
        for (int y = 1; y < rf.q(); ++y)
            CHECK(rf.legendre(rf.mul(x, y)) == rf.legendre(x) * rf.legendre(y));
}

TEST_CASE("square class labels round trip") {
    for (SquareClass c : {SQ1, SQU, SQPI, SQUPI}) {
        auto back = SquareClass::from_label(c.label());
        REQUIRE(back.has_value());
        CHECK(*back == c);
        CHECK(c * c == SQ1);
    }
    CHECK_FALSE(SquareClass::from_label("nope").has_value());
    CHECK(SQU * SQPI == SQUPI);
}

TEST_CASE("context factorization of q") {
    CHECK(LocalFieldCtx::from_q(9).res().p() == 3);
    CHECK(LocalFieldCtx::from_q(9).res().k() == 2);
    CHECK(LocalFieldCtx::from_q(7).res().k() == 1);
    CHECK_THROWS(LocalFieldCtx::from_q(8));   // even
    CHECK_THROWS(LocalFieldCtx::from_q(15));  // not a prime power
}

TEST_CASE("hilbert symbol: bilinearity, symmetry, and the unit rule") {
    for (long q : {3L, 5L, 7L, 9L}) {
        LocalFieldCtx ctx = LocalFieldCtx::from_q(q);
        const SquareClass all[] = {SQ1, SQU, SQPI, SQUPI};
        for (auto a : all)
            for (auto b : all) {
                CHECK(ctx.hilbert(a, b) == ctx.hilbert(b, a));
                for (auto c : all)
                    CHECK(ctx.hilbert(a * b, c) ==
                          ctx.hilbert(a, c) * ctx.hilbert(b, c));
                // two units always pair trivially in odd residue char
                if (a.vpar == 0 && b.vpar == 0) CHECK(ctx.hilbert(a, b) == 1);
            }
        // (u, pi) = legendre of the nonsquare unit = -1
        CHECK(ctx.hilbert(SQU, SQPI) == -1);
        // (pi, pi) = (pi, -1) = legendre(-1)
        CHECK(ctx.hilbert(SQPI, SQPI) ==
              ctx.hilbert(ctx.class_minus_one(), SQPI));
        CHECK(ctx.hilbert(SQPI, SQPI) == ctx.leg_minus_one());
    }
}

TEST_CASE("hilbert table vs brute-force solvability") {
    for (long q : {3L, 5L}) {
        LocalFieldCtx ctx = LocalFieldCtx::from_q(q);
        const SquareClass all[] = {SQ1, SQU, SQPI, SQUPI};
        for (auto a : all)
            for (auto b : all)
                CHECK(ctx.hilbert(a, b) == ctx.hilbert_oracle(a, b));
    }
}

TEST_CASE("quadratic extension classification") {
    LocalFieldCtx ctx = LocalFieldCtx::from_q(5);
    auto eu = ctx.classify_quad_ext(SQU);
    CHECK_FALSE(eu.ramified);
    CHECK(eu.f == 2);
    CHECK(eu.qprime == 25);
    auto ep = ctx.classify_quad_ext(SQPI);
    CHECK(ep.ramified);
    CHECK(ep.f == 1);
    CHECK(ep.qprime == 5);
    auto eup = ctx.classify_quad_ext(SQUPI);
    CHECK(eup.ramified);
}

TEST_CASE("characters evaluate multiplicatively") {
    LocalFieldCtx ctx = LocalFieldCtx::from_q(7);
    MultChar chi{SQPI, Coeff::i_unit(), 1};
    // chi(x y) = chi(x) chi(y) on representatives
    for (long v1 : {0L, 1L, 2L})
        for (long v2 : {0L, 1L}) {
            for (auto u1 : {SQ1, SQU})
                for (auto u2 : {SQ1, SQU}) {
                    Coeff lhs = chi.eval(ctx, v1 + v2, u1 * u2);
                    Coeff rhs = chi.eval(ctx, v1, u1) * chi.eval(ctx, v2, u2);
                    CHECK(lhs == rhs);
                }
        }
    CHECK(chi.times(chi.inverse()).eval(ctx, 3, SQU) == Coeff(1));
    CHECK(chi.conductor() == 1);
    CHECK(trivial_char().conductor() == 0);
    CHECK(quad_char(SQU).conductor() == 0);
}

TEST_CASE("abs_power_char is the |.|^{h/2} twist") {
    MultChar c = abs_power_char(9, 3);
    CHECK(c.d == SQ1);
    CHECK(c.z == Coeff::q_pow_half(9, -3));
}

TEST_CASE("additive character digits") {
    LocalFieldCtx ctx = LocalFieldCtx::from_q(3);
    AddChar psi{0, 1};
    // values are p-th roots of unity and sum to zero over a full digit
    std::complex<double> sum = 0;
    for (int d = 0; d < 3; ++d) {
        auto v = psi.digit_value(ctx.res(), d);
        CHECK(std::abs(std::abs(v) - 1.0) < 1e-12);
        sum += v;
    }
    CHECK(std::abs(sum) < 1e-12);
    CHECK(psi.rescale(ctx, 2, 1).level == 2);
    AddChar inv = psi.inverse(ctx);
    for (int d = 0; d < 3; ++d)
        CHECK(std::abs(psi.digit_value(ctx.res(), d) *
                           inv.digit_value(ctx.res(), d) -
                       1.0) < 1e-12);
}
