// End-to-end acceptance checks. Each check prints exactly one PASS/FAIL line;
// the process exits nonzero if any check fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "lgf/dsl.hpp"
#include "lgf/integrals.hpp"

using namespace lgf;

namespace {

int g_failures = 0;

void run_check(const std::string& name, const std::function<void()>& body) {
    try {
        body();
        std::cout << "PASS " << name << "\n";
    } catch (const std::exception& e) {
        std::cout << "FAIL " << name << " (" << e.what() << ")\n";
        ++g_failures;
    }
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::runtime_error(msg);
}

std::vector<std::pair<std::string, HermSpace>> minimal_cases(
    const LocalFieldCtx& ctx) {
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

RationalQS zr(long q, int h) {
    RationalQS z = RationalQS::zeta(q).shift_half(h);
    return z.subst_neg_s() * z.inv();
}

// 01: closed-form minimal gammas against the parameter-side product
void check_minimal_vs_parameter() {
    auto start = std::chrono::steady_clock::now();
    for (long q : {3L, 5L, 7L, 9L}) {
        LocalFieldCtx ctx = LocalFieldCtx::from_q(q);
        for (int seed : {1, ctx.res().nonsquare()}) {
            AddChar psi{0, seed};
            for (const auto& [name, sp] : minimal_cases(ctx)) {
                GammaResult g = gamma_minimal(ctx, sp, psi);
                StdParameter par = principal_parameter(ctx, sp);
                require(g.gamma == gamma_of_parameter(ctx, par, psi),
                        name + " gamma mismatch at q=" + std::to_string(q));
                require(g.L == L_of_parameter(ctx, par),
                        name + " L mismatch at q=" + std::to_string(q));
            }
        }
    }
    auto secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    require(secs < 5.0, "time budget exceeded");
}

// 02: the printed closed forms, frozen verbatim
void check_printed_forms() {
    for (long q : {3L, 5L, 7L}) {
        LocalFieldCtx ctx = LocalFieldCtx::from_q(q);
        AddChar psi{0, 1};
        for (const auto& [name, sp] : minimal_cases(ctx)) {
            StdParameter par = principal_parameter(ctx, sp);
            RationalQS lhs = gamma_of_parameter(ctx, par, psi).shift_half(1);
            RationalQS rhs = RationalQS::one(q);
            if (name == "SOa2" || name == "Qm1n1")
                rhs = zr(q, 1) *
                      tate_gamma(ctx, quad_char(sp.disc), psi).shift_half(1);
            else if (name == "SOa3")
                rhs = zr(q, 0) * zr(q, 2);
            else if (name == "SOa4")
                rhs = zr(q, 3) * zr(q, 1) * zr(q, 1) * zr(q, -1);
            else if (name == "Q1n1")
                rhs = zr(q, 3) * zr(q, 1) * zr(q, -1);
            else if (name == "U1")
                rhs = zr(q, 1) *
                      tate_gamma(ctx, quad_char(sp.ext->d), psi).shift_half(1);
            else if (name == "Ura2") {
                RationalQS e =
                    tate_eps(ctx, quad_char(sp.ext->d), psi).shift_half(1);
                rhs = RationalQS::monomial(Coeff(-1), 1) * zr(q, 2) * e * e;
            }
            require(lhs == rhs,
                    name + " closed form at q=" + std::to_string(q));
        }
    }
}

// 03: shell integral values and the degenerate Whittaker route
void check_shell_integrals() {
    for (long q : {3L, 5L, 7L}) {
        LocalFieldCtx ctx = LocalFieldCtx::from_q(q);
        AddChar psi{0, 1};

        ShellIntegrand unram;
        unram.w_half = 2;
        unram.w_s = 2;
        unram.inner = {{0, 1, true, 0}};
        require(eval_shell_integral(ctx, unram, psi) == RationalQS::one(q),
                "collapsed shell value");

        ShellIntegrand ram;
        ram.w_half = 1;
        ram.w_s = 1;
        ram.inner = {{0, 1, true, 0}};
        RationalQS pre = RationalQS::monomial(Coeff::q_pow_half(q, 1), -1);
        RationalQS denom = RationalQS::from_laurent(
            q, {{0, Coeff(1)}, {1, Coeff::q_pow_half(q, -1)}},
            {{0, Coeff(1)}});
        ram.prefactor = pre;
        ram.addend = -(pre * denom.inv());
        require(eval_shell_integral(ctx, ram, psi) == denom.inv(),
                "ramified shell value");

        ShellIntegrand shifted;
        shifted.w_half = 1;
        shifted.w_s = 1;
        shifted.inner = {{0, 1, true, 1}};
        RationalQS expect = RationalQS::from_laurent(
            q, {{0, Coeff(1)}, {1, Coeff::q_pow_half(q, 1)}}, {{0, Coeff(1)}});
        require(eval_shell_integral(ctx, shifted, psi) == expect,
                "twisted shell value");

        SquareClass m1 = ctx.class_minus_one();
        std::vector<HermSpace> spaces;
        for (auto a : {SQU, SQPI, SQUPI})
            spaces.push_back(from_diagonal(ctx, CaseTag::SO, {SQ1, m1 * a}));
        spaces.push_back(from_diagonal(ctx, CaseTag::Qm1, {m1 * SQU},
                                       std::nullopt,
                                       QuatData{false, SQU, SQPI}));
        spaces.push_back(
            from_diagonal(ctx, CaseTag::U, {SQ1}, ExtData{false, SQU}));
        spaces.push_back(from_diagonal(ctx, CaseTag::Q1, {SQ1}, std::nullopt,
                                       QuatData{false, SQU, SQPI}));
        for (const auto& sp : spaces)
            require(gamma_via_whittaker(ctx, sp, psi) ==
                        gamma_minimal(ctx, sp, psi).gamma,
                    "whittaker route at q=" + std::to_string(q));
    }
}

// 04: indicator factorization over every division pair
void check_indicator_factorization() {
    auto start = std::chrono::steady_clock::now();
    for (long q : {3L, 5L}) {
        LocalFieldCtx ctx = LocalFieldCtx::from_q(q);
        int digits = q == 3 ? 4 : 3;
        const SquareClass all[] = {SQ1, SQU, SQPI, SQUPI};
        std::set<std::pair<std::string, std::string>> done;
        int pairs = 0;
        for (auto a : all)
            for (auto b : all) {
                if (ctx.hilbert(a, b) != -1) continue;
                ++pairs;
                // normalize to ord(a) = 0, ord(b) = 1: swap if needed, and
                // replace (a, b) by the isomorphic pair (-a b, b) when both
                // entries are odd
                SquareClass aa = a, bb = b;
                if (aa.vpar == 1 && bb.vpar == 0) std::swap(aa, bb);
                if (aa.vpar == 1 && bb.vpar == 1)
                    aa = ctx.class_minus_one() * aa * bb;
                if (!done.insert({aa.label(), bb.label()}).second) continue;
                long checked =
                    check_quat_indicator(ctx, aa, bb, 3, digits);
                long expect = 1;
                for (int i = 0; i < 3 * digits; ++i) expect *= q;
                require(checked == expect - 1, "triple count");
            }
        require(pairs > 0, "no division pairs found");
    }
    auto secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    require(secs < 30.0, "time budget exceeded");
}

// 05: functional equation on a randomized tower suite covering every case
void check_functional_equations() {
    std::mt19937 rng(1234501);
    std::map<CaseTag, int> seen;
    int runs = 0;
    while (runs < 24 || seen.size() < 8) {
        Request req = random_request(rng);
        LocalFieldCtx ctx = LocalFieldCtx::from_q(req.q);
        ReprDescriptor desc = request_descriptor(req);
        FEVerdict v = check_functional_equation(ctx, desc, req.psi);
        require(v.pass, "functional equation: " + print_request(req));
        ++seen[desc.space.tag];
        ++runs;
        require(runs < 4000, "case coverage not reached");
    }
}

// 06: the covariance monomial row of each case, including the disc twist
void check_covariance_rows() {
    LocalFieldCtx ctx = LocalFieldCtx::from_q(5);
    OmegaSpec triv;
    auto expo = [&](const HermSpace& sp, const OmegaSpec& w) {
        RationalQS t = t_monomial(ctx, sp, w, FElem{1, 0});
        Coeff c;
        long e = 0;
        require(t.is_monomial(&c, &e), "row is not a monomial");
        return e;
    };

    auto space_of = [&](CaseTag tag, int n, SquareClass disc = SQ1) {
        HermSpace sp;
        sp.tag = tag;
        sp.n = n;
        sp.disc = disc;
        if (tag == CaseTag::U || tag == CaseTag::qGL)
            sp.ext = ExtData{false, SQU};
        if (tag == CaseTag::Q1 || tag == CaseTag::Qm1)
            sp.quat = QuatData{false, SQU, SQPI};
        return sp;
    };

    OmegaSpec trivE = triv;
    trivE.w1.fdeg = 2;
    OmegaSpec trivPair = triv;
    trivPair.w2 = trivial_char();
    for (int n : {1, 2, 3}) {
        require(expo(space_of(CaseTag::GL, n), trivPair) == 2 * n, "GL row");
        require(expo(space_of(CaseTag::qGL, n), trivE) == 4 * n, "qGL row");
        require(expo(space_of(CaseTag::QGL, n), trivPair) == 4 * n, "QGL row");
        require(expo(space_of(CaseTag::Sp, 2 * n), triv) == 2 * n + 1,
                "Sp row");
        require(expo(space_of(CaseTag::SO, 2 * n), triv) == 2 * n,
                "even SO row");
        require(expo(space_of(CaseTag::SO, 2 * n + 1), triv) == 2 * n,
                "odd SO row");
        require(expo(space_of(CaseTag::U, n), trivE) == 2 * n, "U row");
        require(expo(space_of(CaseTag::Q1, n), triv) == 2 * n + 1, "Q1 row");
        require(expo(space_of(CaseTag::Qm1, n), triv) == 2 * n, "Qm1 row");
    }

    // the disc character (d, .)_F enters the orthogonal-type rows: twisting
    // the disc by u flips the value at a = pi by (u, pi)_F = -1
    for (CaseTag tag : {CaseTag::SO, CaseTag::Qm1}) {
        RationalQS t1 =
            t_monomial(ctx, space_of(tag, 4, SQ1), triv, FElem{1, 0});
        RationalQS tu =
            t_monomial(ctx, space_of(tag, 4, SQU), triv, FElem{1, 0});
        require(tu == t1 * RationalQS::monomial(Coeff(-1), 0),
                "disc twist row");
    }

    // gamma itself follows the rows on a randomized suite
    std::mt19937 rng(60606);
    std::map<CaseTag, int> seen;
    int done = 0;
    while (done < 24 || seen.size() < 8) {
        Request req = random_request(rng);
        if (req.psi.level != 0) continue;
        bool abstract = false;
        for (const auto& b : req.tower) abstract |= b.abstract_gj;
        if (abstract) continue;  // fixed-psi data cannot be rescaled
        LocalFieldCtx c2 = LocalFieldCtx::from_q(req.q);
        ReprDescriptor desc = request_descriptor(req);
        GammaResult g0 = gamma_of_descriptor(c2, desc, req.psi);
        for (FElem a : {FElem{0, 1}, FElem{1, 0}, FElem{1, 1}}) {
            AddChar psi_a = req.psi.rescale(
                c2, a.val, c2.unit_rep(SquareClass{0, a.upar}));
            GammaResult ga = gamma_of_descriptor(c2, desc, psi_a);
            RationalQS t = t_monomial(c2, desc.space, desc.omega, a);
            require(ga.gamma == g0.gamma * t,
                    "gamma covariance: " + print_request(req));
        }
        ++seen[desc.space.tag];
        ++done;
        require(done < 4000, "case coverage not reached");
    }
}

// 07: compositional route vs unramified eigenvalue route
void check_route_independence() {
    int total = 0;
    for (long q : {3L, 5L, 9L}) {
        LocalFieldCtx ctx = LocalFieldCtx::from_q(q);
        AddChar psi{0, 1};
        std::vector<ReprDescriptor> descs;
        auto add = [&](CaseTag tag, int n, std::vector<GLBlock> tower,
                       std::optional<ExtData> ext = std::nullopt) {
            ReprDescriptor d;
            d.space.tag = tag;
            d.space.n = n;
            d.space.ext = ext;
            d.space.disc = disc_from_det(ctx, tag, n, SQ1);
            d.tower = std::move(tower);
            if (ext) d.omega.w1.fdeg = 2;
            finalize_space(ctx, d.space);
            descs.push_back(std::move(d));
        };
        auto ublock = [&](int m, Coeff z, int fdeg = 1) {
            GLBlock b;
            b.m = m;
            b.chi = MultChar{SQ1, z, fdeg};
            return b;
        };
        add(CaseTag::Sp, 4, {ublock(2, Coeff(1))});
        add(CaseTag::Sp, 6, {ublock(1, -Coeff(1)), ublock(2, Coeff::i_unit())});
        add(CaseTag::Sp, 4, {ublock(1, Coeff(2)), ublock(1, Coeff(1))});
        add(CaseTag::SO, 4, {ublock(2, Coeff(1))});
        add(CaseTag::SO, 5, {ublock(2, -Coeff(1))});
        add(CaseTag::SO, 6, {ublock(1, Coeff(1)), ublock(2, Coeff::i_unit())});
        add(CaseTag::SO, 4, {ublock(1, Coeff(3)), ublock(1, Coeff(1))});
        add(CaseTag::U, 2, {ublock(1, Coeff(1), 2)}, ExtData{false, SQU});
        add(CaseTag::U, 4, {ublock(2, -Coeff(1), 2)}, ExtData{false, SQU});
        add(CaseTag::U, 3, {ublock(1, Coeff::i_unit(), 2)},
            ExtData{false, SQU});
        for (const auto& d : descs) {
            GammaResult a = gamma_of_tower(ctx, d, psi);
            GammaResult b = gamma_unramified(ctx, d, psi);
            require(a.gamma == b.gamma,
                    "route mismatch on " + d.space.json());
            ++total;
        }
    }
    require(total >= 10, "not enough descriptors");
}

// 08: the Hilbert symbol table against brute-force solvability
void check_hilbert_table() {
    for (long q : {3L, 5L, 7L, 9L}) {
        LocalFieldCtx ctx = LocalFieldCtx::from_q(q);
        const SquareClass all[] = {SQ1, SQU, SQPI, SQUPI};
        for (auto a : all)
            for (auto b : all)
                require(ctx.hilbert(a, b) == ctx.hilbert_oracle(a, b),
                        "hilbert(" + a.label() + ", " + b.label() +
                            ") at q=" + std::to_string(q));
    }
}

// 09: exact Gauss constants against numeric character sums
void check_gauss_constants() {
    for (long q : {3L, 5L, 7L, 9L, 25L}) {
        LocalFieldCtx ctx = LocalFieldCtx::from_q(q);
        int p = ctx.res().p();
        int k = ctx.res().k();
        double sq = std::sqrt(static_cast<double>(q));
        for (auto d : {SQPI, SQUPI}) {
            MultChar chi = quad_char(d);
            for (int seed = 1; seed < p; ++seed) {
                AddChar psi{0, seed};
                GaussConstant gc = gauss_constant(ctx, chi, psi);
                std::complex<double> exact = gc.value.to_complex();
                std::complex<double> chipi =
                    chi.at_uniformizer(ctx).to_complex();
                std::complex<double> numeric =
                    chipi * numeric_gauss_sum(p, k, seed) / sq;
                require(std::abs(exact - numeric) < 1e-9,
                        "gauss constant at q=" + std::to_string(q) +
                            " d=" + d.label() +
                            " seed=" + std::to_string(seed));
                // the epsilon monomial built on it has modulus q^{1/2}
                Coeff c;
                long e = 0;
                require(tate_eps(ctx, chi, psi).is_monomial(&c, &e),
                        "epsilon shape");
                require(e == 1, "epsilon exponent");
                require(std::abs(std::abs(c.to_complex()) - sq) < 1e-9,
                        "epsilon modulus");
            }
        }
    }
    for (int p : {3, 5}) {
        std::complex<double> n1 = numeric_gauss_sum(p, 1, 1) /
                                  std::sqrt(static_cast<double>(p));
        std::complex<double> n2 =
            numeric_gauss_sum(p, 2, 1) / static_cast<double>(p);
        require(std::abs(n2 - (-(-n1) * (-n1))) < 1e-9, "quadratic lift");
    }
}

// 10: epsilon factors are monomials across the randomized suite
void check_eps_monomial() {
    std::mt19937 rng(808808);
    for (int i = 0; i < 60; ++i) {
        Request req = random_request(rng);
        LocalFieldCtx ctx = LocalFieldCtx::from_q(req.q);
        GammaResult g =
            gamma_of_descriptor(ctx, request_descriptor(req), req.psi);
        require(g.eps.is_monomial(),
                "epsilon not monomial: " + print_request(req));
    }
}

// 11: request round trip and the self-verification entry point
void check_requests_round_trip() {
    std::mt19937 rng(111111);
    for (int i = 0; i < 50; ++i) {
        Request r = random_request(rng);
        Request back = parse_request(print_request(r));
        require(back == r, "round trip: " + print_request(r));
    }
    for (long q : {3L, 5L, 9L}) {
        RunResult vm = run_text("field q=" + std::to_string(q) +
                                "; space Sp(n=0); verify-minimal");
        require(vm.exit_code == 0, "verify-minimal exit code");
        require(vm.output.find("DIFFER") == std::string::npos,
                "verify-minimal output");
    }
}

}  // namespace

int main() {
    run_check("01 minimal closed forms match the parameter gammas",
              check_minimal_vs_parameter);
    run_check("02 printed minimal gamma expressions", check_printed_forms);
    run_check("03 shell integral values and the Whittaker route",
              check_shell_integrals);
    run_check("04 indicator factorization for division pairs",
              check_indicator_factorization);
    run_check("05 functional equation on randomized towers",
              check_functional_equations);
    run_check("06 psi-covariance rows per case", check_covariance_rows);
    run_check("07 compositional vs unramified route", check_route_independence);
    run_check("08 hilbert symbol vs brute force", check_hilbert_table);
    run_check("09 gauss constants vs numeric sums", check_gauss_constants);
    run_check("10 epsilon factors are monomials", check_eps_monomial);
    run_check("11 request round trip and self-verification",
              check_requests_round_trip);
    return g_failures == 0 ? 0 : 1;
}
