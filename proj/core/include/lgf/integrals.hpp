#pragma once

#include <complex>
#include <vector>

#include "lgf/doubling.hpp"
#include "lgf/spaces.hpp"

namespace lgf {

/// One inner factor of a degenerate Whittaker shell integral:
/// int_F 1_{t^{-1}O}(c x^e) psi(pi^{dval} x) dx with c of valuation cval,
/// e = xpow in {1, 2}. Without the psi factor it is just the volume of the
/// admissible disc.
struct ShellInner {
    long cval = 0;
    int xpow = 2;
    bool has_psi = false;
    long dval = 0;
};

/// sum over shells t = pi^k, k >= 0, of |t|^{w_half/2 + w_s * s} times the
/// inner factors; the result fed back as prefactor * shell + addend
struct ShellIntegrand {
    long w_half = 0;
    long w_s = 1;
    std::vector<ShellInner> inner;
    RationalQS prefactor;
    RationalQS addend;
};

/// exact value (in the printed variable s); finite sum when a psi factor is
/// present, parity-folded geometric series otherwise
RationalQS eval_shell_integral(const LocalFieldCtx& ctx,
                               const ShellIntegrand& integrand,
                               const AddChar& psi);

/// truncated direct summation with root-of-unity digit averages; oracle for
/// the exact evaluator
std::complex<double> numeric_shell_integral(const LocalFieldCtx& ctx,
                                            const ShellIntegrand& integrand,
                                            const AddChar& psi,
                                            std::complex<double> s,
                                            int depth = 12);

/// the value l(f_s) of the degenerate Whittaker functional on the normalized
/// section, for the rank-one-type minimal spaces (level-0 psi required)
RationalQS whittaker_minimal(const LocalFieldCtx& ctx, const HermSpace& space,
                             const AddChar& psi);

/// gamma assembled from the Whittaker route: l(f_s)/l(f_{-s}) times the
/// normalizing factor of the local coefficient definition
RationalQS gamma_via_whittaker(const LocalFieldCtx& ctx,
                               const HermSpace& space, const AddChar& psi);

/// Exhaustive check of the indicator factorization
/// 1_{t^{-1}O}(a x^2 + b y^2 - a b z^2) =
/// 1_{t^{-1}O}(a x^2) 1_{t^{-1}O}(b y^2) 1_{t^{-1}O}(a b z^2)
/// for a unit, b of valuation one with (a, b)_F = -1, over all Laurent digit
/// vectors of x, y, z with `digits` digits starting at t^{-half_depth}.
/// Returns the number of triples checked; throws on a counterexample or if
/// the quaternion precondition fails.
long check_quat_indicator(const LocalFieldCtx& ctx, SquareClass a,
                          SquareClass b, int half_depth, int digits);

}  // namespace lgf
