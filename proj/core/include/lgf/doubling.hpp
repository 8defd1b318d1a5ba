#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lgf/params.hpp"
#include "lgf/spaces.hpp"
#include "lgf/tate.hpp"

namespace lgf {

/// Element of F^x up to squares-with-valuation: valuation and Legendre parity
/// of the unit part. Enough to evaluate tame characters and |.|-powers.
struct FElem {
    long val = 0;
    int upar = 0;

    SquareClass cls() const {
        return {static_cast<int>(((val % 2) + 2) % 2), upar};
    }
};

/// omega: a character of F^x, of E^x, or (GL and QGL) a pair of characters
/// of F^x. E^x characters carry fdeg = f(E) and their z is the value at a
/// uniformizer of E.
struct OmegaSpec {
    MultChar w1;
    std::optional<MultChar> w2;

    OmegaSpec inverse() const {
        OmegaSpec o{w1.inverse(), std::nullopt};
        if (w2) o.w2 = w2->inverse();
        return o;
    }

    friend bool operator==(const OmegaSpec& a, const OmegaSpec& b) {
        return a.w1 == b.w1 && a.w2 == b.w2;
    }
    friend bool operator!=(const OmegaSpec& a, const OmegaSpec& b) {
        return !(a == b);
    }
};

/// Invariants of the nilpotent orbit datum A entering the local coefficient:
/// the norm N_V(A), the two half-normalized norms used by the GL-type rows,
/// and the line datum of the odd orthogonal row.
struct DoublingNilpotent {
    FElem nv;        // N_V(A)
    FElem nv_half;   // N_V(A/2)
    FElem nv_mhalf;  // N_V(-A/2)
    bool corank1 = false;
    FElem nv_line;   // N_V of the corank-one modification
};

/// One GL-type block of a parabolically induced representation: either a
/// concrete tame character twist of GL_m over the coefficient algebra, or an
/// abstract block given by its Godement-Jacquet gamma and the gamma of the
/// contragredient.
struct GLBlock {
    int m = 1;
    bool abstract_gj = false;
    MultChar chi;
    RationalQS gj;
    RationalQS gj_dual;
    std::string label;

    friend bool operator==(const GLBlock& a, const GLBlock& b) {
        if (a.m != b.m || a.abstract_gj != b.abstract_gj) return false;
        if (a.abstract_gj)
            return a.gj == b.gj && a.gj_dual == b.gj_dual && a.label == b.label;
        return a.chi == b.chi;
    }
    friend bool operator!=(const GLBlock& a, const GLBlock& b) {
        return !(a == b);
    }
};

enum class LeafKind { MinimalTrivial, Unramified, TrivialGroup };

/// Satake data of an unramified representation of the base group: the full
/// eigenvalue multiset of the standard L-homomorphism (over E for the U case,
/// where it has length n rather than N = 2n).
struct UnramifiedLeaf {
    std::vector<Coeff> satake;
    int central_sign = 1;

    friend bool operator==(const UnramifiedLeaf& a, const UnramifiedLeaf& b) {
        return a.satake == b.satake && a.central_sign == b.central_sign;
    }
    friend bool operator!=(const UnramifiedLeaf& a, const UnramifiedLeaf& b) {
        return !(a == b);
    }
};

struct ReprDescriptor {
    HermSpace space;
    std::vector<GLBlock> tower;
    LeafKind leaf = LeafKind::MinimalTrivial;
    UnramifiedLeaf unram;
    OmegaSpec omega;
    int central_sign = 1;

    /// ranks consumed by the tower (each block eats m, or 2m in the formed
    /// cases, of the rank of V)
    int consumed_rank() const;
};

struct GammaResult {
    RationalQS gamma;
    RationalQS L;
    RationalQS eps;
    std::vector<std::string> trace;

    std::string json() const;
};

/// [omega(a) |a|^{s-1/2}]^{power} as a monomial, with a embedded into the
/// target field (valuation and unit class transported along the embedding)
RationalQS omega_half_power(const LocalFieldCtx& ctx, const MultChar& w,
                            const TateField& fld, FElem a, long power);

/// The covariance monomial T of gamma under psi -> psi_a. Rows: pair cases
/// evaluate omega diagonally to the power N/2; the F-linear cases use the
/// power N; the SO and Q-1 rows carry the extra chi_{disc V}(a); the unitary
/// rows use the E-normalization to the power N/2 together with chi_E(a)^{N/2}.
RationalQS t_monomial(const LocalFieldCtx& ctx, const HermSpace& space,
                      const OmegaSpec& omega, FElem a);

/// rescale a computed gamma/eps pair by the covariance monomial
GammaResult psi_rescale(const LocalFieldCtx& ctx, const GammaResult& base,
                        const HermSpace& space, const OmegaSpec& omega,
                        FElem a);

/// The normalizing factor R of the local coefficient definition, in the
/// variable of the definition (the returned function's s is the s of
/// Gamma(s); the gamma factor itself lives at s + 1/2).
RationalQS correction_R(const LocalFieldCtx& ctx, const HermSpace& space,
                        const OmegaSpec& omega, const DoublingNilpotent& A,
                        const AddChar& psi);

/// gamma/L/eps of the trivial representation of a minimal space, by the
/// closed forms, corrected for the level of psi by the covariance monomial
GammaResult gamma_minimal(const LocalFieldCtx& ctx, const HermSpace& space,
                          const AddChar& psi);

/// one tower block's contribution: the doubled pair of Godement-Jacquet
/// factors of chi * omega_1 and chi^{-1} * omega_2 over the coefficient field
RationalQS gamma_gl_block(const LocalFieldCtx& ctx, const HermSpace& space,
                          const GLBlock& block, const OmegaSpec& omega,
                          const AddChar& psi);

/// full compositional route: product of block contributions times the gamma
/// of the anisotropic (or trivial) base
GammaResult gamma_of_tower(const LocalFieldCtx& ctx,
                           const ReprDescriptor& desc, const AddChar& psi);

/// unramified route: fold everything into one std eigenvalue multiset and
/// take the ratio of L-polynomials (requires level-0 psi, unramified data)
GammaResult gamma_unramified(const LocalFieldCtx& ctx,
                             const ReprDescriptor& desc, const AddChar& psi);

ReprDescriptor dual_descriptor(const ReprDescriptor& desc);

struct FEVerdict {
    bool pass = false;
    RationalQS residual;
};

/// gamma(s) * gamma-of-dual(1-s) == 1
FEVerdict check_functional_equation(const LocalFieldCtx& ctx,
                                    const ReprDescriptor& desc,
                                    const AddChar& psi);

/// Rewrite a descriptor over a split coefficient algebra (split E or split
/// quaternions) as one over the associated linear or formed group, and
/// evaluate it. Throws if the descriptor has no split data.
GammaResult split_rewrite(const LocalFieldCtx& ctx, const ReprDescriptor& desc,
                          const AddChar& psi);

/// descriptor-level entry point: dispatches to split_rewrite when the
/// coefficient data is split, otherwise to gamma_of_tower
GammaResult gamma_of_descriptor(const LocalFieldCtx& ctx,
                                const ReprDescriptor& desc,
                                const AddChar& psi);

}  // namespace lgf
