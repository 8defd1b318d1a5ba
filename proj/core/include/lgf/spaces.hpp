#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lgf/local_field.hpp"

namespace lgf {

enum class CaseTag { GL, SO, Sp, qGL, U, QGL, Q1, Qm1 };

const char* case_label(CaseTag tag);
std::optional<CaseTag> case_from_label(const std::string& s);

/// quaternionic coefficient algebra (QGL, Q1, Q-1)
inline bool is_quaternionic(CaseTag t) {
    return t == CaseTag::QGL || t == CaseTag::Q1 || t == CaseTag::Qm1;
}
/// quadratic extension coefficient field (qGL, U)
inline bool has_quadratic_ext(CaseTag t) {
    return t == CaseTag::qGL || t == CaseTag::U;
}
/// omega is a character of F^x x F^x rather than of a single group
inline bool omega_is_pair(CaseTag t) {
    return t == CaseTag::GL || t == CaseTag::QGL;
}

/// E = F(sqrt d) or the split algebra F x F
struct ExtData {
    bool split = false;
    SquareClass d = SQU;

    friend bool operator==(const ExtData& a, const ExtData& b) {
        return a.split == b.split && (a.split || a.d == b.d);
    }
};

/// quaternion algebra (a, b / F) or the split algebra M_2(F)
struct QuatData {
    bool split = false;
    SquareClass a = SQU;
    SquareClass b = SQPI;

    friend bool operator==(const QuatData& x, const QuatData& y) {
        return x.split == y.split && (x.split || (x.a == y.a && x.b == y.b));
    }
};

/// An eps-hermitian space carried by its isometry invariants: case tag, rank
/// over the coefficient algebra, coefficient data, and (where meaningful)
/// discriminant, Hasse invariant c(V) and the unitary sign eps(V).
struct HermSpace {
    CaseTag tag = CaseTag::SO;
    int n = 0;
    std::optional<ExtData> ext;    // qGL, U
    std::optional<QuatData> quat;  // QGL, Q1, Q-1
    SquareClass disc = SQ1;
    int hasse = 1;  // SO only
    int eps = 1;    // U only; recomputable as chi_E(disc)
    bool anisotropic = false;

    std::string json() const;

    friend bool operator==(const HermSpace& a, const HermSpace& b) {
        return a.tag == b.tag && a.n == b.n && a.ext == b.ext &&
               a.quat == b.quat && a.disc == b.disc && a.hasse == b.hasse &&
               a.eps == b.eps && a.anisotropic == b.anisotropic;
    }
};

/// dimension N of the standard representation attached to the case
int std_dimension(const HermSpace& space);

/// Build a space from a diagonal form. Quaternionic diagonal entries are
/// encoded by the square classes of their reduced norms. The discriminant
/// follows the normalization N(R) * (-1)^{n(n-1)/2} 2^{-n} for the bilinear
/// cases, * (-1)^{n(n-1)/2} for U, and * (-1)^n for the quaternionic
/// hermitian cases.
HermSpace from_diagonal(const LocalFieldCtx& ctx, CaseTag tag,
                        const std::vector<SquareClass>& entries,
                        std::optional<ExtData> ext = std::nullopt,
                        std::optional<QuatData> quat = std::nullopt);

/// the naive determinant class, i.e. the discriminant with the
/// case-dependent normalization factor removed
SquareClass det_class(const LocalFieldCtx& ctx, const HermSpace& space);

/// normalized disc from a determinant class (inverse of det_class)
SquareClass disc_from_det(const LocalFieldCtx& ctx, CaseTag tag, int n,
                          SquareClass det);

bool compute_anisotropic(const LocalFieldCtx& ctx, const HermSpace& space);

enum class MinimalTag {
    Trivial,
    SOa2,
    SOa3,
    SOa4,
    U1,
    Ura2,
    Q1n1,
    Qm1n1,
    NotMinimal,
};

const char* minimal_label(MinimalTag tag);

MinimalTag classify_minimal(const LocalFieldCtx& ctx, const HermSpace& space);

/// disc(A) = (-1)^n N_V(A); for n = 0 both are 1
SquareClass disc_of_nilpotent(const LocalFieldCtx& ctx, int n, SquareClass nv);

/// Remove k hyperbolic planes (2k from the rank, or k from the rank of the
/// GL-type cases): the space left under a Levi subgroup GL_k x G(base).
/// Discriminant and Hasse data are adjusted by the hyperbolic contribution.
HermSpace witt_descend(const LocalFieldCtx& ctx, const HermSpace& space, int k);

}  // namespace lgf
