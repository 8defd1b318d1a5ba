#pragma once

#include <vector>

#include "lgf/spaces.hpp"
#include "lgf/tate.hpp"

namespace lgf {

/// One summand r_m (x) chi of an Artin-type parameter: the m-dimensional
/// irreducible of the SL_2 factor tensored with a tamely ramified character.
struct ParamSummand {
    int m = 1;
    MultChar chi;
};

/// The two unitary minimal cases carry their own closed forms (the parameter
/// is naturally a representation of the Weil group of the extension field);
/// everything else is a plain sum of SL_2 x (tame character) summands over F.
enum class ParamMode { PlainF, UnitaryU1, UnitaryUra2 };

struct StdParameter {
    std::vector<ParamSummand> summands;
    int N = 0;
    ParamMode mode = ParamMode::PlainF;
    SquareClass ext_d = SQ1;  // class generating E in the unitary modes
};

/// parameter of the trivial representation composed with std, for a minimal
/// space; throws for non-minimal spaces
StdParameter principal_parameter(const LocalFieldCtx& ctx,
                                 const HermSpace& space);

/// gamma attached to the parameter, as a function of its own variable:
/// a product of Tate gammas at the shifts (m-1)/2 - j, or the dedicated
/// closed form in the unitary modes
RationalQS gamma_of_parameter(const LocalFieldCtx& ctx, const StdParameter& par,
                              const AddChar& psi);

RationalQS L_of_parameter(const LocalFieldCtx& ctx, const StdParameter& par);
RationalQS eps_of_parameter(const LocalFieldCtx& ctx, const StdParameter& par,
                            const AddChar& psi);

}  // namespace lgf
