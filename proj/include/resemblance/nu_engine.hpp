#pragma once

#include "resemblance/relation_engine.hpp"

namespace resemblance {

struct JInterval {
    Ordinal lower;
    Ext upper;
    Ext closed_upper;
};

struct NuInfo {
    Ordinal alpha;
    Ordinal xi;
    Ext nu;
    Ext max2;
    Ext j_upper;
};

// position xi of b among nu_{alpha, .} when b is a determined nu point (finite n or w)
std::optional<Ordinal> nu_position(const Calculus& c, const Ordinal& alpha, const Ordinal& b);

Ext nu(const Calculus& c, const Ordinal& alpha, const Ordinal& xi);
NuInfo nu_info(const Calculus& c, const Ordinal& alpha, const Ordinal& xi);
Ext max2(const Calculus& c, const Ordinal& b, Trace* trace = nullptr);
Verdict le2(const Calculus& c, const Ordinal& b1, const Ordinal& b2);
Ordinal rtsi_translate(const Calculus& c, const Ordinal& alpha, const Ordinal& delta, const Ordinal& x);
JInterval j_interval(const Calculus& c, const Ordinal& alpha, const Ordinal& xi);
std::string theta2_shape(const Calculus& c, const Ordinal& alpha);

} // namespace resemblance
