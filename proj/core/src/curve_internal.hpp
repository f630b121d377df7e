#pragma once

#include "itg/curve.hpp"

namespace itg {

// minimal short model together with the scale u taking the model
// y^2 = x^3 - 27 c4 x - 54 c6 to it
struct ShortScaling {
    ShortModel model;
    Rational u;
};

ShortScaling short_scaling(const Curve& E);
Point to_short(const Curve& E, const ShortScaling& s, const Point& P);
Point from_short(const Curve& E, const ShortScaling& s, const Point& P);

}  // namespace itg
