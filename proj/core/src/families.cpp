#include "itg/families.hpp"

namespace itg {

const std::vector<FamilySpec>& family_specs() {
    static const std::vector<FamilySpec> specs = {
        {FamilyId::Z7, "Z7", "t != 0, 1", "L2^1(7)", false},
        {FamilyId::Z9, "Z9", "t != 0, 1", "L3^1(9)", false},
        {FamilyId::Z10, "Z10", "t != 0, 1/2, 1, roots of t^2-3t+1", "R4^1(10)", false},
        {FamilyId::Z12, "Z12", "t != 0, 1/2, 1", "S^1", false},
        {FamilyId::SZ5_L3_25, "SZ5_L3_25", "t with nonzero discriminant", "L3^1(25)", false},
        {FamilyId::R6_split, "R6_split", "t with nonzero discriminant", "R6^1", false},
        {FamilyId::X24e_j, "X24e_j", "t != 0", "T4", true},
    };
    return specs;
}

const FamilySpec& family_by_name(const std::string& name) {
    for (const auto& s : family_specs())
        if (s.name == name) return s;
    throw std::invalid_argument("unknown family: " + name);
}

Curve tate_normal(const Rational& a, const Rational& b) { return curve(1 - a, -b, -b, 0, 0); }

namespace {

Rational divide(const Rational& n, const Rational& d, const char* what) {
    if (d == 0) throw InadmissibleParameter(std::string("parameter is a pole of ") + what);
    return n / d;
}

}  // namespace

Rational x24e_j(const Rational& t) {
    Rational t2 = t * t;
    Rational u = t2 + t + 1, v = t2 - t + 1, w = t2 + 1;
    return divide(256 * u * u * u * v * v * v, t2 * t2 * w * w, "J(t)");
}

Curve family_curve(const FamilySpec& spec, const Rational& t) {
    const Rational t2 = t * t, t3 = t2 * t;
    switch (spec.id) {
        case FamilyId::Z7:
            return tate_normal(t2 - t, t3 - t2);
        case FamilyId::Z9:
            return tate_normal(t2 * (t - 1), t2 * (t - 1) * (t2 - t + 1));
        case FamilyId::Z10: {
            // a carries the sign of Kubert's c = -t(t-1)(2t-1)/(t^2-3t+1)
            Rational d = t2 - 3 * t + 1;
            Rational a = divide(-t * (t - 1) * (2 * t - 1), d, "a(t)");
            Rational b = divide(t3 * (t - 1) * (2 * t - 1), d * d, "b(t)");
            return tate_normal(a, b);
        }
        case FamilyId::Z12: {
            Rational a = divide(t * (1 - 2 * t) * (3 * t2 - 3 * t + 1), (t - 1) * (t - 1) * (t - 1), "a(t)");
            Rational b = divide(-a * (2 * t2 - 2 * t + 1), t - 1, "b(t)");
            return tate_normal(a, b);
        }
        case FamilyId::SZ5_L3_25: {
            Rational t5 = t2 * t3, t10 = t5 * t5, t15 = t10 * t5, t20 = t10 * t10, t25 = t20 * t5, t30 = t15 * t15;
            Rational A = -(t20 - 228 * t15 + 494 * t10 + 228 * t5 + 1) / 48;
            Rational B = (t30 + 522 * t25 - 10005 * t20 - 10005 * t10 - 522 * t5 + 1) / 864;
            return short_curve(A, B);
        }
        case FamilyId::R6_split: {
            Rational t6 = t3 * t3, t9 = t6 * t3, t12 = t6 * t6, t15 = t12 * t3, t18 = t9 * t9;
            Rational A = -27 * t12 + 216 * t9 - 6480 * t6 + 12528 * t3 - 432;
            Rational B = 54 * t18 - 648 * t15 - 25920 * t12 + 166320 * t9 - 651888 * t6 + 222912 * t3 + 3456;
            return short_curve(A, B);
        }
        case FamilyId::X24e_j:
            return curve_from_j(x24e_j(t));
    }
    throw std::logic_error("unhandled family");
}

std::string expected_label(const FamilySpec& spec) { return spec.expected_label; }

}  // namespace itg
