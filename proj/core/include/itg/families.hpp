#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "itg/curve.hpp"

namespace itg {

class InadmissibleParameter : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class FamilyId { Z7, Z9, Z10, Z12, SZ5_L3_25, R6_split, X24e_j };

struct FamilySpec {
    FamilyId id;
    std::string name;
    std::string domain;          // human-readable parameter domain
    std::string expected_label;  // itg label, or a shape when shape_only
    bool shape_only = false;
};

const std::vector<FamilySpec>& family_specs();
const FamilySpec& family_by_name(const std::string& name);

// y^2 + (1 - a) xy - b y = x^3 - b x^2
Curve tate_normal(const Rational& a, const Rational& b);
// 2^8 (t^2+t+1)^3 (t^2-t+1)^3 / (t^4 (t^2+1)^2)
Rational x24e_j(const Rational& t);
// Throws InadmissibleParameter at poles and SingularCurve at singular fibres.
Curve family_curve(const FamilySpec& spec, const Rational& t);
std::string expected_label(const FamilySpec& spec);

}  // namespace itg
