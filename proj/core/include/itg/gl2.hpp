#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace itg {

// 2x2 matrix [[a, b], [c, d]] over Z/NZ.  Acts on column vectors, so in the
// basis (P, Q) the first column is the image of P.
struct MatModN {
    int level = 2;
    int a = 1, b = 0, c = 0, d = 1;

    MatModN() = default;
    MatModN(int n, long a, long b, long c, long d);

    int det() const;
    bool invertible() const;
    MatModN operator*(const MatModN& o) const;
    MatModN inverse() const;
    MatModN transpose() const { return MatModN(level, a, c, b, d); }
    MatModN reduce(int n) const { return MatModN(n, a, b, c, d); }
    bool is_identity() const { return a == 1 % level && b == 0 && c == 0 && d == 1 % level; }
    std::uint64_t code() const;
    static MatModN from_code(int n, std::uint64_t code);
    bool operator==(const MatModN& o) const {
        return level == o.level && a == o.a && b == o.b && c == o.c && d == o.d;
    }
    bool operator<(const MatModN& o) const { return code() < o.code(); }
    std::array<int, 2> apply(int x, int y) const;
    std::string to_string() const;
};

MatModN minus_id(int level);
MatModN identity(int level);

struct GroupPredicates {
    bool contains_minus_id;
    bool full_determinant;
    bool has_cc_representative;
    bool operator==(const GroupPredicates&) const = default;
};

// A subgroup of GL(2, Z/NZ).  Generators are kept as given; the element set
// is produced on first use.
class GroupModN {
public:
    GroupModN(int level, std::vector<MatModN> gens);

    int level() const { return level_; }
    const std::vector<MatModN>& generators() const { return gens_; }
    const std::vector<std::uint64_t>& element_codes() const;
    std::vector<MatModN> elements() const;
    std::size_t order() const { return element_codes().size(); }
    bool contains(const MatModN& m) const;
    // same element set
    bool same_as(const GroupModN& o) const;

private:
    struct Closure;
    int level_;
    std::vector<MatModN> gens_;
    std::shared_ptr<Closure> closure_;
};

GroupModN generate(int level, const std::vector<MatModN>& gens);
GroupModN borel(int level);          // {[[1, b], [0, d]]}
GroupModN split_cartan(int p);       // <diag(1, z)>, z a primitive root
GroupModN full_gl2(int level);
std::uint64_t gl2_order(int level);

GroupPredicates predicates(const GroupModN& g);
std::vector<GroupModN> subgroups_of_index(const GroupModN& g, int k);
bool is_conjugate(const GroupModN& g1, const GroupModN& g2);
GroupModN twist_closure(const GroupModN& g);
GroupModN transpose_group(const GroupModN& g);
GroupModN reduce_level(const GroupModN& g, int n);
GroupModN lift_full_preimage(const GroupModN& g, int m);

// Subgroups of g generated by at most two elements, deduplicated.
std::vector<GroupModN> two_generated_subgroups(const GroupModN& g);
bool verify_borel_classification(int p);
// Every subgroup of GL(2, F_p) with full determinant, a nonzero fixed vector
// and two distinct stable lines is conjugate to split_cartan(p).
bool verify_split_cartan(int p);

// The named level-4/8/16 groups.  Accepted names: H24e, H24d, H24, H98e,
// H98h, H98o, H98, H193n, H194l, H215c, H215l, H215k, H215, and H3 as an
// alias of H98o.
GroupModN named_group(const std::string& name);
std::vector<std::string> named_group_names();

}  // namespace itg
