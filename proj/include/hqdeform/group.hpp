#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hqdeform/scalar.hpp"

namespace hqdeform {

using GroupIndex = std::size_t;

// Finite group stored as a Cayley table over indices 0..order-1.
class Group {
public:
    Group(std::vector<std::string> labels, std::vector<std::vector<GroupIndex>> table,
          std::vector<std::string> generator_labels);

    std::size_t order() const { return labels_.size(); }
    GroupIndex identity() const { return identity_; }
    GroupIndex mul(GroupIndex a, GroupIndex b) const { return table_[a][b]; }
    GroupIndex inv(GroupIndex a) const { return inverse_[a]; }
    GroupIndex pow(GroupIndex a, std::int64_t e) const;
    GroupIndex conj(GroupIndex g, GroupIndex x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
    const std::string& label(GroupIndex a) const { return labels_.at(a); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<GroupIndex>& generators() const { return generators_; }
    const std::vector<std::string>& generator_labels() const { return generator_labels_; }

    // Words such as "t*s", "t^3", "e", or any element label.
    GroupIndex parse_word(const std::string& word) const;
    std::vector<std::vector<GroupIndex>> conjugacy_classes() const;
    bool is_union_of_classes(const std::vector<GroupIndex>& set) const;
    // Each element as a word in the generators (shortest, breadth first).
    const std::vector<std::vector<GroupIndex>>& generator_words() const { return words_; }

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<GroupIndex>> table_;
    std::vector<GroupIndex> inverse_;
    GroupIndex identity_ = 0;
    std::vector<std::string> generator_labels_;
    std::vector<GroupIndex> generators_;
    std::vector<std::vector<GroupIndex>> words_;
};

Group make_cyclic(std::size_t r);
// <s, t | s^2, t^u, stst>; element t^i s^j has index i + u*j.
Group make_dihedral(std::size_t u);

// Normalized 2-cocycle G x G -> k^x.
class Cocycle {
public:
    Cocycle(std::size_t order, FieldSpec field);  // trivial
    Cocycle(std::vector<std::vector<Scalar>> values);
    const Scalar& operator()(GroupIndex g, GroupIndex h) const { return values_[g][h]; }
    Scalar& at(GroupIndex g, GroupIndex h) { return values_[g][h]; }
    std::size_t order() const { return values_.size(); }

private:
    std::vector<std::vector<Scalar>> values_;
};

// f_xi(g^u, g^v) = 1 if u + v < r, else xi, on Cyclic(r).
Cocycle cocycle_xi(std::size_t r, const Scalar& xi);

struct CocycleWitness {
    GroupIndex g, h, k;
    std::string reason;
};
std::optional<CocycleWitness> validate_cocycle(const Group& g, const Cocycle& f);

// Group homomorphism G -> k^x as a value table.
using Character = std::vector<Scalar>;
Character trivial_character(const Group& g, FieldSpec field);
// Extends generator values along generator words; throws if not a homomorphism.
Character character_from_generators(const Group& g, const std::map<std::string, Scalar>& values,
                                    FieldSpec field);
std::optional<std::pair<GroupIndex, GroupIndex>> character_defect(const Group& g, const Character& c);

}  // namespace hqdeform
