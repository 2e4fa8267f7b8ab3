#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hqdeform/hq_structure.hpp"
#include "hqdeform/linalg.hpp"
#include "hqdeform/resolution.hpp"
#include "json.hpp"

namespace hqdeform {

// A-valued function on the basis g_1..g_s (x) vbar_delta of one total degree.
struct Cochain {
    ContextPtr ctx;
    std::size_t degree = 0;
    std::map<std::pair<Word, Wedge>, CrossedElement> values;  // missing entries are zero

    CrossedElement at(const Word& w, const Wedge& v) const;
    void set(const Word& w, const Wedge& v, const CrossedElement& a);
    bool is_zero() const;
    friend bool operator==(const Cochain& a, const Cochain& b);
};

// Bimodule-linear evaluation a (x) g (x) vbar (x) b -> a phi(g, vbar) b.
CrossedElement evaluate(const Cochain& phi, const XElement& x);
// (d phi)(x) = phi(d x) on every basis element of degree + 1.
Cochain total_differential(const Resolution& res, const Cochain& phi);

struct Cochain1 {
    std::map<GroupIndex, CrossedElement> phi0;   // non-identity elements
    std::map<std::size_t, CrossedElement> phi1;  // 0-based variable
    Cochain to_cochain(const ContextPtr& ctx) const;
};

struct Cochain2 {
    std::map<std::pair<GroupIndex, GroupIndex>, CrossedElement> on_gg;
    std::map<std::pair<GroupIndex, std::size_t>, CrossedElement> on_gv;
    std::map<std::pair<std::size_t, std::size_t>, CrossedElement> on_vv;  // i < j
    static Cochain2 from_cochain(const Cochain& c);
    Cochain to_cochain(const ContextPtr& ctx) const;
};

Cochain2 cochain_differential(const ContextPtr& ctx, const Cochain1& c);

using Bilinear = std::function<CrossedElement(const CrossedElement&, const CrossedElement&)>;

// Pull-back of a normalized Hochschild 2-cochain along the comparison map.
Cochain theta_bar(const Resolution& res, const Bilinear& phi);
Cochain2 theta_bar_of_infinitesimal(const HqStructure& st);

struct CocycleOutcome {
    bool ok = true;
    std::string witness;
};

// Degree-3 differential of theta_bar(phi) on every basis input, plus the bar identity on random triples.
CocycleOutcome cocycle_check(const HqStructure& st, const Bilinear& phi, std::size_t samples = 20,
                             std::uint64_t seed = 0xc0c1);
CocycleOutcome cocycle_check(const HqStructure& st);

struct CoboundaryOutcome {
    bool feasible = false;
    std::optional<Cochain1> witness;
    std::vector<Scalar> certificate;  // zero-padded over all equation rows
    bool certificate_verified = false;
    std::size_t unknowns = 0;
    std::size_t equations = 0;
    std::size_t blocks = 0;
    std::string refuted_block;  // first inconsistent equation, in words
};

// Searches phi0, phi1 with polynomial components of degree <= bound such that d(phi0, phi1) = target.
CoboundaryOutcome coboundary_solve(const HqStructure& st, const Cochain& target, std::uint32_t bound);
CoboundaryOutcome coboundary_solve(const HqStructure& st, std::uint32_t bound);

struct ObstructionOutcome {
    bool applies = false;
    std::string reason;
    std::map<GroupIndex, Poly> rhs;  // Sum D_jh alpha^-1(P1) ^g1j P2 per g in the product set
};

ObstructionOutcome direct_obstruction_check(const HqStructure& st);

struct NontrivialityVerdict {
    CocycleOutcome cocycle;
    CoboundaryOutcome coboundary;
    ObstructionOutcome obstruction;
    std::uint32_t bound = 0;
    // "proof", "evidence", "trivial" or "inconclusive"
    std::string conclusion() const;
    nlohmann::json to_json(const ContextPtr& ctx) const;
};

NontrivialityVerdict nontriviality(const HqStructure& st, std::uint32_t bound = 4);

}  // namespace hqdeform
