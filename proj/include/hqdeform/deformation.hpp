#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hqdeform/hq_structure.hpp"
#include "hqdeform/report.hpp"

namespace hqdeform {

// Polynomial in t with coefficients in A; trailing zeros are trimmed.
class TSeries {
public:
    explicit TSeries(ContextPtr ctx) : ctx_(std::move(ctx)) {}
    static TSeries constant(const CrossedElement& a);

    const ContextPtr& context() const { return ctx_; }
    const std::vector<CrossedElement>& coefficients() const { return coeffs_; }
    std::size_t length() const { return coeffs_.size(); }
    CrossedElement coefficient(std::size_t k) const;
    void add(std::size_t k, const CrossedElement& a);
    TSeries& operator+=(const TSeries& o);
    friend bool operator==(const TSeries& a, const TSeries& b) { return a.coeffs_ == b.coeffs_; }
    // First t-degree where the two series differ.
    std::optional<std::size_t> first_difference(const TSeries& o) const;
    std::string to_string() const;

private:
    void trim();
    ContextPtr ctx_;
    std::vector<CrossedElement> coeffs_;
};

// a * b = sum_i 1/(i)!_q delta1^i(alpha^-i(a)) delta2^i(b) t^i
TSeries deformed_product(const HqStructure& st, const CrossedElement& a, const CrossedElement& b);
// Bilinear extension with t-degrees added.
TSeries deformed_product(const HqStructure& st, const TSeries& a, const TSeries& b);

// Phi(a, b) = delta1(alpha^-1(a)) delta2(b)
CrossedElement infinitesimal(const HqStructure& st, const CrossedElement& a, const CrossedElement& b);

// a Phi(b,c) - Phi(ab,c) + Phi(a,bc) - Phi(a,b) c
CrossedElement phi_coboundary(const HqStructure& st, const CrossedElement& a, const CrossedElement& b,
                              const CrossedElement& c);

Report check_associativity(const HqStructure& st, const CrossedElement& a, const CrossedElement& b,
                           const CrossedElement& c);
Report check_unit(const HqStructure& st, const CrossedElement& a);

struct SampleOptions {
    std::size_t samples = 100;
    std::uint64_t seed = 42;
    std::uint32_t max_degree = 3;
};

// Random-triple run of associativity, unit, t^0/t^1 consistency, series length and the bar cocycle identity.
Report deformation_suite(const HqStructure& st, const SampleOptions& opt);

}  // namespace hqdeform
