#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hqdeform/crossed_product.hpp"
#include "hqdeform/report.hpp"
#include "hqdeform/scalar.hpp"

namespace hqdeform {

struct DeltaDatum {
    GroupIndex g;
    Poly p;
};

// Raw data of an H_q-action on A in the coordinate-hyperplane setting:
// V1 = span{x_j : j != x1}, V2 = span{x_j : j != x2}, delta_hat_i(x_i) = sum_g P^(i)_g w_g.
struct StructureInput {
    ContextPtr ctx;
    LinearEndo alpha_hat{0, FieldSpec()};
    Character chi_alpha;
    Character chi_sigma;
    std::size_t x1 = 0;  // 0-based variable index
    std::size_t x2 = 1;
    std::vector<DeltaDatum> delta1;
    std::vector<DeltaDatum> delta2;
    std::map<GroupIndex, CrossedElement> deltabar1;  // missing entries are zero
    std::map<GroupIndex, CrossedElement> deltabar2;
    std::optional<Scalar> q_override;
};

class HqStructure {
public:
    // Derives varsigma_hat and q; throws Error when varsigma_hat is inconsistent on V1 cap V2,
    // alpha_hat is singular, or a lambda needed for q vanishes.
    static std::shared_ptr<const HqStructure> build(StructureInput in);

    const StructureInput& input() const { return in_; }
    const ContextPtr& ctx() const { return in_.ctx; }
    std::size_t x(int i) const { return i == 1 ? in_.x1 : in_.x2; }
    const std::vector<DeltaDatum>& data(int i) const { return i == 1 ? in_.delta1 : in_.delta2; }
    const LinearEndo& alpha_hat() const { return in_.alpha_hat; }
    const LinearEndo& alpha_hat_inv() const { return alpha_inv_; }
    const LinearEndo& varsigma_hat() const { return varsigma_; }
    const Character& chi_alpha() const { return in_.chi_alpha; }
    const Character& chi_sigma() const { return in_.chi_sigma; }
    const QParam& qparam() const { return q_; }
    const Scalar& q() const { return q_.q; }
    // Value derived from the lambdas, before any override.
    const Scalar& derived_q() const { return derived_q_; }

    // Coefficient of x_i in ^g x_i.
    Scalar lambda(int i, GroupIndex g) const;
    Scalar nu(int i) const;     // x_i coefficient of alpha_hat(x_i)
    Scalar omega(int i) const;  // x_i coefficient of varsigma_hat(x_i)

    CrossedElement alpha(const CrossedElement& a) const;
    CrossedElement alpha_inv(const CrossedElement& a) const;
    CrossedElement alpha_pow(const CrossedElement& a, std::int64_t e) const;
    CrossedElement varsigma(const CrossedElement& a) const;
    CrossedElement delta_hat(int i, std::size_t var) const;
    CrossedElement deltabar(int i, GroupIndex g) const;

    // delta_i by the skew-Leibniz expansion of monomials in index order.
    CrossedElement delta(int i, const CrossedElement& a) const;
    CrossedElement delta_power(int i, std::uint32_t s, const CrossedElement& a) const;

    // Empty when the eigenvector and lambda-uniformity hypotheses of the closed power formula hold.
    std::optional<std::string> closed_form_obstruction() const;
    // delta_i^s(x^r w_g) by the multi-index closed formula.
    CrossedElement delta_power_closed(int i, std::uint32_t s, const Monomial& r, GroupIndex g) const;

private:
    explicit HqStructure(StructureInput in) : in_(std::move(in)), alpha_inv_(in_.alpha_hat), varsigma_(in_.alpha_hat) {}

    CrossedElement apply_auto(const LinearEndo& m, const Character& chi, bool invert_chi,
                              const CrossedElement& a) const;
    CrossedElement delta_monomial(int i, const Monomial& m, GroupIndex g) const;

    StructureInput in_;
    LinearEndo alpha_inv_;
    LinearEndo varsigma_;
    QParam q_;
    Scalar derived_q_;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::tuple<int, Monomial, GroupIndex>, CrossedElement> delta_cache_;
};

using StructurePtr = std::shared_ptr<const HqStructure>;

enum class ValidationMode { General, FirstCase, SecondCase };

// Every condition carries an id such as "cor2.item3" or "thm.item6"; see README for the list.
Report validate_structure(const HqStructure& st, ValidationMode mode);

// lambda products and det rho(g1j g2h) = 1 over all pairs.
Report derived_invariants(const HqStructure& st);

}  // namespace hqdeform
