#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <utility>

#include "hqdeform/group.hpp"
#include "hqdeform/polynomial.hpp"

namespace hqdeform {

// Data shared by all elements of one crossed product S(V) #_f k[G].
class AlgebraContext {
public:
    AlgebraContext(FieldSpec field, std::size_t nvars, Group group, Cocycle cocycle, Representation rho);

    const FieldSpec& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    const Group& group() const { return group_; }
    const Cocycle& cocycle() const { return cocycle_; }
    const Representation& rho() const { return rho_; }

    // ^g P, memoized per monomial.
    Poly act(GroupIndex g, const Poly& p) const;

private:
    FieldSpec field_;
    std::size_t nvars_;
    Group group_;
    Cocycle cocycle_;
    Representation rho_;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::pair<GroupIndex, Monomial>, Poly> act_cache_;
};

using ContextPtr = std::shared_ptr<const AlgebraContext>;

// Finite sum of P_g w_g.
class CrossedElement {
public:
    using Components = std::map<GroupIndex, Poly>;

    explicit CrossedElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}
    static CrossedElement zero(const ContextPtr& ctx) { return CrossedElement(ctx); }
    static CrossedElement one(const ContextPtr& ctx);
    static CrossedElement scalar(const ContextPtr& ctx, const Scalar& c);
    static CrossedElement poly(const ContextPtr& ctx, const Poly& p);  // P w_e
    static CrossedElement w(const ContextPtr& ctx, GroupIndex g);
    static CrossedElement term(const ContextPtr& ctx, const Poly& p, GroupIndex g);

    const ContextPtr& context() const { return ctx_; }
    const Components& components() const { return comps_; }
    Poly component(GroupIndex g) const;
    bool is_zero() const { return comps_.empty(); }

    void add(const Poly& p, GroupIndex g);
    CrossedElement& operator+=(const CrossedElement& o);
    CrossedElement& operator-=(const CrossedElement& o);
    CrossedElement operator-() const;
    CrossedElement& operator*=(const Scalar& c);
    friend CrossedElement operator+(CrossedElement a, const CrossedElement& b) { return a += b; }
    friend CrossedElement operator-(CrossedElement a, const CrossedElement& b) { return a -= b; }
    friend CrossedElement operator*(CrossedElement a, const Scalar& c) { return a *= c; }
    friend CrossedElement operator*(const Scalar& c, CrossedElement a) { return a *= c; }
    friend CrossedElement operator*(const CrossedElement& a, const CrossedElement& b);
    friend bool operator==(const CrossedElement& a, const CrossedElement& b);

    // Largest total degree over all components; nullopt for zero.
    std::optional<std::uint32_t> degree() const;
    // "(x1^2 + 2*x2)*w[t*s] + x1*w[e]"
    std::string to_string() const;

private:
    void check(const CrossedElement& o) const;

    ContextPtr ctx_;
    Components comps_;
};

CrossedElement cp_mul(const CrossedElement& a, const CrossedElement& b);
CrossedElement commutator(const CrossedElement& a, const CrossedElement& b);

// Sum of `terms` random c*x^m*w_g with deg m <= max_degree and c in {-3..3}\{0}.
CrossedElement random_element(const ContextPtr& ctx, std::mt19937_64& rng, std::uint32_t max_degree,
                              std::size_t terms);
// Random monomial of total degree at most max_degree.
Monomial random_monomial(std::size_t nvars, std::mt19937_64& rng, std::uint32_t max_degree);

}  // namespace hqdeform
