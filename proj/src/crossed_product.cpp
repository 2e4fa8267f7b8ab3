#include "hqdeform/crossed_product.hpp"

namespace hqdeform {

AlgebraContext::AlgebraContext(FieldSpec field, std::size_t nvars, Group group, Cocycle cocycle, Representation rho)
    : field_(field), nvars_(nvars), group_(std::move(group)), cocycle_(std::move(cocycle)), rho_(std::move(rho)) {
    if (cocycle_.order() != group_.order()) throw Error("cocycle size differs from group order");
    if (rho_.dim() != nvars_) throw Error("representation dimension differs from number of variables");
}

Poly AlgebraContext::act(GroupIndex g, const Poly& p) const {
    if (g == group_.identity()) return p;
    Poly out(field_, nvars_);
    for (const auto& [m, c] : p.terms()) {
        Poly img(field_, nvars_);
        {
            std::lock_guard<std::mutex> lock(cache_mutex_);
            auto key = std::make_pair(g, m);
            auto it = act_cache_.find(key);
            if (it == act_cache_.end())
                it = act_cache_.emplace(key, substitute(rho_(g), Poly::monomial(m, Scalar::one(field_)))).first;
            img = it->second;
        }
        out += img * c;
    }
    return out;
}

CrossedElement CrossedElement::one(const ContextPtr& ctx) { return scalar(ctx, Scalar::one(ctx->field())); }

CrossedElement CrossedElement::scalar(const ContextPtr& ctx, const Scalar& c) {
    return poly(ctx, Poly::constant(c, ctx->nvars()));
}

CrossedElement CrossedElement::poly(const ContextPtr& ctx, const Poly& p) {
    return term(ctx, p, ctx->group().identity());
}

CrossedElement CrossedElement::w(const ContextPtr& ctx, GroupIndex g) {
    return term(ctx, Poly::constant(Scalar::one(ctx->field()), ctx->nvars()), g);
}

CrossedElement CrossedElement::term(const ContextPtr& ctx, const Poly& p, GroupIndex g) {
    CrossedElement e(ctx);
    e.add(p, g);
    return e;
}

Poly CrossedElement::component(GroupIndex g) const {
    auto it = comps_.find(g);
    return it == comps_.end() ? Poly(ctx_->field(), ctx_->nvars()) : it->second;
}

void CrossedElement::add(const Poly& p, GroupIndex g) {
    if (g >= ctx_->group().order()) throw Error("group index out of range");
    if (p.is_zero()) return;
    auto [it, inserted] = comps_.emplace(g, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

void CrossedElement::check(const CrossedElement& o) const {
    if (ctx_ != o.ctx_) throw Error("elements belong to different algebra contexts");
}

CrossedElement& CrossedElement::operator+=(const CrossedElement& o) {
    check(o);
    for (const auto& [g, p] : o.comps_) add(p, g);
    return *this;
}

CrossedElement& CrossedElement::operator-=(const CrossedElement& o) {
    check(o);
    for (const auto& [g, p] : o.comps_) add(-p, g);
    return *this;
}

CrossedElement CrossedElement::operator-() const {
    CrossedElement r = *this;
    for (auto& [g, p] : r.comps_) p = -p;
    return r;
}

CrossedElement& CrossedElement::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        comps_.clear();
        return *this;
    }
    for (auto& [g, p] : comps_) p *= c;
    return *this;
}

CrossedElement operator*(const CrossedElement& a, const CrossedElement& b) { return cp_mul(a, b); }

bool operator==(const CrossedElement& a, const CrossedElement& b) {
    a.check(b);
    return a.comps_ == b.comps_;
}

std::optional<std::uint32_t> CrossedElement::degree() const {
    std::optional<std::uint32_t> d;
    for (const auto& [g, p] : comps_) {
        auto pd = p.degree();
        if (pd && (!d || *pd > *d)) d = pd;
    }
    return d;
}

std::string CrossedElement::to_string() const {
    if (comps_.empty()) return "0";
    std::string out;
    for (const auto& [g, p] : comps_) {
        if (!out.empty()) out += " + ";
        out += "(" + p.to_string() + ")*w[" + ctx_->group().label(g) + "]";
    }
    return out;
}

// (P w_g)(Q w_h) = P ^g(Q) f(g,h) w_{gh}
CrossedElement cp_mul(const CrossedElement& a, const CrossedElement& b) {
    if (a.context() != b.context()) throw Error("elements belong to different algebra contexts");
    const auto& ctx = a.context();
    const auto& grp = ctx->group();
    CrossedElement r(ctx);
    for (const auto& [h, q] : b.components()) {
        for (const auto& [g, p] : a.components()) {
            Poly prod = p * ctx->act(g, q);
            prod *= ctx->cocycle()(g, h);
            r.add(prod, grp.mul(g, h));
        }
    }
    return r;
}

CrossedElement commutator(const CrossedElement& a, const CrossedElement& b) { return a * b - b * a; }

Monomial random_monomial(std::size_t nvars, std::mt19937_64& rng, std::uint32_t max_degree) {
    Monomial m(nvars, 0);
    if (nvars == 0) return m;
    std::uniform_int_distribution<std::uint32_t> deg(0, max_degree);
    std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
    for (std::uint32_t d = deg(rng); d > 0; --d) ++m[var(rng)];
    return m;
}

CrossedElement random_element(const ContextPtr& ctx, std::mt19937_64& rng, std::uint32_t max_degree,
                              std::size_t terms) {
    std::uniform_int_distribution<std::size_t> elem(0, ctx->group().order() - 1);
    std::uniform_int_distribution<int> coef(1, 6);
    CrossedElement r(ctx);
    for (std::size_t t = 0; t < terms; ++t) {
        int c = coef(rng);
        if (c > 3) c = 3 - c;
        Monomial m = random_monomial(ctx->nvars(), rng, max_degree);
        r.add(Poly::monomial(m, Scalar(c, ctx->field())), elem(rng));
    }
    return r;
}

}  // namespace hqdeform
