#include "hqdeform/hopf_hq.hpp"

namespace hqdeform {

std::string Pbw::to_string() const {
    std::string out;
    auto factor = [&](const std::string& name, std::int64_t e) {
        if (e == 0) return;
        if (!out.empty()) out += "*";
        out += name;
        if (e != 1) out += "^" + std::to_string(e);
    };
    factor("sigma", i);
    factor("D1", j);
    factor("D2", k);
    return out.empty() ? "1" : out;
}

HqTensor tensor(const HqElement& a, const HqElement& b) {
    HqTensor r(a.field());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) r.add({ka[0], kb[0]}, ca * cb);
    return r;
}

HqTensor3 tensor3(const HqTensor& a, const HqElement& b) {
    HqTensor3 r(a.field());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) r.add({ka[0], ka[1], kb[0]}, ca * cb);
    return r;
}

HqTensor3 tensor3(const HqElement& a, const HqTensor& b) {
    HqTensor3 r(a.field());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) r.add({ka[0], kb[0], kb[1]}, ca * cb);
    return r;
}

HqConstants HqConstants::standard(const Scalar& q) {
    const FieldSpec f = q.field();
    const Scalar one = Scalar::one(f);
    auto el = [&](Pbw b, const Scalar& c) { return HqElement::basis({b}, c); };
    const Pbw unit{0, 0, 0}, s{1, 0, 0}, s_inv{-1, 0, 0}, d1{0, 1, 0}, d2{0, 0, 1};
    HqConstants c{q,
                  tensor(el(d1, one), el(s, one)) + tensor(el(unit, one), el(d1, one)),
                  tensor(el(d2, one), el(unit, one)) + tensor(el(s, one), el(d2, one)),
                  tensor(el(s, one), el(s, one)),
                  tensor(el(s_inv, one), el(s_inv, one)),
                  // -D1 sigma^-1 = -q^-1 sigma^-1 D1
                  el({-1, 1, 0}, -q.inverse()),
                  el({-1, 0, 1}, -one),
                  el(s_inv, one),
                  el(s, one),
                  Scalar::zero(f),
                  Scalar::zero(f),
                  one,
                  one};
    return c;
}

HqAlgebra::HqAlgebra(QParam q) : HqAlgebra(q, HqConstants::standard(q.q)) {}

HqAlgebra::HqAlgebra(QParam q, HqConstants constants) : q_(std::move(q)), c_(std::move(constants)) {}

std::optional<std::uint32_t> HqAlgebra::truncation() const {
    if (!q_.truncates()) return std::nullopt;
    return static_cast<std::uint32_t>(*q_.order);
}

HqElement HqAlgebra::basis(const Pbw& b) const {
    auto l = truncation();
    if (l && (b.j >= *l || b.k >= *l)) return HqElement(field());
    return HqElement::basis({b}, Scalar::one(field()));
}

std::optional<std::pair<Pbw, Scalar>> HqAlgebra::mul_basis(const Pbw& a, const Pbw& b) const {
    Pbw r{a.i + b.i, a.j + b.j, a.k + b.k};
    auto l = truncation();
    if (l && (r.j >= *l || r.k >= *l)) return std::nullopt;
    return std::make_pair(r, c_.commutation.pow(b.i * static_cast<std::int64_t>(a.j + a.k)));
}

namespace {

template <std::size_t N>
PbwTensor<N> power(const HqAlgebra& h, const PbwTensor<N>& x, std::uint64_t e, const PbwTensor<N>& one) {
    PbwTensor<N> acc = one;
    for (std::uint64_t k = 0; k < e; ++k) acc = h.mul(acc, x);
    return acc;
}

}  // namespace

HqTensor HqAlgebra::coproduct_basis(const Pbw& b) const {
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = delta_cache_.find(b);
        if (it != delta_cache_.end()) return it->second;
    }
    const Scalar one = Scalar::one(field());
    const HqTensor unit = HqTensor::basis({Pbw{}, Pbw{}}, one);
    HqTensor r = b.i >= 0 ? power(*this, c_.delta_sigma, static_cast<std::uint64_t>(b.i), unit)
                          : power(*this, c_.delta_sigma_inv, static_cast<std::uint64_t>(-b.i), unit);
    r = mul(r, power(*this, c_.delta_d1, b.j, unit));
    r = mul(r, power(*this, c_.delta_d2, b.k, unit));
    std::lock_guard<std::mutex> lock(cache_mutex_);
    delta_cache_.emplace(b, r);
    return r;
}

HqTensor HqAlgebra::coproduct(const HqElement& a) const {
    HqTensor r(field());
    for (const auto& [k, c] : a.terms()) {
        HqTensor t = coproduct_basis(k[0]);
        t *= c;
        r += t;
    }
    return r;
}

HqElement HqAlgebra::antipode_basis(const Pbw& b) const {
    const HqElement unit = HqElement::basis({Pbw{}}, Scalar::one(field()));
    HqElement r = power(*this, c_.antipode_d2, b.k, unit);
    r = mul(r, power(*this, c_.antipode_d1, b.j, unit));
    r = mul(r, b.i >= 0 ? power(*this, c_.antipode_sigma, static_cast<std::uint64_t>(b.i), unit)
                        : power(*this, c_.antipode_sigma_inv, static_cast<std::uint64_t>(-b.i), unit));
    return r;
}

HqElement HqAlgebra::antipode(const HqElement& a) const {
    HqElement r(field());
    for (const auto& [k, c] : a.terms()) {
        HqElement t = antipode_basis(k[0]);
        t *= c;
        r += t;
    }
    return r;
}

Scalar HqAlgebra::counit(const HqElement& a) const {
    Scalar r = Scalar::zero(field());
    for (const auto& [k, c] : a.terms()) {
        const Pbw& b = k[0];
        Scalar v = b.i >= 0 ? c_.counit_sigma.pow(b.i) : c_.counit_sigma_inv.pow(-b.i);
        v *= c_.counit_d1.pow(b.j) * c_.counit_d2.pow(b.k);
        r += c * v;
    }
    return r;
}

HqTensor3 HqAlgebra::coproduct_left(const HqTensor& t) const {
    HqTensor3 r(field());
    for (const auto& [k, c] : t.terms()) {
        HqTensor3 part = tensor3(coproduct_basis(k[0]), HqElement::basis({k[1]}, c));
        r += part;
    }
    return r;
}

HqTensor3 HqAlgebra::coproduct_right(const HqTensor& t) const {
    HqTensor3 r(field());
    for (const auto& [k, c] : t.terms()) {
        HqTensor3 part = tensor3(HqElement::basis({k[0]}, c), coproduct_basis(k[1]));
        r += part;
    }
    return r;
}

HqElement HqAlgebra::counit_left(const HqTensor& t) const {
    HqElement r(field());
    for (const auto& [k, c] : t.terms()) r.add({k[1]}, c * counit(HqElement::basis({k[0]}, Scalar::one(field()))));
    return r;
}

HqElement HqAlgebra::counit_right(const HqTensor& t) const {
    HqElement r(field());
    for (const auto& [k, c] : t.terms()) r.add({k[0]}, c * counit(HqElement::basis({k[1]}, Scalar::one(field()))));
    return r;
}

HqTensor HqAlgebra::coproduct_d1_power_closed(std::uint32_t m) const {
    HqTensor r(field());
    for (std::uint32_t i = 0; i <= m; ++i) {
        HqTensor t = tensor(basis({0, i, 0}), basis({static_cast<std::int64_t>(i), m - i, 0}));
        t *= qbinomial(m, i, q_.q);
        r += t;
    }
    return r;
}

std::vector<Pbw> HqAlgebra::basis_up_to(std::uint32_t bound) const {
    std::uint32_t dmax = bound;
    if (auto l = truncation()) dmax = std::min(bound, *l - 1);
    std::vector<Pbw> out;
    for (std::int64_t i = -static_cast<std::int64_t>(bound); i <= static_cast<std::int64_t>(bound); ++i)
        for (std::uint32_t j = 0; j <= dmax; ++j)
            for (std::uint32_t k = 0; k <= dmax; ++k) out.push_back({i, j, k});
    return out;
}

namespace {

HqElement contract_antipode_left(const HqAlgebra& h, const HqTensor& t) {
    HqElement r(h.field());
    for (const auto& [k, c] : t.terms()) {
        HqElement part = h.mul(h.antipode(h.basis(k[0])), h.basis(k[1]));
        part *= c;
        r += part;
    }
    return r;
}

HqElement contract_antipode_right(const HqAlgebra& h, const HqTensor& t) {
    HqElement r(h.field());
    for (const auto& [k, c] : t.terms()) {
        HqElement part = h.mul(h.basis(k[0]), h.antipode(h.basis(k[1])));
        part *= c;
        r += part;
    }
    return r;
}

struct Tally {
    explicit Tally(std::string name) : id(std::move(name)) {}
    std::string id;
    bool pass = true;
    std::string witness;
    void fail(const std::string& w) {
        if (pass) witness = w;
        pass = false;
    }
};

}  // namespace

Report verify_hopf_axioms(const HqAlgebra& h, std::uint32_t bound) {
    const HqElement unit = h.basis({});
    Tally coassoc{"hopf.coassociativity"}, counit{"hopf.counit"}, antipode{"hopf.antipode"},
        delta_mult{"hopf.coproduct_multiplicative"}, eps_mult{"hopf.counit_multiplicative"},
        s_anti{"hopf.antipode_antimultiplicative"};
    const std::vector<HqElement> gens{h.sigma(1), h.sigma(-1), h.d1(), h.d2()};
    for (const Pbw& b : h.basis_up_to(bound)) {
        const HqElement x = h.basis(b);
        const HqTensor dx = h.coproduct(x);
        const std::string name = b.to_string();
        if (!(h.coproduct_left(dx) == h.coproduct_right(dx))) coassoc.fail(name);
        if (!(h.counit_left(dx) == x) || !(h.counit_right(dx) == x)) counit.fail(name);
        HqElement expect = unit;
        expect *= h.counit(x);
        if (!(contract_antipode_left(h, dx) == expect) || !(contract_antipode_right(h, dx) == expect))
            antipode.fail(name);
        for (std::size_t g = 0; g < gens.size(); ++g) {
            const HqElement gx = h.mul(gens[g], x);
            const std::string w = "generator " + std::to_string(g) + " times " + name;
            if (!(h.coproduct(gx) == h.mul(h.coproduct(gens[g]), dx))) delta_mult.fail(w);
            if (!(h.counit(gx) == h.counit(gens[g]) * h.counit(x))) eps_mult.fail(w);
            if (!(h.antipode(gx) == h.mul(h.antipode(x), h.antipode(gens[g])))) s_anti.fail(w);
        }
    }
    Report r;
    for (const auto* t : {&coassoc, &counit, &antipode, &delta_mult, &eps_mult, &s_anti})
        r.add(t->id, t->pass, t->witness);
    return r;
}

TwistSeries expq(const HqAlgebra& h, std::uint32_t order) {
    const Scalar& q = h.qparam().q;
    std::uint32_t terms = order + 1;
    if (auto l = h.truncation()) terms = *l;
    TwistSeries f;
    for (std::uint32_t i = 0; i < terms; ++i) {
        Scalar fact = qfactorial(i, q);
        if (fact.is_zero()) throw Error("q-factorial (" + std::to_string(i) + ")!_q is not invertible");
        HqTensor t = tensor(h.basis({0, i, 0}), h.basis({0, 0, i}));
        t *= fact.inverse();
        f.push_back(t);
    }
    return f;
}

Report verify_twisting(const HqAlgebra& h, const TwistSeries& f, std::uint32_t order, std::uint32_t bound) {
    const FieldSpec fld = h.field();
    const HqElement unit = h.basis({});
    Report r;
    Tally counit{"twist.counit"}, cocycle{"twist.cocycle"}, invariance{"twist.invariance"};
    for (std::size_t i = 0; i < f.size(); ++i) {
        HqElement expect = i == 0 ? unit : HqElement(fld);
        if (!(h.counit_left(f[i]) == expect) || !(h.counit_right(f[i]) == expect))
            counit.fail("t^" + std::to_string(i));
    }
    std::uint32_t max_n = order;
    if (h.truncation() && !f.empty()) max_n = static_cast<std::uint32_t>(2 * (f.size() - 1));
    for (std::uint32_t n = 0; n <= max_n; ++n) {
        HqTensor3 lhs(fld), rhs(fld);
        for (std::uint32_t i = 0; i <= n; ++i) {
            const std::uint32_t j = n - i;
            if (i >= f.size() || j >= f.size()) continue;
            lhs += h.mul(h.coproduct_left(f[i]), tensor3(f[j], unit));
            rhs += h.mul(h.coproduct_right(f[i]), tensor3(unit, f[j]));
        }
        if (!(lhs == rhs)) cocycle.fail("order t^" + std::to_string(n));
    }
    // (c (x) H)(H (x) c)(F_n (x) x) = x (x) F_n with c the flip.
    for (std::size_t n = 0; n < f.size(); ++n)
        for (const Pbw& b : h.basis_up_to(bound)) {
            HqTensor3 moved(fld);
            const HqTensor3 placed = tensor3(f[n], h.basis(b));
            for (const auto& [k, c] : placed.terms()) {
                HqTensor3::Key after_right{k[0], k[2], k[1]};
                HqTensor3::Key after_left{after_right[1], after_right[0], after_right[2]};
                moved.add(after_left, c);
            }
            if (!(moved == tensor3(h.basis(b), f[n]))) invariance.fail("t^" + std::to_string(n) + ", " + b.to_string());
        }
    for (const auto* t : {&counit, &cocycle, &invariance}) r.add(t->id, t->pass, t->witness);
    return r;
}

}  // namespace hqdeform
