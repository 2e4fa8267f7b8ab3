#include "hqdeform/hq_structure.hpp"

#include <algorithm>
#include <set>

namespace hqdeform {

namespace {

Poly column_image(const LinearEndo& m, std::size_t j) { return m.image(j); }

bool poly_avoids(const Poly& p, std::size_t var) {
    for (const auto& [m, c] : p.terms())
        if (m[var] != 0) return false;
    return true;
}

}  // namespace

std::shared_ptr<const HqStructure> HqStructure::build(StructureInput in) {
    if (!in.ctx) throw Error("structure needs an algebra context");
    const auto& ctx = *in.ctx;
    const std::size_t n = ctx.nvars();
    const FieldSpec f = ctx.field();
    const auto& grp = ctx.group();
    if (in.x1 >= n || in.x2 >= n) throw Error("distinguished variable index out of range");
    if (in.x1 == in.x2) throw Error("x1 and x2 must be different variables");
    if (in.alpha_hat.dim() != n) throw Error("alpha matrix has the wrong size");
    if (in.chi_alpha.size() != grp.order() || in.chi_sigma.size() != grp.order())
        throw Error("character tables must cover the whole group");
    for (int i = 1; i <= 2; ++i) {
        const auto& d = i == 1 ? in.delta1 : in.delta2;
        if (d.empty()) throw Error("delta" + std::to_string(i) + " data is empty");
        for (const auto& e : d) {
            if (e.g >= grp.order()) throw Error("delta data group element out of range");
            if (e.p.is_zero()) throw Error("delta" + std::to_string(i) + " polynomial at " + grp.label(e.g) + " is zero");
            if (e.p.nvars() != n) throw Error("delta polynomial has the wrong number of variables");
        }
    }

    std::shared_ptr<HqStructure> st(new HqStructure(std::move(in)));
    auto inv = st->in_.alpha_hat.inverse();
    if (!inv) throw Error("alpha is not invertible");
    st->alpha_inv_ = *inv;

    const GroupIndex g11 = st->in_.delta1.front().g;
    const GroupIndex g21 = st->in_.delta2.front().g;
    const LinearEndo on_v1 = st->in_.alpha_hat.compose(ctx.rho()(grp.inv(g11)));
    const LinearEndo on_v2 = st->in_.alpha_hat.compose(ctx.rho()(g21));
    LinearEndo vs(n, f);
    for (std::size_t j = 0; j < n; ++j) {
        const bool in_v1 = j != st->in_.x1;
        const bool in_v2 = j != st->in_.x2;
        if (in_v1 && in_v2) {
            for (std::size_t r = 0; r < n; ++r)
                if (!(on_v1.at(r, j) == on_v2.at(r, j)))
                    throw Error("varsigma is inconsistent on x" + std::to_string(j + 1) + ": " +
                                column_image(on_v1, j).to_string() + " versus " + column_image(on_v2, j).to_string());
        }
        const LinearEndo& src = in_v1 ? on_v1 : on_v2;
        for (std::size_t r = 0; r < n; ++r) vs.at(r, j) = src.at(r, j);
    }
    st->varsigma_ = vs;

    st->derived_q_ = st->lambda(1, g11) * st->lambda(1, g21);
    if (st->derived_q_.is_zero()) throw Error("lambda_1 vanishes on g11 or g21");
    st->q_ = QParam::from(st->in_.q_override ? *st->in_.q_override : st->derived_q_);
    return st;
}

Scalar HqStructure::lambda(int i, GroupIndex g) const { return ctx()->rho()(g).at(x(i), x(i)); }
Scalar HqStructure::nu(int i) const { return in_.alpha_hat.at(x(i), x(i)); }
Scalar HqStructure::omega(int i) const { return varsigma_.at(x(i), x(i)); }

CrossedElement HqStructure::apply_auto(const LinearEndo& m, const Character& chi, bool invert_chi,
                                       const CrossedElement& a) const {
    CrossedElement r(ctx());
    for (const auto& [g, p] : a.components()) {
        Poly img = substitute(m, p);
        img *= invert_chi ? chi[g].inverse() : chi[g];
        r.add(img, g);
    }
    return r;
}

CrossedElement HqStructure::alpha(const CrossedElement& a) const { return apply_auto(in_.alpha_hat, in_.chi_alpha, false, a); }
CrossedElement HqStructure::alpha_inv(const CrossedElement& a) const { return apply_auto(alpha_inv_, in_.chi_alpha, true, a); }
CrossedElement HqStructure::varsigma(const CrossedElement& a) const { return apply_auto(varsigma_, in_.chi_sigma, false, a); }

CrossedElement HqStructure::alpha_pow(const CrossedElement& a, std::int64_t e) const {
    CrossedElement r = a;
    for (std::int64_t k = 0; k < e; ++k) r = alpha(r);
    for (std::int64_t k = 0; k > e; --k) r = alpha_inv(r);
    return r;
}

CrossedElement HqStructure::delta_hat(int i, std::size_t var) const {
    CrossedElement r(ctx());
    if (var != x(i)) return r;
    for (const auto& d : data(i)) r.add(d.p, d.g);
    return r;
}

CrossedElement HqStructure::deltabar(int i, GroupIndex g) const {
    const auto& m = i == 1 ? in_.deltabar1 : in_.deltabar2;
    auto it = m.find(g);
    return it == m.end() ? CrossedElement(ctx()) : it->second;
}

CrossedElement HqStructure::delta_monomial(int i, const Monomial& m, GroupIndex g) const {
    const auto key = std::make_tuple(i, m, g);
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = delta_cache_.find(key);
        if (it != delta_cache_.end()) return it->second;
    }
    const auto& c = ctx();
    const std::size_t xi = x(i);
    const FieldSpec f = c->field();
    const std::size_t n = c->nvars();
    CrossedElement result(c);
    // Only the copies of x_i contribute through delta_hat; the rest of the word lies in V_i.
    const std::uint32_t e = m[xi];
    if (e > 0) {
        Monomial before(n, 0), after(n, 0);
        for (std::size_t j = 0; j < n; ++j) (j < xi ? before : after)[j] = m[j];
        after[xi] = 0;
        const CrossedElement dx = delta_hat(i, xi);
        for (std::uint32_t k = 0; k < e; ++k) {
            Monomial pre = before, suf = after;
            pre[xi] = k;
            suf[xi] = e - 1 - k;
            const CrossedElement pre_el = CrossedElement::poly(c, Poly::monomial(pre, Scalar::one(f)));
            const CrossedElement suf_el = CrossedElement::term(c, Poly::monomial(suf, Scalar::one(f)), g);
            if (i == 1) result += alpha(pre_el) * dx * varsigma(suf_el);
            else result += varsigma(alpha_inv(pre_el)) * dx * suf_el;
        }
    }
    const CrossedElement bar = deltabar(i, g);
    if (!bar.is_zero()) {
        const CrossedElement all = CrossedElement::poly(c, Poly::monomial(m, Scalar::one(f)));
        result += (i == 1 ? alpha(all) : varsigma(alpha_inv(all))) * bar;
    }
    std::lock_guard<std::mutex> lock(cache_mutex_);
    delta_cache_.emplace(key, result);
    return result;
}

CrossedElement HqStructure::delta(int i, const CrossedElement& a) const {
    CrossedElement r(ctx());
    for (const auto& [g, p] : a.components())
        for (const auto& [m, c] : p.terms()) r += delta_monomial(i, m, g) * c;
    return r;
}

CrossedElement HqStructure::delta_power(int i, std::uint32_t s, const CrossedElement& a) const {
    CrossedElement r = a;
    for (std::uint32_t k = 0; k < s && !r.is_zero(); ++k) r = delta(i, r);
    return r;
}

std::optional<std::string> HqStructure::closed_form_obstruction() const {
    const auto& grp = ctx()->group();
    if (!in_.deltabar1.empty() || !in_.deltabar2.empty()) {
        for (const auto& m : {&in_.deltabar1, &in_.deltabar2})
            for (const auto& [g, e] : *m)
                if (!e.is_zero()) return "deltabar is nonzero at " + grp.label(g);
    }
    for (int i = 1; i <= 2; ++i)
        for (const auto& d : data(i))
            for (int j = 1; j <= 2; ++j) {
                const LinearEndo& r = ctx()->rho()(d.g);
                for (std::size_t row = 0; row < r.dim(); ++row)
                    if (row != x(j) && !r.at(row, x(j)).is_zero())
                        return "x" + std::to_string(x(j) + 1) + " is not an eigenvector of " + grp.label(d.g);
            }
    for (int i = 1; i <= 2; ++i)
        for (int set = 1; set <= 2; ++set)
            for (const auto& d : data(set))
                if (!(lambda(i, d.g) == lambda(i, data(set).front().g)))
                    return "lambda_" + std::to_string(i) + " is not uniform on the delta" + std::to_string(set) + " elements";
    const GroupIndex g11 = data(1).front().g, g21 = data(2).front().g;
    if (!(lambda(1, g11) * lambda(1, g21) == q())) return "lambda_1 product differs from q";
    if (!(lambda(2, g11) * lambda(2, g21) * q() == Scalar::one(q().field()))) return "lambda_2 product differs from q^-1";
    return std::nullopt;
}

CrossedElement HqStructure::delta_power_closed(int i, std::uint32_t s, const Monomial& r, GroupIndex g) const {
    if (auto why = closed_form_obstruction()) throw Error("closed power formula does not apply (" + *why + "); use delta_power");
    const auto& c = ctx();
    const auto& grp = c->group();
    const FieldSpec f = c->field();
    const std::size_t n = c->nvars();
    const std::size_t xi = x(i);
    if (r.size() != n) throw Error("monomial has the wrong number of variables");
    if (s == 0) return CrossedElement::term(c, Poly::monomial(r, Scalar::one(f)), g);
    if (s > r[xi]) return CrossedElement(c);

    const auto& d = data(i);
    const std::size_t ni = d.size();
    Scalar qprod = Scalar::one(f);
    for (std::uint32_t k = 0; k < s; ++k) qprod *= qint(static_cast<std::int64_t>(r[xi] - k), q());
    CrossedElement out(c);
    if (qprod.is_zero()) return out;

    LinearEndo alpha_s1 = LinearEndo::identity(n, f);
    for (std::uint32_t k = 0; k + 1 < s; ++k) alpha_s1 = in_.alpha_hat.compose(alpha_s1);
    const LinearEndo alpha_s = in_.alpha_hat.compose(alpha_s1);

    Monomial rest = r;
    Poly base(f, n);
    if (i == 1) {
        rest[xi] -= s;
        base = substitute(alpha_s, Poly::monomial(rest, Scalar::one(f)));
    } else {
        rest[xi] = 0;
        Monomial x2pow(n, 0);
        x2pow[xi] = r[xi] - s;
        base = Poly::monomial(x2pow, Scalar::one(f)) *
               c->act(grp.pow(d.front().g, s), Poly::monomial(rest, Scalar::one(f)));
    }

    std::vector<std::size_t> h(s, 0);
    while (true) {
        // chain[k] = g_{h_k} ... g_{h_1} g, chain[0] = g
        std::vector<GroupIndex> chain(s + 1);
        chain[0] = g;
        for (std::uint32_t k = 1; k <= s; ++k) chain[k] = grp.mul(d[h[k - 1]].g, chain[k - 1]);
        Scalar coef = qprod;
        for (std::uint32_t k = 1; k <= s; ++k) coef *= c->cocycle()(d[h[k - 1]].g, chain[k - 1]);
        Poly polys = Poly::constant(Scalar::one(f), n);
        if (i == 1) {
            coef *= in_.chi_sigma[g].pow(s);
            for (std::uint32_t k = 1; k < s; ++k) coef *= in_.chi_sigma[d[h[k - 1]].g].pow(s - k);
            for (std::uint32_t k = 2; k <= s; ++k) coef *= in_.chi_alpha[d[h[k - 1]].g].pow(k - 1);
            for (std::uint32_t k = 1; k <= s; ++k) polys = polys * substitute(alpha_s1, d[h[k - 1]].p);
        } else {
            const std::int64_t e = static_cast<std::int64_t>(s) * r[xi] - static_cast<std::int64_t>(s) * (s + 1) / 2;
            coef *= lambda(2, d.front().g).pow(e);
            for (std::uint32_t k = 0; k < s; ++k)
                polys = polys * c->act(grp.pow(d.front().g, k), d[h[s - k - 1]].p);
        }
        out.add(base * polys * coef, chain[s]);

        std::size_t pos = 0;
        while (pos < s && ++h[pos] == ni) h[pos++] = 0;
        if (pos == s) break;
    }
    return out;
}

namespace {

class Validator {
public:
    Validator(const HqStructure& st, ValidationMode mode) : st_(st), mode_(mode), rng_(0x5eed1234u) {
        ctx_ = st.ctx();
        n_ = ctx_->nvars();
        f_ = ctx_->field();
    }

    Report run() {
        if (mode_ == ValidationMode::General) general();
        else second_case(mode_ == ValidationMode::FirstCase ? "cor1" : "cor2");
        action_conditions();
        return std::move(rep_);
    }

private:
    const Group& grp() const { return ctx_->group(); }
    const Scalar one() const { return Scalar::one(f_); }
    std::string lbl(GroupIndex g) const { return grp().label(g); }

    CrossedElement var(std::size_t j) const { return CrossedElement::poly(ctx_, Poly::variable(j, n_, f_)); }
    CrossedElement wg(GroupIndex g) const { return CrossedElement::w(ctx_, g); }
    CrossedElement lin(const Poly& p) const { return CrossedElement::poly(ctx_, p); }

    std::vector<std::pair<std::string, CrossedElement>> generators() const {
        std::vector<std::pair<std::string, CrossedElement>> out;
        for (std::size_t j = 0; j < n_; ++j) out.emplace_back("x" + std::to_string(j + 1), var(j));
        for (GroupIndex g = 0; g < grp().order(); ++g) out.emplace_back("w[" + lbl(g) + "]", wg(g));
        return out;
    }

    // delta_hat_i extended linearly to an element of V given as a linear polynomial.
    CrossedElement delta_hat_lin(int i, const Poly& v) const {
        Monomial m(n_, 0);
        m[st_.x(i)] = 1;
        return st_.delta_hat(i, st_.x(i)) * v.coeff(m);
    }

    // One report entry per id, keeping the first witness.
    static void check(std::vector<std::string>& failures, bool ok, const std::string& witness) {
        if (!ok && failures.empty()) failures.push_back(witness);
    }
    void emit(const std::string& id, const std::vector<std::string>& failures) {
        rep_.add(id, failures.empty(), failures.empty() ? std::string() : failures.front());
    }

    bool in_v(int i, std::size_t j) const { return j != st_.x(i); }

    void setup(const std::string& p) {
        {
            auto d = representation_defect(grp(), ctx_->rho());
            rep_.add(p + ".setup.a.representation", !d,
                     d ? "rho(" + lbl(d->first) + "*" + lbl(d->second) + ") != rho(" + lbl(d->first) + ")rho(" + lbl(d->second) + ")" : "");
        }
        {
            auto w = validate_cocycle(grp(), ctx_->cocycle());
            rep_.add(p + ".setup.a.cocycle", !w, w ? w->reason + " at (" + lbl(w->g) + "," + lbl(w->h) + "," + lbl(w->k) + ")" : "");
        }
        {
            std::vector<std::string> fl;
            for (GroupIndex g = 0; g < grp().order(); ++g)
                for (int i = 1; i <= 2; ++i)
                    for (std::size_t j = 0; j < n_; ++j)
                        if (in_v(i, j))
                            check(fl, ctx_->rho()(g).at(st_.x(i), j).is_zero(),
                                  "^" + lbl(g) + "x" + std::to_string(j + 1) + " leaves V" + std::to_string(i));
            emit(p + ".setup.a.G_stable", fl);
        }
        {
            std::vector<std::string> fl;
            for (int i = 1; i <= 2; ++i)
                for (std::size_t j = 0; j < n_; ++j)
                    if (in_v(i, j))
                        check(fl, st_.alpha_hat().at(st_.x(i), j).is_zero(),
                              "alpha(x" + std::to_string(j + 1) + ") leaves V" + std::to_string(i));
            emit(p + ".setup.a.alpha_stable", fl);
        }
        {
            std::vector<std::string> fl;
            for (GroupIndex g = 0; g < grp().order(); ++g)
                check(fl, st_.alpha_hat().compose(ctx_->rho()(g)) == ctx_->rho()(g).compose(st_.alpha_hat()),
                      "alpha does not commute with rho(" + lbl(g) + ")");
            emit(p + ".setup.a.alpha_kG_linear", fl);
        }
        character_check(p + ".setup.a.chi_alpha", st_.chi_alpha());
        {
            std::vector<std::string> fl;
            for (int i = 1; i <= 2; ++i) {
                std::vector<GroupIndex> set;
                for (const auto& d : st_.data(i)) set.push_back(d.g);
                check(fl, grp().is_union_of_classes(set),
                      "delta" + std::to_string(i) + " elements are not a union of conjugacy classes");
            }
            emit(p + ".setup.b.conjugacy_closed", fl);
        }
        {
            std::vector<std::string> fl;
            for (int i = 1; i <= 2; ++i) {
                const auto& d = st_.data(i);
                for (const auto& e : d)
                    for (std::size_t j = 0; j < n_; ++j)
                        if (in_v(i, j))
                            check(fl, ctx_->rho()(e.g).image(j) == ctx_->rho()(d.front().g).image(j),
                                  "^" + lbl(e.g) + "x" + std::to_string(j + 1) + " != ^" + lbl(d.front().g) + "x" +
                                      std::to_string(j + 1));
            }
            emit(p + ".setup.b.uniform_action", fl);
        }
        {
            std::vector<std::string> fl;
            for (const auto& a : st_.data(1))
                for (const auto& b : st_.data(2))
                    for (std::size_t j = 0; j < n_; ++j)
                        if (in_v(1, j) && in_v(2, j))
                            check(fl, ctx_->rho()(grp().inv(a.g)).image(j) == ctx_->rho()(b.g).image(j),
                                  "^" + lbl(grp().inv(a.g)) + "x" + std::to_string(j + 1) + " != ^" + lbl(b.g) + "x" +
                                      std::to_string(j + 1));
            emit(p + ".setup.b.inverse_match", fl);
        }
        character_check(p + ".setup.c.chi_sigma", st_.chi_sigma());
        {
            std::vector<std::string> fl;
            for (int i = 1; i <= 2; ++i) {
                std::set<GroupIndex> seen;
                for (const auto& d : st_.data(i))
                    check(fl, seen.insert(d.g).second, "repeated element " + lbl(d.g) + " in delta" + std::to_string(i));
                for (GroupIndex g = 0; g < grp().order(); ++g)
                    check(fl, st_.deltabar(i, g).is_zero(), "deltabar" + std::to_string(i) + "(" + lbl(g) + ") != 0");
            }
            emit(p + ".setup.d.data", fl);
        }
        {
            std::vector<std::string> fl;
            for (int i = 1; i <= 2; ++i)
                for (const auto& d : st_.data(i))
                    check(fl, poly_avoids(d.p, st_.x(i)),
                          "P" + std::to_string(i) + "_" + lbl(d.g) + " = " + d.p.to_string() + " is not in S(V" + std::to_string(i) + ")");
            emit(p + ".setup.d.P_support", fl);
        }
    }

    void character_check(const std::string& id, const Character& c) {
        auto d = character_defect(grp(), c);
        bool nonzero = std::none_of(c.begin(), c.end(), [](const Scalar& s) { return s.is_zero(); });
        rep_.add(id, !d && nonzero,
                 d ? "chi(" + lbl(d->first) + "*" + lbl(d->second) + ") != chi(" + lbl(d->first) + ")chi(" + lbl(d->second) + ")"
                   : (nonzero ? "" : "character takes the value 0"));
    }

    const Poly* find_p(int i, GroupIndex g) const {
        for (const auto& d : st_.data(i))
            if (d.g == g) return &d.p;
        return nullptr;
    }

    void second_case(const std::string& p) {
        setup(p);
        if (mode_ == ValidationMode::FirstCase)
            rep_.add(p + ".setup.single", st_.data(1).size() == 1 && st_.data(2).size() == 1,
                     "first case needs exactly one element per delta");

        const Scalar q = st_.q();
        const Scalar qinv = q.inverse();
        const GroupIndex g11 = st_.data(1).front().g, g21 = st_.data(2).front().g;
        {
            std::vector<std::string> fl;
            for (const auto& d : st_.data(1))
                check(fl, st_.lambda(1, d.g) * st_.lambda(1, g21) == q,
                      "lambda_1(" + lbl(d.g) + ")*lambda_1(" + lbl(g21) + ") = " +
                          (st_.lambda(1, d.g) * st_.lambda(1, g21)).to_string() + " != q = " + q.to_string());
            for (const auto& d : st_.data(2))
                check(fl, st_.lambda(2, g11) * st_.lambda(2, d.g) == qinv,
                      "lambda_2(" + lbl(g11) + ")*lambda_2(" + lbl(d.g) + ") = " +
                          (st_.lambda(2, g11) * st_.lambda(2, d.g)).to_string() + " != q^-1 = " + qinv.to_string());
            emit(p + ".item1", fl);
        }
        for (int i = 1; i <= 2; ++i) {
            std::vector<std::string> fl;
            const auto& f = ctx_->cocycle();
            for (GroupIndex g = 0; g < grp().order(); ++g)
                for (const auto& d : st_.data(i)) {
                    const GroupIndex c = grp().conj(g, d.g);
                    const Poly* target = find_p(i, c);
                    const std::string where = "g=" + lbl(g) + ", P" + std::to_string(i) + "_" + lbl(d.g);
                    if (!target) {
                        check(fl, false, where + ": conjugate " + lbl(c) + " has no datum");
                        continue;
                    }
                    Scalar k = st_.lambda(i, g) * f(g, d.g).inverse() * f(c, g);
                    if (i == 1) k *= st_.chi_alpha()[g].inverse() * st_.chi_sigma()[g];
                    else k *= st_.chi_alpha()[g] * st_.chi_sigma()[g].inverse();
                    const Poly lhs = ctx_->act(g, d.p);
                    const Poly rhs = *target * k;
                    check(fl, lhs == rhs, where + ": " + lhs.to_string() + " != " + rhs.to_string());
                }
            emit(p + ".item" + std::to_string(i + 1), fl);
        }
        {
            std::vector<std::string> fl;
            for (int i = 1; i <= 2; ++i)
                for (const auto& d : st_.data(i)) {
                    const Poly lhs = substitute(st_.alpha_hat(), d.p);
                    const Poly rhs = d.p * (st_.nu(i) * st_.chi_alpha()[d.g].inverse());
                    check(fl, lhs == rhs,
                          "alpha(P" + std::to_string(i) + "_" + lbl(d.g) + ") = " + lhs.to_string() + " != " + rhs.to_string());
                }
            emit(p + ".item4", fl);
        }
        {
            std::vector<std::string> fl;
            const CrossedElement d12 = st_.delta(2, st_.delta_hat(1, st_.x(1)));
            const CrossedElement d21 = st_.delta(1, st_.delta_hat(2, st_.x(2)));
            check(fl, d12.is_zero(), "delta2(delta1(x1)) = " + d12.to_string());
            check(fl, d21.is_zero(), "delta1(delta2(x2)) = " + d21.to_string());
            emit(p + ".item5", fl);
        }
        if (!st_.closed_form_obstruction()) {
            std::vector<std::string> fl;
            const auto& qp = st_.qparam();
            const bool root = qp.truncates();
            const std::uint64_t l = root ? *qp.order : 0;
            for (int i = 1; i <= 2; ++i) {
                const std::size_t own = st_.x(i), other = st_.x(3 - i);
                for (const auto& d : st_.data(i))
                    for (const auto& [m, c] : d.p.terms()) {
                        bool ok = m[own] == 0 && (root ? m[other] % l == 0 : m[other] == 0);
                        check(fl, ok,
                              "P" + std::to_string(i) + "_" + lbl(d.g) + " has a monomial outside the allowed support: " +
                                  Poly::monomial(m, c).to_string());
                    }
            }
            emit(p + ".item5.criterion", fl);
        }
        nilpotency(p + ".item6", true);
        {
            std::vector<std::string> fl;
            check(fl, st_.omega(1) == st_.lambda(1, g21) * st_.nu(1), "omega_1 != lambda_1(g21) nu_1");
            check(fl, st_.nu(2) == st_.lambda(2, g11) * st_.omega(2), "nu_2 != lambda_2(g11) omega_2");
            emit(p + ".remark.omega_nu", fl);
        }
        {
            std::vector<std::string> fl;
            for (int i = 1; i <= 2; ++i)
                for (int set = 1; set <= 2; ++set)
                    for (const auto& d : st_.data(set))
                        check(fl, st_.lambda(i, d.g) == st_.lambda(i, st_.data(set).front().g),
                              "lambda_" + std::to_string(i) + "(" + lbl(d.g) + ") differs across the delta" +
                                  std::to_string(set) + " elements");
            emit(p + ".remark.lambda_uniform", fl);
        }
    }

    void nilpotency(const std::string& id, bool with_random) {
        std::vector<std::string> fl;
        const auto& qp = st_.qparam();
        if (qp.truncates()) {
            const auto l = static_cast<std::uint32_t>(*qp.order);
            for (int i = 1; i <= 2; ++i) {
                for (const auto& [name, a] : generators()) {
                    const CrossedElement r = st_.delta_power(i, l, a);
                    check(fl, r.is_zero(), "delta" + std::to_string(i) + "^" + std::to_string(l) + "(" + name + ") = " + r.to_string());
                }
                if (with_random)
                    for (int k = 0; k < 20; ++k) {
                        const CrossedElement a = random_element(ctx_, rng_, l + 2, 3);
                        const CrossedElement r = st_.delta_power(i, l, a);
                        check(fl, r.is_zero(), "delta" + std::to_string(i) + "^" + std::to_string(l) + "(" + a.to_string() + ") != 0");
                    }
            }
        }
        emit(id, fl);
    }

    void general() {
        {
            std::vector<std::string> fl;
            check(fl, st_.varsigma_hat().inverse().has_value(), "varsigma is singular");
            for (GroupIndex g = 0; g < grp().order(); ++g)
                check(fl, st_.varsigma_hat().compose(ctx_->rho()(g)) == ctx_->rho()(g).compose(st_.varsigma_hat()),
                      "varsigma does not commute with rho(" + lbl(g) + ")");
            auto d = character_defect(grp(), st_.chi_sigma());
            check(fl, !d, "chi_sigma is not a homomorphism");
            emit("thm.item1", fl);
        }
        const LinearEndo& ah = st_.alpha_hat();
        const LinearEndo& ai = st_.alpha_hat_inv();
        const LinearEndo& vs = st_.varsigma_hat();
        {
            std::vector<std::string> fl1, fl2;
            for (std::size_t a = 0; a < n_; ++a)
                for (std::size_t b = a + 1; b < n_; ++b) {
                    const Poly v = Poly::variable(a, n_, f_), w = Poly::variable(b, n_, f_);
                    const std::string pair = " at (x" + std::to_string(a + 1) + ",x" + std::to_string(b + 1) + ")";
                    CrossedElement l1 = delta_hat_lin(1, v) * lin(vs.image(b)) + lin(ah.image(a)) * delta_hat_lin(1, w);
                    CrossedElement r1 = delta_hat_lin(1, w) * lin(vs.image(a)) + lin(ah.image(b)) * delta_hat_lin(1, v);
                    check(fl1, l1 == r1, "delta1 symmetry" + pair);
                    CrossedElement l2 = delta_hat_lin(2, v) * lin(w) + lin(substitute(vs, ai.image(a))) * delta_hat_lin(2, w);
                    CrossedElement r2 = delta_hat_lin(2, w) * lin(v) + lin(substitute(vs, ai.image(b))) * delta_hat_lin(2, v);
                    check(fl2, l2 == r2, "delta2 symmetry" + pair);
                }
            emit("thm.item2.well_defined_delta1", fl1);
            emit("thm.item2.well_defined_delta2", fl2);
        }
        {
            std::vector<std::string> a1, b1, a2, b2;
            const auto& f = ctx_->cocycle();
            for (GroupIndex g = 0; g < grp().order(); ++g) {
                const Scalar ca = st_.chi_alpha()[g], cs = st_.chi_sigma()[g];
                for (std::size_t j = 0; j < n_; ++j) {
                    const Poly gv = ctx_->rho()(g).image(j);
                    const Poly v = Poly::variable(j, n_, f_);
                    const std::string at = " at g=" + lbl(g) + ", x" + std::to_string(j + 1);
                    CrossedElement l = delta_hat_lin(1, gv) * wg(g) * cs + lin(substitute(ah, gv)) * st_.deltabar(1, g);
                    CrossedElement r = st_.deltabar(1, g) * lin(vs.image(j)) + wg(g) * delta_hat_lin(1, v) * ca;
                    check(a1, l == r, "delta1 past w_g" + at);
                    l = delta_hat_lin(2, gv) * wg(g) + lin(substitute(vs, substitute(ai, gv))) * st_.deltabar(2, g);
                    r = st_.deltabar(2, g) * lin(v) + wg(g) * delta_hat_lin(2, v) * (cs * ca.inverse());
                    check(a2, l == r, "delta2 past w_g" + at);
                }
                for (GroupIndex h = 0; h < grp().order(); ++h) {
                    const std::string at = " at (" + lbl(g) + "," + lbl(h) + ")";
                    const GroupIndex gh = grp().mul(g, h);
                    CrossedElement l = st_.deltabar(1, gh) * f(g, h);
                    CrossedElement r = st_.deltabar(1, g) * wg(h) * st_.chi_sigma()[h] + wg(g) * st_.deltabar(1, h) * ca;
                    check(b1, l == r, "delta1 on w_g w_h" + at);
                    l = st_.deltabar(2, gh) * f(g, h);
                    r = st_.deltabar(2, g) * wg(h) + wg(g) * st_.deltabar(2, h) * (cs * ca.inverse());
                    check(b2, l == r, "delta2 on w_g w_h" + at);
                }
            }
            emit("thm.item2.delta1_past_w", a1);
            emit("thm.item2.delta1_on_ww", b1);
            emit("thm.item2.delta2_past_w", a2);
            emit("thm.item2.delta2_on_ww", b2);
        }
        {
            std::vector<std::string> fl;
            for (int i = 1; i <= 2; ++i)
                for (std::size_t j = 0; j < n_; ++j) {
                    const CrossedElement l = delta_hat_lin(i, ah.image(j));
                    const CrossedElement r = st_.alpha(delta_hat_lin(i, Poly::variable(j, n_, f_)));
                    check(fl, l == r, "delta" + std::to_string(i) + "(alpha(x" + std::to_string(j + 1) + ")) != alpha(delta" +
                                              std::to_string(i) + "(x" + std::to_string(j + 1) + "))");
                }
            emit("thm.item3", fl);
        }
        {
            std::vector<std::string> fl;
            for (int i = 1; i <= 2; ++i)
                for (GroupIndex g = 0; g < grp().order(); ++g)
                    check(fl, st_.deltabar(i, g) * st_.chi_alpha()[g] == st_.alpha(st_.deltabar(i, g)),
                          "chi_alpha(" + lbl(g) + ") deltabar" + std::to_string(i) + " != alpha(deltabar" + std::to_string(i) + ")");
            emit("thm.item4", fl);
        }
        {
            std::vector<std::string> fl;
            check(fl, vs.compose(ah) == ah.compose(vs), "varsigma and alpha do not commute");
            emit("thm.item5", fl);
        }
        {
            std::vector<std::string> c, s, bc, bs;
            const Scalar q = st_.q();
            for (std::size_t j = 0; j < n_; ++j) {
                const Poly v = Poly::variable(j, n_, f_);
                const std::string at = " at x" + std::to_string(j + 1);
                check(c, st_.delta(2, delta_hat_lin(1, v)) == st_.delta(1, delta_hat_lin(2, v)), "delta2 delta1 != delta1 delta2" + at);
                for (int i = 1; i <= 2; ++i)
                    check(s, delta_hat_lin(i, vs.image(j)) == st_.varsigma(delta_hat_lin(i, v)) * q,
                          "delta" + std::to_string(i) + " varsigma != q varsigma delta" + std::to_string(i) + at);
            }
            for (GroupIndex g = 0; g < grp().order(); ++g) {
                const std::string at = " at " + lbl(g);
                check(bc, st_.delta(2, st_.deltabar(1, g)) == st_.delta(1, st_.deltabar(2, g)), "delta2 deltabar1 != delta1 deltabar2" + at);
                for (int i = 1; i <= 2; ++i)
                    check(bs, st_.deltabar(i, g) * st_.chi_sigma()[g] == st_.varsigma(st_.deltabar(i, g)) * q,
                          "chi_sigma deltabar" + std::to_string(i) + " != q varsigma(deltabar" + std::to_string(i) + ")" + at);
            }
            emit("thm.item6.commute", c);
            emit("thm.item6.sigma", s);
            emit("thm.item6.bar_commute", bc);
            emit("thm.item6.bar_sigma", bs);
            nilpotency("thm.item6.nilpotent", false);
        }
    }

    // Conditions (1)-(10) of the H_q-module algebra characterization, on generators and pairs of generators.
    void action_conditions() {
        const auto gens = generators();
        const Scalar q = st_.q();
        std::vector<std::string> c1, c2, c3, c5, c6, c7, c8, c9, c10;
        check(c1, st_.varsigma_hat().inverse().has_value(), "varsigma is singular");
        for (GroupIndex g = 0; g < grp().order(); ++g)
            check(c1, !st_.chi_sigma()[g].is_zero(), "chi_sigma(" + lbl(g) + ") = 0");
        for (const auto& [name, a] : gens) {
            check(c2, st_.delta(1, st_.delta(2, a)) == st_.delta(2, st_.delta(1, a)), "delta1 delta2 != delta2 delta1 on " + name);
            for (int i = 1; i <= 2; ++i) {
                const std::string di = "delta" + std::to_string(i);
                check(c3, st_.varsigma(st_.delta(i, a)) * q == st_.delta(i, st_.varsigma(a)),
                      "q varsigma " + di + " != " + di + " varsigma on " + name);
                check(c6, st_.alpha(st_.delta(i, a)) == st_.delta(i, st_.alpha(a)), "alpha " + di + " != " + di + " alpha on " + name);
            }
            check(c7, st_.alpha(st_.varsigma(a)) == st_.varsigma(st_.alpha(a)), "alpha varsigma != varsigma alpha on " + name);
        }
        const CrossedElement unit = CrossedElement::one(ctx_);
        for (int i = 1; i <= 2; ++i)
            check(c8, st_.delta(i, unit).is_zero(), "delta" + std::to_string(i) + "(1) != 0");
        for (const auto& [na, a] : gens)
            for (const auto& [nb, b] : gens) {
                const CrossedElement ab = a * b;
                const std::string at = " on (" + na + "," + nb + ")";
                check(c5, st_.varsigma(ab) == st_.varsigma(a) * st_.varsigma(b), "varsigma(ab) != varsigma(a)varsigma(b)" + at);
                check(c9, st_.delta(1, ab) == st_.delta(1, a) * st_.varsigma(b) + st_.alpha(a) * st_.delta(1, b),
                      "delta1 Leibniz rule fails" + at);
                check(c10, st_.delta(2, ab) == st_.delta(2, a) * b + st_.varsigma(st_.alpha_inv(a)) * st_.delta(2, b),
                      "delta2 Leibniz rule fails" + at);
            }
        emit("action.cond1", c1);
        emit("action.cond2", c2);
        emit("action.cond3", c3);
        nilpotency("action.cond4", false);
        emit("action.cond5", c5);
        emit("action.cond6", c6);
        emit("action.cond7", c7);
        emit("action.cond8", c8);
        emit("action.cond9", c9);
        emit("action.cond10", c10);
    }

    const HqStructure& st_;
    ValidationMode mode_;
    std::mt19937_64 rng_;
    ContextPtr ctx_;
    std::size_t n_ = 0;
    FieldSpec f_;
    Report rep_;
};

}  // namespace

Report validate_structure(const HqStructure& st, ValidationMode mode) { return Validator(st, mode).run(); }

Report derived_invariants(const HqStructure& st) {
    Report rep;
    const auto& ctx = st.ctx();
    const auto& grp = ctx->group();
    const FieldSpec f = ctx->field();
    const Scalar q = st.q();
    std::string det_fail, l1_fail, l2_fail, uni_fail;
    for (const auto& a : st.data(1))
        for (const auto& b : st.data(2)) {
            const std::string pair = "(" + grp.label(a.g) + "," + grp.label(b.g) + ")";
            const Scalar det = ctx->rho()(grp.mul(a.g, b.g)).det();
            if (det_fail.empty() && !det.is_one()) det_fail = "det rho" + pair + " = " + det.to_string();
            const Scalar l1 = st.lambda(1, a.g) * st.lambda(1, b.g);
            if (l1_fail.empty() && !(l1 == q)) l1_fail = "lambda_1 product at " + pair + " = " + l1.to_string();
            const Scalar l2 = st.lambda(2, a.g) * st.lambda(2, b.g);
            if (l2_fail.empty() && !(l2 * q == Scalar::one(f))) l2_fail = "lambda_2 product at " + pair + " = " + l2.to_string();
        }
    for (int i = 1; i <= 2; ++i)
        for (int set = 1; set <= 2; ++set)
            for (const auto& d : st.data(set))
                if (uni_fail.empty() && !(st.lambda(i, d.g) == st.lambda(i, st.data(set).front().g)))
                    uni_fail = "lambda_" + std::to_string(i) + "(" + grp.label(d.g) + ") differs across the delta" + std::to_string(set) + " elements";
    rep.add("inv.det", det_fail.empty(), det_fail);
    rep.add("inv.lambda1", l1_fail.empty(), l1_fail);
    rep.add("inv.lambda2", l2_fail.empty(), l2_fail);
    rep.add("inv.lambda_uniform", uni_fail.empty(), uni_fail);
    return rep;
}

}  // namespace hqdeform
