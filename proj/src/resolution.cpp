#include "hqdeform/resolution.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "hqdeform/text.hpp"

namespace hqdeform {

namespace {

Scalar sign(int s, FieldSpec f) { return Scalar(s % 2 == 0 ? 1 : -1, f); }

Scalar binomial(std::uint32_t n, std::uint32_t k, FieldSpec f) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Scalar(mpq_class(b), f);
}

Monomial unit_vector(std::size_t n, std::size_t i) {
    Monomial m(n, 0);
    m[i] = 1;
    return m;
}

// All k with k <= e componentwise.
std::vector<Monomial> divisors(const Monomial& e) {
    std::vector<Monomial> out{Monomial(e.size(), 0)};
    for (std::size_t i = 0; i < e.size(); ++i) {
        std::vector<Monomial> next;
        for (const auto& m : out)
            for (std::uint32_t k = 0; k <= e[i]; ++k) {
                Monomial t = m;
                t[i] = k;
                next.push_back(std::move(t));
            }
        out = std::move(next);
    }
    return out;
}

Monomial minus(Monomial a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

ABasis unit_basis(const ContextPtr& ctx) { return ABasis{Monomial(ctx->nvars(), 0), ctx->group().identity()}; }

bool is_unit(const ABasis& b, const ContextPtr& ctx) {
    return b.g == ctx->group().identity() && total_degree(b.m) == 0;
}

CrossedElement element(const ContextPtr& ctx, const ABasis& b, const Scalar& c) {
    return CrossedElement::term(ctx, Poly::monomial(b.m, c), b.g);
}

template <typename Fn>
void for_each_basis(const CrossedElement& a, Fn&& fn) {
    for (const auto& [g, p] : a.components())
        for (const auto& [m, c] : p.terms()) fn(ABasis{m, g}, c);
}

std::string basis_text(const ContextPtr& ctx, const ABasis& b) {
    return format_element(element(ctx, b, Scalar::one(ctx->field())));
}

std::string word_text(const ContextPtr& ctx, const Word& w) {
    std::string out = "[";
    for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "|" : "") + ctx->group().label(w[i]);
    return out + "]";
}

std::string wedge_text(const Wedge& v) {
    std::string out;
    for (auto i : v) out += "v" + std::to_string(i + 1);
    return out.empty() ? "1" : out;
}

template <typename Map>
void add_to(Map& terms, const typename Map::key_type& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(k);
    if (it == terms.end()) {
        terms.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

}  // namespace

int wedge_sort(Wedge& w) {
    int s = 1;
    for (std::size_t i = 1; i < w.size(); ++i)
        for (std::size_t j = i; j > 0 && w[j - 1] >= w[j]; --j) {
            if (w[j - 1] == w[j]) return 0;
            std::swap(w[j - 1], w[j]);
            s = -s;
        }
    return s;
}

// ---------------------------------------------------------------- Y

YElement YElement::basis(FieldSpec field, const Monomial& y, const Monomial& rho, const Wedge& wedge) {
    YElement e(field, y.size());
    e.add(YKey{y, rho, wedge}, Scalar::one(field));
    return e;
}

void YElement::add(const YKey& k, const Scalar& c) { add_to(terms_, k, c); }

YElement& YElement::operator+=(const YElement& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

YElement& YElement::operator-=(const YElement& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

std::string YElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        os << (first ? "" : " + ") << c.to_plain_string();
        for (std::size_t i = 0; i < k.y.size(); ++i)
            if (k.y[i]) os << "*y" << i + 1 << "^" << k.y[i];
        for (std::size_t i = 0; i < k.rho.size(); ++i)
            if (k.rho[i]) os << "*r" << i + 1 << "^" << k.rho[i];
        if (!k.wedge.empty()) os << "*" << wedge_text(k.wedge);
        first = false;
    }
    return os.str();
}

YElement y_boundary(const YElement& x) {
    YElement out(x.field(), x.nvars());
    for (const auto& [k, c] : x.terms()) {
        for (std::size_t j = 0; j < k.wedge.size(); ++j) {
            YKey n{k.y, k.rho, k.wedge};
            ++n.rho[k.wedge[j]];
            n.wedge.erase(n.wedge.begin() + static_cast<std::ptrdiff_t>(j));
            out.add(n, c * sign(static_cast<int>(j), x.field()));
        }
    }
    return out;
}

YElement y_homotopy(const YElement& x) {
    YElement out(x.field(), x.nvars());
    for (const auto& [k, c] : x.terms()) {
        // Largest index carrying rho or vbar; zero when it is the trailing vbar.
        std::optional<std::size_t> l;
        for (std::size_t i = x.nvars(); i-- > 0 && !l;)
            if (k.rho[i] > 0 || (!k.wedge.empty() && k.wedge.back() == i)) l = i;
        if (!l || (!k.wedge.empty() && k.wedge.back() == *l)) continue;
        YKey n{k.y, k.rho, k.wedge};
        --n.rho[*l];
        n.wedge.push_back(*l);
        out.add(n, c * sign(static_cast<int>(k.wedge.size()), x.field()));
    }
    return out;
}

Poly y_augment(const YElement& x) {
    Poly p(x.field(), x.nvars());
    for (const auto& [k, c] : x.terms()) {
        if (!k.wedge.empty()) throw Error("augmentation is defined on degree zero only");
        if (total_degree(k.rho) == 0) p.add_term(k.y, c);
    }
    return p;
}

YElement y_section(const Poly& p) {
    YElement out(p.field(), p.nvars());
    for (const auto& [m, c] : p.terms()) out.add(YKey{m, Monomial(p.nvars(), 0), {}}, c);
    return out;
}

// ---------------------------------------------------------------- X

XElement XElement::basis(const ContextPtr& ctx, const Word& word, const Wedge& wedge) {
    XElement e(ctx);
    e.add(XKey{unit_basis(ctx), word, wedge, unit_basis(ctx)}, Scalar::one(ctx->field()));
    return e;
}

void XElement::add(const XKey& k, const Scalar& c) { add_to(terms_, k, c); }

XElement& XElement::operator+=(const XElement& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

XElement& XElement::operator-=(const XElement& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

XElement& XElement::operator*=(const Scalar& s) {
    if (s.is_zero()) terms_.clear();
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

XElement XElement::left_mul(const CrossedElement& a) const {
    XElement out(ctx_);
    for (const auto& [k, c] : terms_) {
        for_each_basis(a * element(ctx_, k.left, c), [&](const ABasis& b, const Scalar& s) {
            out.add(XKey{b, k.word, k.wedge, k.right}, s);
        });
    }
    return out;
}

XElement XElement::right_mul(const CrossedElement& a) const {
    XElement out(ctx_);
    for (const auto& [k, c] : terms_) {
        for_each_basis(element(ctx_, k.right, c) * a, [&](const ABasis& b, const Scalar& s) {
            out.add(XKey{k.left, k.word, k.wedge, b}, s);
        });
    }
    return out;
}

std::string XElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.to_plain_string() + "*(" + basis_text(ctx_, k.left) + ")#" + word_text(ctx_, k.word) + "#" +
               wedge_text(k.wedge) + "#(" + basis_text(ctx_, k.right) + ")";
    }
    return out;
}

void ZElement::add(const ZKey& k, const Scalar& c) { add_to(terms_, k, c); }

ZElement& ZElement::operator+=(const ZElement& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

// ---------------------------------------------------------------- bar

BarElement BarElement::tensor(const ContextPtr& ctx, const std::vector<CrossedElement>& slots) {
    std::map<Key, Scalar> acc{{Key{}, Scalar::one(ctx->field())}};
    for (const auto& s : slots) {
        std::map<Key, Scalar> next;
        for (const auto& [k, c] : acc)
            for_each_basis(s, [&](const ABasis& b, const Scalar& v) {
                Key n = k;
                n.push_back(b);
                add_to(next, n, c * v);
            });
        acc = std::move(next);
    }
    BarElement out(ctx);
    for (const auto& [k, c] : acc) out.add(k, c);
    return out;
}

void BarElement::add(const Key& k, const Scalar& c) {
    for (std::size_t i = 1; i + 1 < k.size(); ++i)
        if (is_unit(k[i], ctx_)) return;
    add_to(terms_, k, c);
}

BarElement& BarElement::operator+=(const BarElement& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

BarElement& BarElement::operator-=(const BarElement& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

BarElement& BarElement::operator*=(const Scalar& s) {
    if (s.is_zero()) terms_.clear();
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

BarElement BarElement::concat(const BarElement& o) const {
    BarElement out(ctx_);
    for (const auto& [a, c] : terms_)
        for (const auto& [b, d] : o.terms_) {
            Key k = a;
            k.insert(k.end(), b.begin(), b.end());
            out.add(k, c * d);
        }
    return out;
}

BarElement BarElement::left_mul(const CrossedElement& a) const {
    BarElement out(ctx_);
    for (const auto& [k, c] : terms_)
        for_each_basis(a * element(ctx_, k.front(), c), [&](const ABasis& b, const Scalar& s) {
            Key n = k;
            n.front() = b;
            out.add(n, s);
        });
    return out;
}

BarElement BarElement::right_mul(const CrossedElement& a) const {
    BarElement out(ctx_);
    for (const auto& [k, c] : terms_)
        for_each_basis(element(ctx_, k.back(), c) * a, [&](const ABasis& b, const Scalar& s) {
            Key n = k;
            n.back() = b;
            out.add(n, s);
        });
    return out;
}

std::string BarElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.to_plain_string() + "*";
        for (std::size_t i = 0; i < k.size(); ++i) out += (i ? "#(" : "(") + basis_text(ctx_, k[i]) + ")";
    }
    return out;
}

BarElement bar_differential(const BarElement& x) {
    const auto& ctx = x.context();
    BarElement out(ctx);
    for (const auto& [k, c] : x.terms()) {
        if (k.size() < 3) throw Error("b' needs at least one middle slot");
        for (std::size_t i = 0; i + 1 < k.size(); ++i) {
            const Scalar s = c * sign(static_cast<int>(i), ctx->field());
            for_each_basis(element(ctx, k[i], s) * element(ctx, k[i + 1], Scalar::one(ctx->field())),
                           [&](const ABasis& b, const Scalar& v) {
                               BarElement::Key n(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(i));
                               n.push_back(b);
                               n.insert(n.end(), k.begin() + static_cast<std::ptrdiff_t>(i) + 2, k.end());
                               out.add(n, v);
                           });
        }
    }
    return out;
}

// ---------------------------------------------------------------- Resolution

GroupIndex Resolution::product(const Word& w) const {
    GroupIndex g = ctx_->group().identity();
    for (auto h : w) g = ctx_->group().mul(g, h);
    return g;
}

std::vector<XElement> Resolution::basis(std::size_t r, std::size_t s) const {
    const std::size_t n = ctx_->nvars();
    std::vector<Wedge> wedges;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(std::min(r, n)), true);
    if (r <= n) {
        do {
            Wedge w;
            for (std::size_t i = 0; i < n; ++i)
                if (pick[i]) w.push_back(i);
            wedges.push_back(w);
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    std::vector<GroupIndex> nontrivial;
    for (GroupIndex g = 0; g < ctx_->group().order(); ++g)
        if (g != ctx_->group().identity()) nontrivial.push_back(g);
    std::vector<Word> words{Word{}};
    for (std::size_t i = 0; i < s; ++i) {
        std::vector<Word> next;
        for (const auto& w : words)
            for (auto g : nontrivial) {
                Word t = w;
                t.push_back(g);
                next.push_back(std::move(t));
            }
        words = std::move(next);
    }
    std::vector<XElement> out;
    for (const auto& w : words)
        for (const auto& v : wedges) out.push_back(XElement::basis(ctx_, w, v));
    return out;
}

template <typename F>
XElement Resolution::extend(const XElement& x, F&& on_basis) const {
    XElement out(ctx_);
    const FieldSpec f = ctx_->field();
    for (const auto& [k, c] : x.terms()) {
        XElement img = on_basis(k.word, k.wedge);
        if (img.is_zero()) continue;
        out += img.left_mul(element(ctx_, k.left, c)).right_mul(element(ctx_, k.right, Scalar::one(f)));
    }
    return out;
}

template <typename F>
BarElement Resolution::extend_bar(const XElement& x, F&& on_basis) const {
    BarElement out(ctx_);
    const FieldSpec f = ctx_->field();
    for (const auto& [k, c] : x.terms()) {
        BarElement img = on_basis(k.word, k.wedge);
        out += img.left_mul(element(ctx_, k.left, c)).right_mul(element(ctx_, k.right, Scalar::one(f)));
    }
    return out;
}

XElement Resolution::d0_basis(const Word& w, const Wedge& v) const {
    const FieldSpec f = ctx_->field();
    const std::size_t n = ctx_->nvars();
    const LinearEndo& m = ctx_->rho()(product(w));
    const ABasis one = unit_basis(ctx_);
    XElement out(ctx_);
    for (std::size_t k = 0; k < v.size(); ++k) {
        const Scalar s = sign(static_cast<int>(w.size() + k), f);
        Wedge rest = v;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
        out.add(XKey{one, w, rest, ABasis{unit_vector(n, v[k]), one.g}}, s);
        for (std::size_t i = 0; i < n; ++i)
            out.add(XKey{ABasis{unit_vector(n, i), one.g}, w, rest, one}, -s * m.at(i, v[k]));
    }
    return out;
}

XElement Resolution::d0(const XElement& x) const {
    return extend(x, [&](const Word& w, const Wedge& v) { return d0_basis(w, v); });
}

XElement Resolution::d1_basis(const Word& w, const Wedge& v) const {
    const FieldSpec f = ctx_->field();
    const Group& grp = ctx_->group();
    const ABasis one = unit_basis(ctx_);
    const std::size_t s = w.size();
    XElement out(ctx_);
    if (s == 0) return out;
    out.add(XKey{ABasis{one.m, w[0]}, Word(w.begin() + 1, w.end()), v, one}, Scalar::one(f));
    for (std::size_t i = 0; i + 1 < s; ++i) {
        const GroupIndex p = grp.mul(w[i], w[i + 1]);
        if (p == grp.identity()) continue;
        Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        nw.push_back(p);
        nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
        out.add(XKey{one, nw, v, one}, sign(static_cast<int>(i + 1), f) * ctx_->cocycle()(w[i], w[i + 1]));
    }
    // vbar(^gs v_1) ... vbar(^gs v_r), expanded multilinearly.
    const LinearEndo& m = ctx_->rho()(w.back());
    const Word head(w.begin(), w.end() - 1);
    const std::size_t n = ctx_->nvars();
    std::vector<std::pair<Wedge, Scalar>> acc{{Wedge{}, sign(static_cast<int>(s), f)}};
    for (auto j : v) {
        std::vector<std::pair<Wedge, Scalar>> next;
        for (const auto& [wd, c] : acc)
            for (std::size_t i = 0; i < n; ++i)
                if (!m.at(i, j).is_zero()) {
                    Wedge t = wd;
                    t.push_back(i);
                    next.emplace_back(std::move(t), c * m.at(i, j));
                }
        acc = std::move(next);
    }
    for (auto& [wd, c] : acc) {
        const int sg = wedge_sort(wd);
        if (sg != 0) out.add(XKey{one, head, wd, ABasis{one.m, w.back()}}, c * sign(sg < 0 ? 1 : 0, f));
    }
    return out;
}

XElement Resolution::d1(const XElement& x) const {
    return extend(x, [&](const Word& w, const Wedge& v) { return d1_basis(w, v); });
}

ZElement Resolution::mu(const XElement& x) const {
    ZElement out(ctx_);
    const FieldSpec f = ctx_->field();
    for (const auto& [k, c] : x.terms()) {
        if (!k.wedge.empty()) throw Error("mu is defined on X_{0s} only");
        const Poly moved = ctx_->act(product(k.word), Poly::monomial(k.right.m, Scalar::one(f)));
        for_each_basis(element(ctx_, k.left, c) * CrossedElement::poly(ctx_, moved),
                       [&](const ABasis& b, const Scalar& v) { out.add(ZKey{b, k.word, k.right.g}, v); });
    }
    return out;
}

ZElement Resolution::delta(const ZElement& z) const {
    const FieldSpec f = ctx_->field();
    const Group& grp = ctx_->group();
    const Cocycle& coc = ctx_->cocycle();
    ZElement out(ctx_);
    for (const auto& [k, c] : z.terms()) {
        const Word& w = k.word;
        const std::size_t s = w.size();
        if (s == 0) throw Error("delta is defined on Z_s with s >= 1");
        const CrossedElement a = element(ctx_, k.left, c);
        auto emit = [&](const CrossedElement& left, const Word& nw, GroupIndex right, const Scalar& coef) {
            const Scalar fc = coef * coc(right, k.h);
            for_each_basis(a * left, [&](const ABasis& b, const Scalar& v) {
                out.add(ZKey{b, nw, grp.mul(right, k.h)}, v * fc);
            });
        };
        emit(CrossedElement::w(ctx_, w[0]), Word(w.begin() + 1, w.end()), grp.identity(), Scalar::one(f));
        for (std::size_t i = 0; i + 1 < s; ++i) {
            const GroupIndex p = grp.mul(w[i], w[i + 1]);
            if (p == grp.identity()) continue;
            Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
            nw.push_back(p);
            nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
            emit(CrossedElement::one(ctx_), nw, grp.identity(), sign(static_cast<int>(i + 1), f) * coc(w[i], w[i + 1]));
        }
        emit(CrossedElement::one(ctx_), Word(w.begin(), w.end() - 1), w.back(), sign(static_cast<int>(s), f));
    }
    return out;
}

XElement Resolution::sigma0(const ZElement& z) const {
    XElement out(ctx_);
    for (const auto& [k, c] : z.terms())
        out.add(XKey{k.left, k.word, {}, ABasis{Monomial(ctx_->nvars(), 0), k.h}}, c);
    return out;
}

XElement Resolution::sigma0(const XElement& x) const {
    const FieldSpec f = ctx_->field();
    const std::size_t n = ctx_->nvars();
    // Left-basis form: a (x) word (x) rho^m vbar_delta (x) w_h, with z = y + rho.
    struct LKey {
        Word word;
        Monomial rho;
        Wedge wedge;
        GroupIndex h;
        auto operator<=>(const LKey&) const = default;
    };
    std::map<LKey, CrossedElement> left_form;
    for (const auto& [k, c] : x.terms()) {
        const GroupIndex g = product(k.word);
        const CrossedElement a = element(ctx_, k.left, c);
        for (const auto& kk : divisors(k.right.m)) {
            Scalar coef = Scalar::one(f);
            for (std::size_t i = 0; i < n; ++i) coef *= binomial(k.right.m[i], kk[i], f);
            const Poly y = ctx_->act(g, Poly::monomial(minus(k.right.m, kk), coef));
            auto [it, fresh] = left_form.try_emplace(LKey{k.word, kk, k.wedge, k.right.g}, ctx_);
            it->second += a * CrossedElement::poly(ctx_, y);
        }
    }
    XElement out(ctx_);
    for (const auto& [lk, a] : left_form) {
        if (a.is_zero()) continue;
        const YElement img = y_homotopy(YElement::basis(f, Monomial(n, 0), lk.rho, lk.wedge));
        const GroupIndex g = product(lk.word);
        const Scalar s = sign(static_cast<int>(lk.word.size()), f);
        for (const auto& [yk, yc] : img.terms()) {
            // rho = z - y: y moves left through the word, z joins the right factor.
            for (const auto& kk : divisors(yk.rho)) {
                Scalar coef = s * yc;
                for (std::size_t i = 0; i < n; ++i)
                    coef *= binomial(yk.rho[i], kk[i], f) * sign(static_cast<int>(yk.rho[i] - kk[i]), f);
                const Poly y = ctx_->act(g, Poly::monomial(minus(yk.rho, kk), coef));
                for_each_basis(a * CrossedElement::poly(ctx_, y), [&](const ABasis& b, const Scalar& v) {
                    out.add(XKey{b, lk.word, yk.wedge, ABasis{kk, lk.h}}, v);
                });
            }
        }
    }
    return out;
}

XElement Resolution::d1_rec_basis(const Word& w, const Wedge& v) const {
    const auto key = std::make_pair(w, v);
    if (auto it = d1_rec_cache_.find(key); it != d1_rec_cache_.end()) return it->second;
    XElement out(ctx_);
    if (!w.empty()) {
        const XElement x = XElement::basis(ctx_, w, v);
        if (v.empty()) out = sigma0(delta(mu(x)));
        else out = sigma0(d1_recursive(d0_basis(w, v))) * Scalar(-1, ctx_->field());
    }
    d1_rec_cache_.emplace(key, out);
    return out;
}

XElement Resolution::d1_recursive(const XElement& x) const {
    return extend(x, [&](const Word& w, const Wedge& v) { return d1_rec_basis(w, v); });
}

XElement Resolution::d2_rec_basis(const Word& w, const Wedge& v) const {
    const auto key = std::make_pair(w, v);
    if (auto it = d2_rec_cache_.find(key); it != d2_rec_cache_.end()) return it->second;
    XElement out(ctx_);
    if (w.size() >= 2) {
        const XElement x = XElement::basis(ctx_, w, v);
        XElement inner = d1_recursive(d1_recursive(x));
        if (!v.empty()) inner += d2_recursive(d0_basis(w, v));
        out = sigma0(inner) * Scalar(-1, ctx_->field());
    }
    d2_rec_cache_.emplace(key, out);
    return out;
}

XElement Resolution::d2_recursive(const XElement& x) const {
    return extend(x, [&](const Word& w, const Wedge& v) { return d2_rec_basis(w, v); });
}

BarElement Resolution::star(const Word& word, const std::vector<Poly>& qs) const {
    if (word.empty()) {
        std::vector<CrossedElement> slots;
        for (const auto& q : qs) slots.push_back(CrossedElement::poly(ctx_, q));
        return BarElement::tensor(ctx_, slots);
    }
    if (qs.empty()) {
        std::vector<CrossedElement> slots;
        for (auto g : word) slots.push_back(CrossedElement::w(ctx_, g));
        return BarElement::tensor(ctx_, slots);
    }
    const FieldSpec f = ctx_->field();
    const GroupIndex gs = word.back();
    const Word head(word.begin(), word.end() - 1);
    BarElement out(ctx_);
    for (std::size_t i = 0; i <= qs.size(); ++i) {
        std::vector<Poly> twisted;
        for (std::size_t j = 0; j < i; ++j) twisted.push_back(ctx_->act(gs, qs[j]));
        std::vector<CrossedElement> tail{CrossedElement::w(ctx_, gs)};
        for (std::size_t j = i; j < qs.size(); ++j) tail.push_back(CrossedElement::poly(ctx_, qs[j]));
        BarElement t = star(head, twisted).concat(BarElement::tensor(ctx_, tail));
        t *= sign(static_cast<int>(i), f);
        out += t;
    }
    return out;
}

BarElement Resolution::theta_closed_basis(const Word& w, const Wedge& v) const {
    const auto key = std::make_pair(w, v);
    if (auto it = theta_closed_cache_.find(key); it != theta_closed_cache_.end()) return it->second;
    const FieldSpec f = ctx_->field();
    const BarElement one = BarElement::tensor(ctx_, {CrossedElement::one(ctx_)});
    BarElement out(ctx_);
    std::vector<std::size_t> perm(v.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inversions;
        std::vector<Poly> qs;
        for (auto p : perm) qs.push_back(Poly::variable(v[p], ctx_->nvars(), f));
        BarElement t = one.concat(star(w, qs)).concat(one);
        t *= sign(inversions + static_cast<int>(v.size()), f);
        out += t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    theta_closed_cache_.emplace(key, out);
    return out;
}

BarElement Resolution::theta_closed(const XElement& x) const {
    return extend_bar(x, [&](const Word& w, const Wedge& v) { return theta_closed_basis(w, v); });
}

BarElement Resolution::theta_rec_basis(const Word& w, const Wedge& v) const {
    const auto key = std::make_pair(w, v);
    if (auto it = theta_rec_cache_.find(key); it != theta_rec_cache_.end()) return it->second;
    const FieldSpec f = ctx_->field();
    const std::size_t n = w.size() + v.size();
    BarElement out(ctx_);
    if (n == 0) {
        out = BarElement::tensor(ctx_, {CrossedElement::one(ctx_), CrossedElement::one(ctx_)});
    } else {
        const BarElement lower = theta_recursive(d(XElement::basis(ctx_, w, v)));
        const Scalar s = sign(static_cast<int>(n), f);
        for (const auto& [k, c] : lower.terms()) {
            BarElement::Key t = k;
            t.push_back(unit_basis(ctx_));
            out.add(t, c * s);
        }
    }
    theta_rec_cache_.emplace(key, out);
    return out;
}

BarElement Resolution::theta_recursive(const XElement& x) const {
    return extend_bar(x, [&](const Word& w, const Wedge& v) { return theta_rec_basis(w, v); });
}

// ---------------------------------------------------------------- checks

namespace {

class Checker {
public:
    explicit Checker(Report& r) : report_(r) {}
    void check(const std::string& id, bool ok, const std::function<std::string()>& witness) {
        auto& [count, first] = state_[id];
        ++count;
        if (!ok && first.empty()) first = witness();
    }
    void flush() {
        for (const auto& [id, st] : state_)
            report_.add(id, st.second.empty(), st.second.empty() ? std::to_string(st.first) + " cases" : st.second);
    }

private:
    Report& report_;
    std::map<std::string, std::pair<std::size_t, std::string>> state_;
};

std::vector<Monomial> monomials_up_to(std::size_t n, std::uint32_t d) {
    std::vector<Monomial> out{Monomial(n, 0)};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Monomial> next;
        for (const auto& m : out)
            for (std::uint32_t k = 0; k + total_degree(m) <= d; ++k) {
                Monomial t = m;
                t[i] = k;
                next.push_back(std::move(t));
            }
        out = std::move(next);
    }
    return out;
}

std::vector<Wedge> all_wedges(std::size_t n) {
    std::vector<Wedge> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Wedge w;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) w.push_back(i);
        out.push_back(w);
    }
    return out;
}

}  // namespace

Report resolution_check(const ContextPtr& ctx, std::size_t max_total_degree, std::uint64_t seed) {
    Report report;
    Checker chk(report);
    const FieldSpec f = ctx->field();
    const std::size_t n = ctx->nvars();

    for (const auto& rho : monomials_up_to(n, 4))
        for (const auto& wd : all_wedges(n)) {
            const std::size_t weight = total_degree(rho) + wd.size();
            if (weight > 4) continue;
            for (const Monomial& y : {Monomial(n, 0), unit_vector(n, 0)}) {
                const YElement e = YElement::basis(f, y, rho, wd);
                const auto text = [&] { return e.to_string(); };
                if (wd.size() <= 3) chk.check("res.y.boundary_squared", y_boundary(y_boundary(e)).is_zero(), text);
                YElement lhs = y_boundary(y_homotopy(e));
                if (!wd.empty()) lhs += y_homotopy(y_boundary(e));
                else lhs += y_section(y_augment(e));
                chk.check("res.y.homotopy", lhs == e, text);
            }
        }
    std::mt19937_64 rng(seed);
    for (int k = 0; k < 20; ++k) {
        const CrossedElement a = random_element(ctx, rng, 4, 3);
        const Poly p = a.component(ctx->group().identity());
        chk.check("res.y.augmentation", y_augment(y_section(p)) == p, [&] { return p.to_string(); });
    }

    Resolution res(ctx);
    for (std::size_t total = 0; total <= max_total_degree; ++total)
        for (std::size_t r = 0; r <= std::min(total, n); ++r) {
            const std::size_t s = total - r;
            for (const auto& x : res.basis(r, s)) {
                const auto text = [&] { return x.to_string(); };
                const XElement dx = res.d(x);
                chk.check("res.x.d_squared", res.d(dx).is_zero(), text);
                if (s >= 1) chk.check("res.x.d1_recursive", res.d1_recursive(x) == res.d1(x), text);
                if (s >= 2) chk.check("res.x.d2_vanishes", res.d2_recursive(x).is_zero(), text);
                const BarElement th = res.theta_closed(x);
                chk.check("res.theta.recursive", th == res.theta_recursive(x), text);
                if (total >= 1) chk.check("res.theta.chain_map", bar_differential(th) == res.theta_closed(dx), text);
            }
        }

    // Homotopy identities for sigma0 on random bimodule multiples of basis elements.
    for (std::size_t total = 0; total < max_total_degree; ++total)
        for (std::size_t r = 0; r <= std::min(total, n); ++r) {
            const auto basis = res.basis(r, total - r);
            for (int k = 0; k < 6 && !basis.empty(); ++k) {
                const XElement& b = basis[rng() % basis.size()];
                const XElement x = b.left_mul(random_element(ctx, rng, 2, 2)).right_mul(random_element(ctx, rng, 2, 2));
                const auto text = [&] { return x.to_string(); };
                const XElement once = res.sigma0(x);
                chk.check("res.x.sigma0_squared", res.sigma0(once).is_zero(), text);
                XElement lhs = res.d0(once);
                if (r > 0) lhs += res.sigma0(res.d0(x));
                else lhs += res.sigma0(res.mu(x));
                chk.check("res.x.sigma0_homotopy", lhs == x, text);
            }
        }

    for (std::size_t slots : {4u, 5u})
        for (int k = 0; k < 10; ++k) {
            std::vector<CrossedElement> parts;
            for (std::size_t i = 0; i < slots; ++i) parts.push_back(random_element(ctx, rng, 2, 2));
            const BarElement x = BarElement::tensor(ctx, parts);
            chk.check("res.bar.b_squared", bar_differential(bar_differential(x)).is_zero(), [&] { return x.to_string(); });
        }
    chk.flush();
    return report;
}

}  // namespace hqdeform
