#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hqdeform/crossed_product.hpp"
#include "hqdeform/report.hpp"

namespace hqdeform {

// Basis element x^m w_g of A.
struct ABasis {
    Monomial m;
    GroupIndex g = 0;
    auto operator<=>(const ABasis&) const = default;
};

using Word = std::vector<GroupIndex>;     // g_1 ... g_s, no identity entries
using Wedge = std::vector<std::size_t>;   // strictly increasing variable indices

// Sorts a product of v-bar's; sign 0 when an index repeats.
int wedge_sort(Wedge& w);

// ---------------------------------------------------------------- Y

// Free left S(y)-module on rho^m vbar_delta.
struct YKey {
    Monomial y;
    Monomial rho;
    Wedge wedge;
    auto operator<=>(const YKey&) const = default;
};

class YElement {
public:
    YElement(FieldSpec field, std::size_t nvars) : field_(field), nvars_(nvars) {}
    static YElement basis(FieldSpec field, const Monomial& y, const Monomial& rho, const Wedge& wedge);

    const FieldSpec& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    const std::map<YKey, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const YKey& k, const Scalar& c);
    YElement& operator+=(const YElement& o);
    YElement& operator-=(const YElement& o);
    friend YElement operator+(YElement a, const YElement& b) { return a += b; }
    friend YElement operator-(YElement a, const YElement& b) { return a -= b; }
    friend bool operator==(const YElement& a, const YElement& b) { return a.terms_ == b.terms_; }
    std::string to_string() const;

private:
    FieldSpec field_;
    std::size_t nvars_;
    std::map<YKey, Scalar> terms_;
};

YElement y_boundary(const YElement& x);
YElement y_homotopy(const YElement& x);
// Multiplication Y_0 -> S (rho acts as 0) and the section P -> P(y).
Poly y_augment(const YElement& x);
YElement y_section(const Poly& p);

// ---------------------------------------------------------------- X, Z, bar

// a (x) g_1..g_s (x) vbar_delta (x) b with a, b basis elements of A.
struct XKey {
    ABasis left;
    Word word;
    Wedge wedge;
    ABasis right;
    auto operator<=>(const XKey&) const = default;
};

class XElement {
public:
    explicit XElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}
    // 1 (x) word (x) vbar_wedge (x) 1
    static XElement basis(const ContextPtr& ctx, const Word& word, const Wedge& wedge);

    const ContextPtr& context() const { return ctx_; }
    const std::map<XKey, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const XKey& k, const Scalar& c);
    XElement& operator+=(const XElement& o);
    XElement& operator-=(const XElement& o);
    XElement& operator*=(const Scalar& c);
    friend XElement operator+(XElement a, const XElement& b) { return a += b; }
    friend XElement operator-(XElement a, const XElement& b) { return a -= b; }
    friend XElement operator*(XElement a, const Scalar& c) { return a *= c; }
    friend bool operator==(const XElement& a, const XElement& b) { return a.terms_ == b.terms_; }

    XElement left_mul(const CrossedElement& a) const;
    XElement right_mul(const CrossedElement& b) const;
    std::string to_string() const;

private:
    ContextPtr ctx_;
    std::map<XKey, Scalar> terms_;
};

// (A (x) kG-bar^s) (x)_S A in the form a (x) g_1..g_s (x) w_h.
struct ZKey {
    ABasis left;
    Word word;
    GroupIndex h = 0;
    auto operator<=>(const ZKey&) const = default;
};

class ZElement {
public:
    explicit ZElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}
    const ContextPtr& context() const { return ctx_; }
    const std::map<ZKey, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const ZKey& k, const Scalar& c);
    ZElement& operator+=(const ZElement& o);
    friend bool operator==(const ZElement& a, const ZElement& b) { return a.terms_ == b.terms_; }

private:
    ContextPtr ctx_;
    std::map<ZKey, Scalar> terms_;
};

// Sum of a_0 (x) a_1 (x) ... (x) a_k over basis elements; slots 1..k-1 are taken in A/k.
class BarElement {
public:
    using Key = std::vector<ABasis>;

    explicit BarElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}
    // Tensor product of the given elements; scalar middle slots vanish.
    static BarElement tensor(const ContextPtr& ctx, const std::vector<CrossedElement>& slots);

    const ContextPtr& context() const { return ctx_; }
    const std::map<Key, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Key& k, const Scalar& c);
    BarElement& operator+=(const BarElement& o);
    BarElement& operator-=(const BarElement& o);
    BarElement& operator*=(const Scalar& c);
    friend BarElement operator+(BarElement a, const BarElement& b) { return a += b; }
    friend BarElement operator-(BarElement a, const BarElement& b) { return a -= b; }
    friend bool operator==(const BarElement& a, const BarElement& b) { return a.terms_ == b.terms_; }

    // Concatenation of tensors, then removal of scalar entries away from the two ends.
    BarElement concat(const BarElement& o) const;
    BarElement left_mul(const CrossedElement& a) const;
    BarElement right_mul(const CrossedElement& b) const;
    std::string to_string() const;

private:
    ContextPtr ctx_;
    std::map<Key, Scalar> terms_;
};

BarElement bar_differential(const BarElement& x);

// ---------------------------------------------------------------- maps

class Resolution {
public:
    explicit Resolution(ContextPtr ctx) : ctx_(std::move(ctx)) {}
    const ContextPtr& context() const { return ctx_; }

    // All 1 (x) word (x) vbar (x) 1 with |wedge| = r and |word| = s.
    std::vector<XElement> basis(std::size_t r, std::size_t s) const;

    XElement d0(const XElement& x) const;
    XElement d1(const XElement& x) const;  // closed formula
    XElement d(const XElement& x) const { return d0(x) + d1(x); }

    ZElement mu(const XElement& x) const;
    ZElement delta(const ZElement& z) const;
    XElement sigma0(const XElement& x) const;
    XElement sigma0(const ZElement& z) const;

    // Literal recursions through sigma0.
    XElement d1_recursive(const XElement& x) const;
    XElement d2_recursive(const XElement& x) const;

    // (w_g1 (x) ... (x) w_gs) * (Q_1 (x) ... (x) Q_r), r + s slots.
    BarElement star(const Word& word, const std::vector<Poly>& qs) const;
    BarElement theta_closed(const XElement& x) const;
    BarElement theta_recursive(const XElement& x) const;

private:
    template <typename F>
    XElement extend(const XElement& x, F&& on_basis) const;
    template <typename F>
    BarElement extend_bar(const XElement& x, F&& on_basis) const;

    GroupIndex product(const Word& w) const;
    XElement d0_basis(const Word& w, const Wedge& v) const;
    XElement d1_basis(const Word& w, const Wedge& v) const;
    XElement d1_rec_basis(const Word& w, const Wedge& v) const;
    XElement d2_rec_basis(const Word& w, const Wedge& v) const;
    BarElement theta_closed_basis(const Word& w, const Wedge& v) const;
    BarElement theta_rec_basis(const Word& w, const Wedge& v) const;

    ContextPtr ctx_;
    mutable std::map<std::pair<Word, Wedge>, XElement> d1_rec_cache_;
    mutable std::map<std::pair<Word, Wedge>, XElement> d2_rec_cache_;
    mutable std::map<std::pair<Word, Wedge>, BarElement> theta_closed_cache_;
    mutable std::map<std::pair<Word, Wedge>, BarElement> theta_rec_cache_;
};

// Ids: res.y.boundary_squared, res.y.homotopy, res.y.augmentation, res.x.d_squared,
// res.x.d1_recursive, res.x.d2_vanishes, res.x.sigma0_squared, res.theta.recursive,
// res.theta.chain_map, res.bar.b_squared.
Report resolution_check(const ContextPtr& ctx, std::size_t max_total_degree = 3, std::uint64_t seed = 0x5eed);

}  // namespace hqdeform
