#include "hqdeform/polynomial.hpp"

#include <numeric>

namespace hqdeform {

std::uint32_t total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

Poly Poly::constant(const Scalar& c, std::size_t nvars) {
    Poly p(c.field(), nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

Poly Poly::variable(std::size_t i, std::size_t nvars, FieldSpec field) {
    if (i >= nvars) throw Error("variable index out of range");
    Monomial m(nvars, 0);
    m[i] = 1;
    return monomial(m, Scalar::one(field));
}

Poly Poly::monomial(const Monomial& m, const Scalar& c) {
    Poly p(c.field(), m.size());
    p.add_term(m, c);
    return p;
}

Scalar Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

std::optional<std::uint32_t> Poly::degree() const {
    if (terms_.empty()) return std::nullopt;
    return total_degree(terms_.rbegin()->first);
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
    if (m.size() != nvars_) throw Error("monomial has wrong number of variables");
    if (!(c.field() == field_)) throw Error("field mismatch in polynomial");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Poly::check(const Poly& o) const {
    if (!(field_ == o.field_) || nvars_ != o.nvars_) throw Error("incompatible polynomials");
}

Poly& Poly::operator+=(const Poly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check(b);
    Poly r(a.field_, a.nvars_);
    Monomial m(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

Poly Poly::pow(std::uint32_t e) const {
    Poly acc = constant(Scalar::one(field_), nvars_);
    for (std::uint32_t k = 0; k < e; ++k) acc = acc * *this;
    return acc;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string coef = c.to_plain_string();
        bool negative = !coef.empty() && coef[0] == '-';
        if (negative) coef = coef.substr(1);
        if (first) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) out += coef;
        else if (coef == "1") out += mono;
        else out += coef + "*" + mono;
    }
    return out;
}

LinearEndo::LinearEndo(std::size_t n, FieldSpec field)
    : n_(n), field_(field), m_(n, std::vector<Scalar>(n, Scalar::zero(field))) {}

LinearEndo LinearEndo::identity(std::size_t n, FieldSpec field) {
    LinearEndo e(n, field);
    for (std::size_t i = 0; i < n; ++i) e.m_[i][i] = Scalar::one(field);
    return e;
}

LinearEndo LinearEndo::diagonal(const std::vector<Scalar>& d) {
    if (d.empty()) throw Error("empty diagonal");
    LinearEndo e(d.size(), d.front().field());
    for (std::size_t i = 0; i < d.size(); ++i) e.m_[i][i] = d[i];
    return e;
}

LinearEndo LinearEndo::from_images(const std::vector<Poly>& images) {
    if (images.empty()) throw Error("no images given");
    const std::size_t n = images.size();
    LinearEndo e(n, images.front().field());
    for (std::size_t j = 0; j < n; ++j) {
        if (images[j].nvars() != n) throw Error("image has wrong number of variables");
        for (const auto& [m, c] : images[j].terms()) {
            if (total_degree(m) != 1) throw Error("image of x" + std::to_string(j + 1) + " is not linear");
            for (std::size_t i = 0; i < n; ++i)
                if (m[i] == 1) e.m_[i][j] = c;
        }
    }
    return e;
}

Poly LinearEndo::image(std::size_t j) const {
    Poly p(field_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
        Monomial m(n_, 0);
        m[i] = 1;
        p.add_term(m, m_[i][j]);
    }
    return p;
}

LinearEndo LinearEndo::compose(const LinearEndo& o) const {
    LinearEndo r(n_, field_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k) r.m_[i][j] += m_[i][k] * o.m_[k][j];
    return r;
}

std::optional<LinearEndo> LinearEndo::inverse() const {
    std::vector<std::vector<Scalar>> a = m_;
    LinearEndo inv = identity(n_, field_);
    for (std::size_t c = 0; c < n_; ++c) {
        std::size_t p = c;
        while (p < n_ && a[p][c].is_zero()) ++p;
        if (p == n_) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(inv.m_[p], inv.m_[c]);
        Scalar s = a[c][c].inverse();
        for (std::size_t k = 0; k < n_; ++k) {
            a[c][k] *= s;
            inv.m_[c][k] *= s;
        }
        for (std::size_t r = 0; r < n_; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            Scalar f = a[r][c];
            for (std::size_t k = 0; k < n_; ++k) {
                a[r][k] -= f * a[c][k];
                inv.m_[r][k] -= f * inv.m_[c][k];
            }
        }
    }
    return inv;
}

Scalar LinearEndo::det() const {
    std::vector<std::vector<Scalar>> a = m_;
    Scalar d = Scalar::one(field_);
    for (std::size_t c = 0; c < n_; ++c) {
        std::size_t p = c;
        while (p < n_ && a[p][c].is_zero()) ++p;
        if (p == n_) return Scalar::zero(field_);
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        Scalar s = a[c][c].inverse();
        for (std::size_t r = c + 1; r < n_; ++r) {
            if (a[r][c].is_zero()) continue;
            Scalar f = a[r][c] * s;
            for (std::size_t k = c; k < n_; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return d;
}

Poly substitute(const LinearEndo& m, const Poly& p) {
    const std::size_t n = p.nvars();
    if (m.dim() != n) throw Error("substitution dimension mismatch");
    std::vector<std::vector<Poly>> powers(n);
    Poly out(p.field(), n);
    for (const auto& [mono, c] : p.terms()) {
        Poly term = Poly::constant(c, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (mono[i] == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(Poly::constant(Scalar::one(p.field()), n));
            while (pw.size() <= mono[i]) pw.push_back(pw.back() * m.image(i));
            term = term * pw[mono[i]];
        }
        out += term;
    }
    return out;
}

Representation::Representation(const Group& g, std::vector<LinearEndo> mats)
    : n_(mats.empty() ? 0 : mats.front().dim()), mats_(std::move(mats)) {
    if (mats_.size() != g.order()) throw Error("representation needs one matrix per group element");
}

Representation Representation::from_generators(const Group& grp, const std::map<std::string, LinearEndo>& gens,
                                               std::size_t n, FieldSpec field) {
    std::vector<LinearEndo> gen_mats;
    for (const auto& gl : grp.generator_labels()) {
        auto it = gens.find(gl);
        if (it == gens.end()) throw Error("representation missing generator: " + gl);
        if (it->second.dim() != n) throw Error("generator matrix has wrong size: " + gl);
        gen_mats.push_back(it->second);
    }
    std::vector<LinearEndo> mats;
    for (GroupIndex x = 0; x < grp.order(); ++x) {
        LinearEndo acc = LinearEndo::identity(n, field);
        for (auto k : grp.generator_words()[x]) acc = acc.compose(gen_mats[k]);
        mats.push_back(acc);
    }
    Representation rho(grp, std::move(mats));
    if (auto d = representation_defect(grp, rho))
        throw Error("generator images do not define a representation (at " + grp.label(d->first) + ", " +
                    grp.label(d->second) + ")");
    return rho;
}

std::optional<std::pair<GroupIndex, GroupIndex>> representation_defect(const Group& grp, const Representation& rho) {
    const auto e = grp.identity();
    if (!(rho(e) == LinearEndo::identity(rho.dim(), rho(e).field()))) return std::make_pair(e, e);
    for (GroupIndex g = 0; g < grp.order(); ++g)
        for (GroupIndex h = 0; h < grp.order(); ++h)
            if (!(rho(grp.mul(g, h)) == rho(g).compose(rho(h)))) return std::make_pair(g, h);
    return std::nullopt;
}

Poly group_act(const Representation& rho, GroupIndex g, const Poly& p) { return substitute(rho(g), p); }

}  // namespace hqdeform
