#include "hqdeform/deformation.hpp"

#include <random>

namespace hqdeform {

TSeries TSeries::constant(const CrossedElement& a) {
    TSeries s(a.context());
    s.add(0, a);
    return s;
}

CrossedElement TSeries::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : CrossedElement(ctx_); }

void TSeries::add(std::size_t k, const CrossedElement& a) {
    if (a.is_zero()) return;
    while (coeffs_.size() <= k) coeffs_.emplace_back(ctx_);
    coeffs_[k] += a;
    trim();
}

TSeries& TSeries::operator+=(const TSeries& o) {
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) add(k, o.coeffs_[k]);
    trim();
    return *this;
}

void TSeries::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> TSeries::first_difference(const TSeries& o) const {
    const std::size_t n = std::max(length(), o.length());
    for (std::size_t k = 0; k < n; ++k)
        if (!(coefficient(k) == o.coefficient(k))) return k;
    return std::nullopt;
}

std::string TSeries::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "t^" + std::to_string(k) + "*[" + coeffs_[k].to_string() + "]";
    }
    return out;
}

TSeries deformed_product(const HqStructure& st, const CrossedElement& a, const CrossedElement& b) {
    TSeries out(st.ctx());
    const auto& qp = st.qparam();
    CrossedElement left = a;
    CrossedElement right = b;
    Scalar fact = Scalar::one(st.ctx()->field());
    for (std::size_t i = 0;; ++i) {
        if (left.is_zero() || right.is_zero()) break;
        if (qp.truncates() && i >= *qp.order) break;
        if (i > 0) fact *= qint(static_cast<std::int64_t>(i), st.q());
        if (fact.is_zero()) throw Error("(" + std::to_string(i) + ")!_q vanishes; the deformed product is undefined");
        out.add(i, left * right * fact.inverse());
        left = st.delta(1, st.alpha_inv(left));
        right = st.delta(2, right);
    }
    return out;
}

TSeries deformed_product(const HqStructure& st, const TSeries& a, const TSeries& b) {
    TSeries out(st.ctx());
    for (std::size_t i = 0; i < a.length(); ++i)
        for (std::size_t j = 0; j < b.length(); ++j) {
            TSeries p = deformed_product(st, a.coefficient(i), b.coefficient(j));
            for (std::size_t k = 0; k < p.length(); ++k) out.add(i + j + k, p.coefficient(k));
        }
    return out;
}

CrossedElement infinitesimal(const HqStructure& st, const CrossedElement& a, const CrossedElement& b) {
    return st.delta(1, st.alpha_inv(a)) * st.delta(2, b);
}

CrossedElement phi_coboundary(const HqStructure& st, const CrossedElement& a, const CrossedElement& b,
                              const CrossedElement& c) {
    return a * infinitesimal(st, b, c) - infinitesimal(st, a * b, c) + infinitesimal(st, a, b * c) -
           infinitesimal(st, a, b) * c;
}

Report check_associativity(const HqStructure& st, const CrossedElement& a, const CrossedElement& b,
                           const CrossedElement& c) {
    Report r;
    const TSeries ab_c = deformed_product(st, deformed_product(st, a, b), TSeries::constant(c));
    const TSeries a_bc = deformed_product(st, TSeries::constant(a), deformed_product(st, b, c));
    auto k = ab_c.first_difference(a_bc);
    r.add("deform.assoc", !k, k ? "mismatch at t^" + std::to_string(*k) + " for a=" + a.to_string() + ", b=" + b.to_string() + ", c=" + c.to_string() : "");
    return r;
}

Report check_unit(const HqStructure& st, const CrossedElement& a) {
    Report r;
    const CrossedElement one = CrossedElement::one(st.ctx());
    const TSeries expect = TSeries::constant(a);
    const bool left = deformed_product(st, one, a) == expect;
    const bool right = deformed_product(st, a, one) == expect;
    r.add("deform.unit", left && right, left && right ? "" : std::string(left ? "a*1" : "1*a") + " != a for a=" + a.to_string());
    return r;
}

Report deformation_suite(const HqStructure& st, const SampleOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::size_t> support(1, 2);
    const auto& ctx = st.ctx();
    auto sample = [&] { return random_element(ctx, rng, opt.max_degree, support(rng)); };
    std::string assoc, unit, t0, t1, len, bar;
    const std::size_t max_len = st.qparam().truncates() ? *st.qparam().order : SIZE_MAX;
    for (std::size_t k = 0; k < opt.samples; ++k) {
        const CrossedElement a = sample(), b = sample(), c = sample();
        if (assoc.empty()) {
            Report r = check_associativity(st, a, b, c);
            if (!r.ok()) assoc = r.items.front().detail;
        }
        if (unit.empty()) {
            Report r = check_unit(st, a);
            if (!r.ok()) unit = r.items.front().detail;
        }
        const TSeries ab = deformed_product(st, a, b);
        if (t0.empty() && !(ab.coefficient(0) == a * b)) t0 = "t^0 coefficient differs from the product of A for a=" + a.to_string();
        if (t1.empty() && !(ab.coefficient(1) == infinitesimal(st, a, b)))
            t1 = "t^1 coefficient differs from Phi for a=" + a.to_string() + ", b=" + b.to_string();
        if (len.empty() && ab.length() > max_len) len = "series of length " + std::to_string(ab.length());
        if (bar.empty()) {
            const CrossedElement d = phi_coboundary(st, a, b, c);
            if (!d.is_zero()) bar = "b(Phi) = " + d.to_string();
        }
    }
    Report r;
    r.add("deform.assoc", assoc.empty(), assoc);
    r.add("deform.unit", unit.empty(), unit);
    r.add("deform.t0", t0.empty(), t0);
    r.add("deform.infinitesimal", t1.empty(), t1);
    r.add("deform.length", len.empty(), len);
    r.add("deform.phi_cocycle", bar.empty(), bar);
    return r;
}

}  // namespace hqdeform
