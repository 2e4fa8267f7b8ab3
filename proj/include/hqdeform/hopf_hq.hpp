#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hqdeform/report.hpp"
#include "hqdeform/scalar.hpp"

namespace hqdeform {

// PBW basis element sigma^i D1^j D2^k.
struct Pbw {
    std::int64_t i = 0;
    std::uint32_t j = 0;
    std::uint32_t k = 0;
    auto operator<=>(const Pbw&) const = default;
    std::string to_string() const;
};

// Element of H^{\otimes N} in the PBW tensor basis.
template <std::size_t N>
class PbwTensor {
public:
    using Key = std::array<Pbw, N>;
    using Terms = std::map<Key, Scalar>;

    explicit PbwTensor(FieldSpec f) : field_(f) {}
    static PbwTensor basis(const Key& k, const Scalar& c) {
        PbwTensor t(c.field());
        t.add(k, c);
        return t;
    }

    const FieldSpec& field() const { return field_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Key& k, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    PbwTensor& operator+=(const PbwTensor& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    PbwTensor& operator-=(const PbwTensor& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    PbwTensor& operator*=(const Scalar& s) {
        if (s.is_zero()) terms_.clear();
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }
    friend PbwTensor operator+(PbwTensor a, const PbwTensor& b) { return a += b; }
    friend PbwTensor operator-(PbwTensor a, const PbwTensor& b) { return a -= b; }
    friend bool operator==(const PbwTensor& a, const PbwTensor& b) { return a.terms_ == b.terms_; }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [k, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += c.to_plain_string() + "*";
            for (std::size_t n = 0; n < N; ++n) out += (n ? "(x)" : "") + k[n].to_string();
        }
        return out;
    }

private:
    FieldSpec field_;
    Terms terms_;
};

using HqElement = PbwTensor<1>;
using HqTensor = PbwTensor<2>;
using HqTensor3 = PbwTensor<3>;

// Images of the generators under the structure maps; perturbing any entry must break an axiom.
struct HqConstants {
    Scalar commutation;  // D_a sigma = commutation * sigma D_a
    HqTensor delta_d1, delta_d2, delta_sigma, delta_sigma_inv;
    HqElement antipode_d1, antipode_d2, antipode_sigma, antipode_sigma_inv;
    Scalar counit_d1, counit_d2, counit_sigma, counit_sigma_inv;

    static HqConstants standard(const Scalar& q);
};

class HqAlgebra {
public:
    explicit HqAlgebra(QParam q);
    HqAlgebra(QParam q, HqConstants constants);

    const QParam& qparam() const { return q_; }
    const FieldSpec& field() const { return q_.q.field(); }
    const HqConstants& constants() const { return c_; }
    // Largest allowed D exponent plus one, when q is a primitive l-th root of unity (l >= 2).
    std::optional<std::uint32_t> truncation() const;

    HqElement basis(const Pbw& b) const;
    HqElement sigma(std::int64_t i) const { return basis({i, 0, 0}); }
    HqElement d1() const { return basis({0, 1, 0}); }
    HqElement d2() const { return basis({0, 0, 1}); }

    template <std::size_t N>
    PbwTensor<N> mul(const PbwTensor<N>& a, const PbwTensor<N>& b) const {
        PbwTensor<N> r(field());
        for (const auto& [ka, ca] : a.terms())
            for (const auto& [kb, cb] : b.terms()) {
                typename PbwTensor<N>::Key k;
                Scalar c = ca * cb;
                bool zero = false;
                for (std::size_t n = 0; n < N && !zero; ++n) {
                    auto pr = mul_basis(ka[n], kb[n]);
                    if (!pr) zero = true;
                    else {
                        k[n] = pr->first;
                        c *= pr->second;
                    }
                }
                if (!zero) r.add(k, c);
            }
        return r;
    }

    HqTensor coproduct(const HqElement& a) const;
    HqElement antipode(const HqElement& a) const;
    Scalar counit(const HqElement& a) const;

    HqTensor3 coproduct_left(const HqTensor& t) const;   // (Delta (x) id)
    HqTensor3 coproduct_right(const HqTensor& t) const;  // (id (x) Delta)
    HqElement counit_left(const HqTensor& t) const;      // (eps (x) id)
    HqElement counit_right(const HqTensor& t) const;     // (id (x) eps)

    // Delta(D1^m) by the q-binomial closed form.
    HqTensor coproduct_d1_power_closed(std::uint32_t m) const;

    std::vector<Pbw> basis_up_to(std::uint32_t bound) const;

private:
    std::optional<std::pair<Pbw, Scalar>> mul_basis(const Pbw& a, const Pbw& b) const;
    HqTensor coproduct_basis(const Pbw& b) const;
    HqElement antipode_basis(const Pbw& b) const;

    QParam q_;
    HqConstants c_;
    mutable std::mutex cache_mutex_;
    mutable std::map<Pbw, HqTensor> delta_cache_;
};

HqTensor tensor(const HqElement& a, const HqElement& b);
HqTensor3 tensor3(const HqTensor& a, const HqElement& b);
HqTensor3 tensor3(const HqElement& a, const HqTensor& b);

Report verify_hopf_axioms(const HqAlgebra& h, std::uint32_t bound);

// F = sum_i F_i t^i with F_i in H (x) H.
using TwistSeries = std::vector<HqTensor>;

// exp_q(t D1 (x) D2): l terms when q has order l >= 2, otherwise terms 0..order.
TwistSeries expq(const HqAlgebra& h, std::uint32_t order);

// Counit normalization, the cocycle equation order by order, and invariance under the flip braid.
Report verify_twisting(const HqAlgebra& h, const TwistSeries& f, std::uint32_t order, std::uint32_t bound);

}  // namespace hqdeform
