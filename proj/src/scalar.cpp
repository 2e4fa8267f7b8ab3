#include "hqdeform/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

namespace hqdeform {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\n");
    return s.substr(b, e - b + 1);
}

std::uint32_t reduce(const mpz_class& v, std::uint32_t p) {
    mpz_class r = v % p;
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    if (a == 0) throw Error("division by zero in F_" + std::to_string(p));
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        std::int64_t quo = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - quo * nt);
        std::tie(r, nr) = std::make_pair(nr, r - quo * nr);
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime(p)) throw Error("not a prime below 2^31: " + std::to_string(p));
    FieldSpec f;
    f.p_ = p;
    return f;
}

FieldSpec FieldSpec::parse(const std::string& text) {
    std::string t = trim(text);
    if (t == "Q" || t == "q" || t == "QQ") return rationals();
    if (t.rfind("fp:", 0) == 0 || t.rfind("Fp:", 0) == 0) {
        std::string num = t.substr(3);
        if (num.empty() || !std::all_of(num.begin(), num.end(), ::isdigit) || num.size() > 10)
            throw Error("bad field: " + text);
        return prime(static_cast<std::uint32_t>(std::stoull(num)));
    }
    throw Error("bad field: " + text);
}

std::string FieldSpec::to_string() const { return is_rational() ? "Q" : "fp:" + std::to_string(p_); }

Scalar::Scalar(std::int64_t v, FieldSpec field) : field_(field) {
    if (field.is_rational()) {
        q_ = mpq_class(mpz_class(std::to_string(v)));
    } else {
        std::int64_t p = field.characteristic();
        std::int64_t r = v % p;
        if (r < 0) r += p;
        r_ = static_cast<std::uint32_t>(r);
    }
}

Scalar::Scalar(const mpq_class& v, FieldSpec field) : field_(field) {
    if (field.is_rational()) {
        // Copying an mpq with a negative denominator is undefined in GMP, so go through the parts.
        q_ = mpq_class(mpz_class(v.get_num()), mpz_class(v.get_den()));
        q_.canonicalize();
    } else {
        std::uint32_t p = field.characteristic();
        std::uint32_t d = reduce(v.get_den(), p);
        r_ = static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(reduce(v.get_num(), p)) * inv_mod(d, p)) % p);
    }
}

Scalar Scalar::parse(const std::string& text, FieldSpec field) {
    std::string t = trim(text);
    auto mod = t.find("mod");
    if (mod != std::string::npos) {
        if (field.is_rational()) throw Error("residue literal over Q: " + text);
        auto p = std::stoull(trim(t.substr(mod + 3)));
        if (p != field.characteristic()) throw Error("residue modulus mismatch: " + text);
        t = trim(t.substr(0, mod));
    }
    mpq_class v;
    try {
        std::string s = t;
        s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
        if (!s.empty() && s[0] == '+') s = s.substr(1);
        if (s.empty()) throw Error("empty scalar");
        for (char c : s)
            if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-'))
                throw Error("bad scalar: " + text);
        if (v.set_str(s, 10) != 0) throw Error("bad scalar: " + text);
        if (v.get_den() == 0) throw Error("zero denominator: " + text);
        v.canonicalize();
    } catch (const std::invalid_argument&) {
        throw Error("bad scalar: " + text);
    }
    if (!field.is_rational() && reduce(v.get_den(), field.characteristic()) == 0)
        throw Error("denominator vanishes in " + field.to_string() + ": " + text);
    return Scalar(v, field);
}

bool Scalar::is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

void Scalar::check_same(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw Error("field mismatch: " + field_.to_string() + " vs " + o.field_.to_string());
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (field_.is_rational()) r.q_ = -q_;
    else if (r_ != 0) r.r_ = field_.characteristic() - r_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same(o);
    if (field_.is_rational()) q_ += o.q_;
    else r_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r_) + o.r_) % field_.characteristic());
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same(o);
    if (field_.is_rational()) q_ *= o.q_;
    else r_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r_) * o.r_) % field_.characteristic());
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_same(o);
    return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_)) return false;
    return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("division by zero");
    Scalar r = *this;
    if (field_.is_rational()) r.q_ = 1 / q_;
    else r.r_ = inv_mod(r_, field_.characteristic());
    return r;
}

Scalar Scalar::pow(std::int64_t e) const {
    Scalar base = e < 0 ? inverse() : *this;
    std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
    Scalar acc = one(field_);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

std::string Scalar::to_plain_string() const {
    if (field_.is_rational()) return q_.get_str();
    return std::to_string(r_);
}

std::string Scalar::to_string() const {
    if (field_.is_rational()) return q_.get_str();
    return std::to_string(r_) + " mod " + std::to_string(field_.characteristic());
}

std::optional<std::uint64_t> mult_order(const Scalar& x) {
    if (x.is_zero()) throw Error("multiplicative order of zero");
    if (x.field().is_rational()) {
        if (x.is_one()) return 1;
        if (x.rational() == -1) return 2;
        return std::nullopt;
    }
    std::uint64_t n = x.field().characteristic() - 1;
    std::vector<std::uint64_t> divisors;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        divisors.push_back(d);
        if (d != n / d) divisors.push_back(n / d);
    }
    std::sort(divisors.begin(), divisors.end());
    for (auto d : divisors)
        if (x.pow(static_cast<std::int64_t>(d)).is_one()) return d;
    throw Error("order computation failed");
}

QParam QParam::from(const Scalar& q) { return QParam{q, mult_order(q)}; }

Scalar qint(std::int64_t i, const Scalar& q) {
    if (i < 0) throw Error("negative q-integer index");
    Scalar acc = Scalar::zero(q.field());
    Scalar pw = Scalar::one(q.field());
    for (std::int64_t k = 0; k < i; ++k) {
        acc += pw;
        pw *= q;
    }
    return acc;
}

Scalar qfactorial(std::int64_t i, const Scalar& q) {
    Scalar acc = Scalar::one(q.field());
    for (std::int64_t k = 1; k <= i; ++k) acc *= qint(k, q);
    return acc;
}

Scalar qbinomial(std::int64_t m, std::int64_t i, const Scalar& q) {
    if (i < 0 || i > m) return Scalar::zero(q.field());
    std::vector<Scalar> row(1, Scalar::one(q.field()));
    for (std::int64_t r = 1; r <= m; ++r) {
        std::vector<Scalar> next(static_cast<std::size_t>(r + 1), Scalar::zero(q.field()));
        for (std::int64_t k = 0; k <= r; ++k) {
            if (k >= 1) next[k] += row[k - 1];
            if (k < r) next[k] += q.pow(k) * row[k];
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(i)];
}

}  // namespace hqdeform
