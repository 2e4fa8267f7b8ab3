#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hqdeform/group.hpp"
#include "hqdeform/linalg.hpp"
#include "hqdeform/scalar.hpp"

namespace hqdeform {

using Monomial = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Monomial& m);

// Graded lexicographic order: total degree first, then lexicographic on exponents.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class Poly {
public:
    using Terms = std::map<Monomial, Scalar, GrlexLess>;

    Poly(FieldSpec field, std::size_t nvars) : field_(field), nvars_(nvars) {}
    static Poly constant(const Scalar& c, std::size_t nvars);
    static Poly variable(std::size_t i, std::size_t nvars, FieldSpec field);
    static Poly monomial(const Monomial& m, const Scalar& c);

    const FieldSpec& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const Monomial& m) const;
    std::optional<std::uint32_t> degree() const;  // nullopt for the zero polynomial

    void add_term(const Monomial& m, const Scalar& c);
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator-() const;
    Poly& operator*=(const Scalar& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
    friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b);
    Poly pow(std::uint32_t e) const;

    // "3*x1^2*x3 - x2"; terms in descending grlex order.
    std::string to_string() const;

private:
    void check(const Poly& o) const;

    FieldSpec field_;
    std::size_t nvars_;
    Terms terms_;
};

// Linear endomorphism of V; column j holds the image of x_j.
class LinearEndo {
public:
    LinearEndo(std::size_t n, FieldSpec field);
    static LinearEndo identity(std::size_t n, FieldSpec field);
    static LinearEndo diagonal(const std::vector<Scalar>& d);
    // Images of x_1..x_n given as linear polynomials.
    static LinearEndo from_images(const std::vector<Poly>& images);

    std::size_t dim() const { return n_; }
    const FieldSpec& field() const { return field_; }
    const Scalar& at(std::size_t row, std::size_t col) const { return m_[row][col]; }
    Scalar& at(std::size_t row, std::size_t col) { return m_[row][col]; }
    Poly image(std::size_t j) const;  // image of x_j as a linear polynomial

    LinearEndo compose(const LinearEndo& o) const;  // this after o
    std::optional<LinearEndo> inverse() const;
    Scalar det() const;
    friend bool operator==(const LinearEndo& a, const LinearEndo& b) { return a.m_ == b.m_; }

private:
    std::size_t n_;
    FieldSpec field_;
    std::vector<std::vector<Scalar>> m_;
};

// Algebra homomorphism of S(V) induced by a linear map.
Poly substitute(const LinearEndo& m, const Poly& p);

// Linear representation of G on V, one matrix per element.
class Representation {
public:
    Representation(const Group& g, std::vector<LinearEndo> mats);
    // Extends images of the generators along generator words and checks the result.
    static Representation from_generators(const Group& g, const std::map<std::string, LinearEndo>& gens,
                                          std::size_t n, FieldSpec field);
    const LinearEndo& operator()(GroupIndex g) const { return mats_.at(g); }
    std::size_t dim() const { return n_; }

private:
    std::size_t n_;
    std::vector<LinearEndo> mats_;
};

// First pair (g, h) with rho(gh) != rho(g) rho(h), or a non-identity rho(e).
std::optional<std::pair<GroupIndex, GroupIndex>> representation_defect(const Group& g, const Representation& rho);

Poly group_act(const Representation& rho, GroupIndex g, const Poly& p);

}  // namespace hqdeform
