#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pedestal/posets.hpp"
#include "pedestal/shapes.hpp"

namespace ped {

/// Degree-n monomial x_{i_1} x_{i_2} ... x_{i_n}, kept as its sorted index
/// tuple. The same tuple is the exponent vector of y_1^{i_1}...y_n^{i_n},
/// which is what makes the star product a plain componentwise sum.
class Monomial {
public:
    Monomial() = default;
    /// Indices in any order; they are sorted. Throws NegativeEntry.
    explicit Monomial(std::vector<int> indices);
    static Monomial unit(int degree) { return Monomial(std::vector<int>(static_cast<std::size_t>(degree), 0)); }

    const std::vector<int>& indices() const noexcept { return indices_; }
    int degree() const noexcept { return static_cast<int>(indices_.size()); }
    std::int64_t volume() const noexcept { return volume_; }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.indices_ == b.indices_; }
    friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.indices_ <=> b.indices_; }

private:
    std::vector<int> indices_;
    std::int64_t volume_ = 0;
};

/// Componentwise sum of sorted tuples. Throws DegreeMismatch.
Monomial star(const Monomial& a, const Monomial& b);

/// Finite element of R_n with exact int64 coefficients, optionally truncated
/// at a volume bound. Zero coefficients are never stored; iteration is
/// lexicographic on index tuples.
class Series {
public:
    explicit Series(int degree, std::optional<std::int64_t> truncation = std::nullopt)
        : degree_(degree), truncation_(truncation) {}

    int degree() const noexcept { return degree_; }
    const std::optional<std::int64_t>& truncation() const noexcept { return truncation_; }
    const std::map<Monomial, std::int64_t>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::int64_t coefficient(const Monomial& m) const;

    /// Adds c * m. Terms beyond the truncation bound are dropped.
    /// Throws DegreeMismatch or Overflow.
    void add(const Monomial& m, std::int64_t c = 1);

    /// Sum of all coefficients.
    std::int64_t total() const;

    friend bool operator==(const Series& a, const Series& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

private:
    int degree_;
    std::optional<std::int64_t> truncation_;
    std::map<Monomial, std::int64_t> terms_;
};

/// Bilinear star product, dropping volumes > max_volume.
Series series_star(const Series& u, const Series& v, std::int64_t max_volume);

/// Integer polynomial in one variable, ascending coefficients, trailing
/// zeros trimmed.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<std::int64_t> coeffs);
    static UniPoly monomial(int degree, std::int64_t c = 1);
    /// 1 - x^k
    static UniPoly one_minus_power(int k);

    const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
    std::int64_t operator[](std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : 0; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    void add_term(int degree, std::int64_t c);
    /// Drops terms of degree > max_degree.
    UniPoly truncated(int max_degree) const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    void trim();
    std::vector<std::int64_t> coeffs_;
};

/// x_i -> x^i: each term lands on the power equal to its volume.
UniPoly principal_specialization(const Series& u);

/// All monomials of degree n and volume <= max_volume with coefficient 1.
Series bar_s_row(int degree, std::int64_t max_volume);

/// Sum over RPPs of volume <= max_volume of their monomials (sorted values).
Series bar_schur(const Poset& poset, std::int64_t max_volume);
Series bar_schur(const Partition& shape, std::int64_t max_volume);

/// Column-strict fillings with entries <= max_entry: the Schur polynomial
/// in x_0..x_{max_entry}.
Series schur(const Partition& shape, int max_entry);

std::string to_text(const Monomial& m);
std::string to_text(const Series& u);
std::string to_text(const UniPoly& p);

} // namespace ped
