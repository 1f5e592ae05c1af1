#include "pedestal/ring.hpp"

#include <algorithm>
#include <limits>

#include "pedestal/checked.hpp"
#include "pedestal/error.hpp"
#include "pedestal/rpp.hpp"

namespace ped {

Monomial::Monomial(std::vector<int> indices) : indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    if (!indices_.empty() && indices_.front() < 0)
        throw Error(ErrorKind::NegativeEntry, "monomial index is negative");
    for (int i : indices_)
        volume_ = checked_add(volume_, i);
}

Monomial star(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree())
        throw Error(ErrorKind::DegreeMismatch, "star product of monomials of degree " +
                                                   std::to_string(a.degree()) + " and " +
                                                   std::to_string(b.degree()));
    std::vector<int> sum(a.indices());
    for (std::size_t k = 0; k < sum.size(); ++k) {
        int r;
        if (__builtin_add_overflow(sum[k], b.indices()[k], &r))
            throw Error(ErrorKind::Overflow, "monomial index overflows");
        sum[k] = r;
    }
    // Sums of two sorted tuples stay sorted, so the constructor's sort is a no-op.
    return Monomial(std::move(sum));
}

std::int64_t Series::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

void Series::add(const Monomial& m, std::int64_t c) {
    if (m.degree() != degree_)
        throw Error(ErrorKind::DegreeMismatch, "monomial of degree " + std::to_string(m.degree()) +
                                                   " added to series of degree " + std::to_string(degree_));
    if (c == 0 || (truncation_ && m.volume() > *truncation_))
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0)
            terms_.erase(it);
    }
}

std::int64_t Series::total() const {
    std::int64_t t = 0;
    for (const auto& [m, c] : terms_)
        t = checked_add(t, c);
    return t;
}

Series series_star(const Series& u, const Series& v, std::int64_t max_volume) {
    if (u.degree() != v.degree())
        throw Error(ErrorKind::DegreeMismatch, "star product of series of different degree");
    Series out(u.degree(), max_volume);
    for (const auto& [a, ca] : u.terms()) {
        if (a.volume() > max_volume)
            continue;
        for (const auto& [b, cb] : v.terms())
            if (a.volume() + b.volume() <= max_volume)
                out.add(star(a, b), checked_mul(ca, cb));
    }
    return out;
}

UniPoly::UniPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(int degree, std::int64_t c) {
    UniPoly p;
    p.add_term(degree, c);
    return p;
}

UniPoly UniPoly::one_minus_power(int k) {
    UniPoly p = monomial(0, 1);
    p.add_term(k, -1);
    return p;
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

void UniPoly::add_term(int degree, std::int64_t c) {
    if (degree < 0)
        throw Error(ErrorKind::Negative, "negative polynomial degree");
    if (static_cast<std::size_t>(degree) >= coeffs_.size())
        coeffs_.resize(static_cast<std::size_t>(degree) + 1, 0);
    coeffs_[degree] = checked_add(coeffs_[degree], c);
    trim();
}

UniPoly UniPoly::truncated(int max_degree) const {
    if (max_degree < 0)
        return {};
    std::vector<std::int64_t> c(coeffs_.begin(),
                                coeffs_.begin() + std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(coeffs_.size()),
                                                                           max_degree + 1));
    return UniPoly(std::move(c));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<std::int64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = checked_add(a[k], b[k]);
    return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] = checked_add(c[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    return UniPoly(std::move(c));
}

UniPoly principal_specialization(const Series& u) {
    UniPoly p;
    for (const auto& [m, c] : u.terms()) {
        if (m.volume() > std::numeric_limits<int>::max())
            throw Error(ErrorKind::Overflow, "monomial volume too large to specialize");
        p.add_term(static_cast<int>(m.volume()), c);
    }
    return p;
}

Series bar_s_row(int degree, std::int64_t max_volume) {
    Series out(degree, max_volume);
    if (max_volume < 0)
        return out;
    // Non-decreasing tuples filled from the right: the last index is the largest.
    std::vector<int> idx(static_cast<std::size_t>(degree), 0);
    auto rec = [&](auto&& self, int pos, int cap, std::int64_t budget) -> void {
        if (pos < 0) {
            out.add(Monomial(idx));
            return;
        }
        for (int v = 0; v <= cap && v <= budget; ++v) {
            idx[pos] = v;
            self(self, pos - 1, v, budget - v);
        }
        idx[pos] = 0;
    };
    const int cap = static_cast<int>(std::min<std::int64_t>(max_volume, std::numeric_limits<int>::max()));
    rec(rec, degree - 1, cap, max_volume);
    return out;
}

Series bar_schur(const Poset& poset, std::int64_t max_volume) {
    Series out(poset.size(), max_volume);
    if (max_volume < 0)
        return out;
    const int bound = static_cast<int>(std::min<std::int64_t>(max_volume, std::numeric_limits<int>::max()));
    for_each_rpp(poset, bound, [&](std::span<const int> values) {
        out.add(Monomial(std::vector<int>(values.begin(), values.end())));
    });
    return out;
}

Series bar_schur(const Partition& shape, std::int64_t max_volume) {
    return bar_schur(young_poset(shape), max_volume);
}

Series schur(const Partition& shape, int max_entry) {
    Series out(shape.size());
    for_each_column_strict(shape, max_entry, [&](std::span<const int> values) {
        out.add(Monomial(std::vector<int>(values.begin(), values.end())));
    });
    return out;
}

std::string to_text(const Monomial& m) {
    if (m.degree() == 0)
        return "1";
    std::string s;
    const auto& idx = m.indices();
    for (std::size_t k = 0; k < idx.size();) {
        std::size_t run = k;
        while (run < idx.size() && idx[run] == idx[k])
            ++run;
        if (!s.empty())
            s += '*';
        s += 'x' + std::to_string(idx[k]);
        if (run - k > 1)
            s += '^' + std::to_string(run - k);
        k = run;
    }
    return s;
}

namespace {

std::string join_terms(const std::vector<std::pair<std::int64_t, std::string>>& terms) {
    if (terms.empty())
        return "0";
    std::string s;
    for (const auto& [c, body] : terms) {
        const std::int64_t mag = c < 0 ? -c : c;
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        if (body == "1")
            s += std::to_string(mag);
        else if (mag == 1)
            s += body;
        else
            s += std::to_string(mag) + '*' + body;
    }
    return s;
}

} // namespace

std::string to_text(const Series& u) {
    std::vector<std::pair<std::int64_t, std::string>> terms;
    for (const auto& [m, c] : u.terms())
        terms.emplace_back(c, to_text(m));
    return join_terms(terms);
}

std::string to_text(const UniPoly& p) {
    std::vector<std::pair<std::int64_t, std::string>> terms;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        if (p.coeffs()[k] == 0)
            continue;
        std::string body = k == 0 ? "1" : k == 1 ? "x" : "x^" + std::to_string(k);
        terms.emplace_back(p.coeffs()[k], body);
    }
    return join_terms(terms);
}

} // namespace ped
