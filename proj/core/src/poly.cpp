#include "bgmod/poly.hpp"

#include "bgmod/f2.hpp"

#include <algorithm>
#include <sstream>

namespace bgmod {

Monomial Monomial::generator(int k, std::uint32_t exp) {
    if (k < 0) throw std::invalid_argument("Monomial::generator: negative index");
    std::vector<std::uint32_t> e(std::size_t(k) + 1, 0);
    e.back() = exp;
    return Monomial(std::move(e));
}

std::uint64_t Monomial::degree() const {
    std::uint64_t d = 0;
    for (auto x : e_) d += x;
    return d;
}

std::uint64_t Monomial::weight() const {
    std::uint64_t w = 0;
    for (std::size_t k = 0; k < e_.size(); ++k) w += std::uint64_t(e_[k]) << k;
    return w;
}

Monomial Monomial::operator*(const Monomial& o) const {
    std::vector<std::uint32_t> e(std::max(e_.size(), o.e_.size()), 0);
    for (std::size_t k = 0; k < e_.size(); ++k) e[k] += e_[k];
    for (std::size_t k = 0; k < o.e_.size(); ++k) e[k] += o.e_[k];
    return Monomial(std::move(e));
}

Monomial Monomial::divide_by_gen(int k) const {
    if (exp(k) == 0) throw std::invalid_argument("Monomial::divide_by_gen: exponent is zero");
    auto e = e_;
    --e[std::size_t(k)];
    return Monomial(std::move(e));
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
    auto da = degree(), db = o.degree();
    if (da != db) return da <=> db;
    std::size_t n = std::max(e_.size(), o.e_.size());
    for (std::size_t k = 0; k < n; ++k) {
        std::uint32_t a = k < e_.size() ? e_[k] : 0;
        std::uint32_t b = k < o.e_.size() ? o.e_[k] : 0;
        if (a != b) return a <=> b;
    }
    return std::strong_ordering::equal;
}

std::string Monomial::str() const {
    if (e_.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < e_.size(); ++k) {
        if (!e_[k]) continue;
        if (!first) out << '*';
        first = false;
        out << 'x' << k;
        if (e_[k] > 1) out << '^' << e_[k];
    }
    return out.str();
}

Monomial Monomial::parse(const std::string& s) {
    std::string t;
    for (char c : s) if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw std::invalid_argument("Monomial::parse: empty input");
    if (t == "1") return Monomial();
    std::vector<std::uint32_t> e;
    std::size_t pos = 0;
    while (pos < t.size()) {
        if (t[pos] != 'x') throw std::invalid_argument("Monomial::parse: expected 'x' in '" + s + "'");
        ++pos;
        std::size_t q = pos;
        while (q < t.size() && isdigit(static_cast<unsigned char>(t[q]))) ++q;
        if (q == pos) throw std::invalid_argument("Monomial::parse: missing index in '" + s + "'");
        std::size_t k = std::stoul(t.substr(pos, q - pos));
        pos = q;
        std::uint32_t exp = 1;
        if (pos < t.size() && t[pos] == '^') {
            ++pos;
            q = pos;
            while (q < t.size() && isdigit(static_cast<unsigned char>(t[q]))) ++q;
            if (q == pos) throw std::invalid_argument("Monomial::parse: missing exponent in '" + s + "'");
            exp = std::uint32_t(std::stoul(t.substr(pos, q - pos)));
            pos = q;
        }
        if (pos < t.size()) {
            if (t[pos] != '*') throw std::invalid_argument("Monomial::parse: expected '*' in '" + s + "'");
            ++pos;
        }
        if (e.size() < k + 1) e.resize(k + 1, 0);
        e[k] += exp;
    }
    return Monomial(std::move(e));
}

Poly Poly::from_terms(std::vector<Monomial> terms) {
    std::sort(terms.begin(), terms.end());
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) & 1) out.push_back(terms[i]);
        i = j;
    }
    Poly p;
    p.t_ = std::move(out);
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    Poly out;
    std::set_symmetric_difference(t_.begin(), t_.end(), o.t_.begin(), o.t_.end(),
                                  std::back_inserter(out.t_));
    return out;
}

Poly Poly::operator*(const Monomial& m) const {
    std::vector<Monomial> terms;
    terms.reserve(t_.size());
    for (const auto& a : t_) terms.push_back(a * m);
    return from_terms(std::move(terms));
}

Poly Poly::operator*(const Poly& o) const {
    std::vector<Monomial> terms;
    terms.reserve(t_.size() * o.t_.size());
    for (const auto& a : t_)
        for (const auto& b : o.t_) terms.push_back(a * b);
    return from_terms(std::move(terms));
}

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < t_.size(); ++i) {
        if (i) s += " + ";
        s += t_[i].str();
    }
    return s;
}

Poly Poly::parse(const std::string& s) {
    std::vector<Monomial> terms;
    std::size_t pos = 0;
    bool saw_zero = false;
    while (pos <= s.size()) {
        std::size_t next = s.find('+', pos);
        std::string part = s.substr(pos, next == std::string::npos ? next : next - pos);
        std::string trimmed;
        for (char c : part) if (!isspace(static_cast<unsigned char>(c))) trimmed += c;
        if (trimmed == "0") saw_zero = true;
        else if (!trimmed.empty()) terms.push_back(Monomial::parse(trimmed));
        else if (!saw_zero) throw std::invalid_argument("Poly::parse: empty term in '" + s + "'");
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return from_terms(std::move(terms));
}

Poly sq_on_power(int k, std::uint32_t e, std::uint32_t j) {
    if (k < 0) throw std::invalid_argument("sq_on_power: negative index");
    if (j > e) return Poly();
    if (k == 0) return j == 0 ? Poly(Monomial::generator(0, e)) : Poly();
    if (!binom_mod2(e, j)) return Poly();
    std::vector<std::uint32_t> exps(std::size_t(k) + 1, 0);
    exps[std::size_t(k)] = e - j;
    exps[std::size_t(k) - 1] += 2 * j;
    return Poly(Monomial(std::move(exps)));
}

std::vector<Poly> sq_table(const Monomial& m) {
    /* Cartan convolution: multiply the per-variable expansions
     * Sq(x_k^e) = sum_j sq_on_power(k,e,j). */
    std::vector<Poly> table{Poly(Monomial())};
    for (int k = 0; k <= m.top_var(); ++k) {
        std::uint32_t e = m.exp(k);
        if (!e) continue;
        std::uint32_t cap = (k == 0) ? 0 : e;
        std::vector<Poly> factor(cap + 1);
        for (std::uint32_t j = 0; j <= cap; ++j) factor[j] = sq_on_power(k, e, j);
        std::vector<Poly> next(table.size() + cap);
        for (std::size_t a = 0; a < table.size(); ++a) {
            if (table[a].is_zero()) continue;
            for (std::uint32_t b = 0; b <= cap; ++b) {
                if (factor[b].is_zero()) continue;
                next[a + b] += table[a] * factor[b];
            }
        }
        table = std::move(next);
    }
    while (!table.empty() && table.back().is_zero()) table.pop_back();
    return table;
}

Poly sq(std::uint32_t i, const Poly& p) {
    Poly out;
    for (const auto& m : p.terms()) {
        auto table = sq_table(m);
        if (i < table.size()) out += table[i];
    }
    return out;
}

static Poly qm_monomial(int m, const Monomial& mono) {
    Poly out;
    for (int k = m + 1; k <= mono.top_var(); ++k) {
        if ((mono.exp(k) & 1) == 0) continue;
        Monomial rest = mono.divide_by_gen(k);
        Monomial image = Monomial::generator(k - m - 1, std::uint32_t(2) << m);
        out += Poly(rest * image);
    }
    return out;
}

Poly qm(int m, const Poly& p) {
    if (m < 0) throw std::invalid_argument("qm: negative index");
    Poly out;
    for (const auto& mono : p.terms()) out += qm_monomial(m, mono);
    return out;
}

Poly qm_via_commutator(int m, const Poly& p) {
    if (m < 0) throw std::invalid_argument("qm_via_commutator: negative index");
    if (m == 0) return sq(1, p);
    std::uint32_t s = std::uint32_t(1) << m;
    return qm_via_commutator(m - 1, sq(s, p)) + sq(s, qm_via_commutator(m - 1, p));
}

static void enumerate_weight(std::uint64_t n, int shift, Monomial acc,
                             std::vector<Monomial>& out) {
    if (n == 0) {
        out.push_back(std::move(acc));
        return;
    }
    /* exponent of x_shift has the parity of n; the rest is a monomial of
     * weight (n - e)/2 in the variables shifted up by one */
    for (std::uint64_t e = n & 1;; e += 2) {
        if (e > n) break;
        Monomial next = acc;
        if (e) next = next * Monomial::generator(shift, std::uint32_t(e));
        enumerate_weight((n - e) / 2, shift + 1, std::move(next), out);
        if (n == e) break;
    }
}

std::vector<Monomial> weight_monomials(std::uint64_t n) {
    std::vector<Monomial> out;
    enumerate_weight(n, 0, Monomial(), out);
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t binary_partition_count(std::uint64_t n) {
    std::vector<std::uint64_t> b(n + 1);
    b[0] = 1;
    for (std::uint64_t k = 1; k <= n; ++k)
        b[k] = (k & 1) ? b[k - 1] : b[k - 1] + b[k / 2];
    return b[n];
}

}  // namespace bgmod
