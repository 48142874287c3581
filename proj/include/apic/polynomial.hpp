#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "apic/errors.hpp"
#include "apic/numeric.hpp"

// Exact polynomial arithmetic over Q in one and two variables: just enough
// for blow-ups of plane curve germs, Newton polygon bookkeeping and
// squarefreeness checks. Everything is dense-in-degree or sparse-by-monomial;
// germs stay tiny, so simplicity wins over asymptotics.
namespace apic::poly {

// ---------------------------------------------------------------------------
// univariate

class Poly1 {
public:
    Poly1() = default;
    explicit Poly1(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly1 constant(const Rational& v) { return Poly1(std::vector<Rational>{v}); }

    static Poly1 monomial(std::size_t deg, const Rational& v) {
        std::vector<Rational> c(deg + 1);
        c[deg] = v;
        return Poly1(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    long long degree() const { return static_cast<long long>(c_.size()) - 1; }

    const Rational& operator[](std::size_t i) const {
        static const Rational zero(0);
        return i < c_.size() ? c_[i] : zero;
    }

    const std::vector<Rational>& coeffs() const { return c_; }

    Poly1 operator+(const Poly1& o) const {
        std::vector<Rational> out(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*this)[i] + o[i];
        return Poly1(std::move(out));
    }

    Poly1 operator-(const Poly1& o) const {
        std::vector<Rational> out(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*this)[i] - o[i];
        return Poly1(std::move(out));
    }

    Poly1 operator*(const Poly1& o) const {
        if (is_zero() || o.is_zero()) return Poly1();
        std::vector<Rational> out(c_.size() + o.c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
        }
        return Poly1(std::move(out));
    }

    Poly1 operator*(const Rational& v) const {
        std::vector<Rational> out = c_;
        for (auto& e : out) e *= v;
        return Poly1(std::move(out));
    }

    Poly1 operator-() const { return (*this) * Rational(-1); }

    bool operator==(const Poly1& o) const = default;

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = c_.size(); i > 0; --i) acc = acc * x + c_[i - 1];
        return acc;
    }

    Poly1 derivative() const {
        if (c_.size() <= 1) return Poly1();
        std::vector<Rational> out(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(i);
        return Poly1(std::move(out));
    }

    Poly1 monic() const {
        if (is_zero()) return *this;
        return (*this) * (Rational(1) / c_.back());
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

// quotient and remainder over the field Q
inline std::pair<Poly1, Poly1> divmod(const Poly1& a, const Poly1& b) {
    if (b.is_zero()) throw invalid_argument_error("polynomial division by zero");
    std::vector<Rational> rem(a.coeffs());
    const long long db = b.degree();
    if (a.degree() < db) return {Poly1(), a};
    std::vector<Rational> quo(a.degree() - db + 1);
    const Rational lead = b[static_cast<std::size_t>(db)];
    for (long long i = a.degree(); i >= db; --i) {
        Rational q = rem[static_cast<std::size_t>(i)] / lead;
        if (q == 0) continue;
        quo[static_cast<std::size_t>(i - db)] = q;
        for (long long j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= q * b[static_cast<std::size_t>(j)];
    }
    return {Poly1(std::move(quo)), Poly1(std::move(rem))};
}

inline Poly1 gcd(Poly1 a, Poly1 b) {
    while (!b.is_zero()) {
        Poly1 r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline bool is_squarefree(const Poly1& p) {
    if (p.degree() <= 1) return true;
    return gcd(p, p.derivative()).degree() == 0;
}

// Yun's algorithm: p = prod part[i]^(i+1) with the parts squarefree and
// pairwise coprime. Characteristic zero only.
inline std::vector<Poly1> squarefree_decomposition(const Poly1& p) {
    std::vector<Poly1> parts;
    if (p.degree() <= 0) return parts;
    Poly1 g = gcd(p, p.derivative());
    Poly1 w = divmod(p, g).first;
    Poly1 y = divmod(p.derivative(), g).first;
    while (w.degree() > 0) {
        Poly1 z = y - w.derivative();
        Poly1 s = gcd(w, z);
        parts.push_back(s.monic());
        w = divmod(w, s).first;
        y = divmod(z, s).first;
    }
    return parts;
}

// All rational roots with multiplicities, by the rational root theorem on a
// primitive integer model plus repeated exact division. The divisor search is
// trial division, so reject absurdly large constant terms outright.
inline std::vector<std::pair<Rational, std::size_t>> rational_roots(Poly1 p) {
    std::vector<std::pair<Rational, std::size_t>> roots;
    if (p.degree() <= 0) return roots;
    std::size_t at_zero = 0;
    while (p[0] == 0) {
        std::vector<Rational> shifted(p.coeffs().begin() + 1, p.coeffs().end());
        p = Poly1(std::move(shifted));
        ++at_zero;
    }
    if (at_zero > 0) roots.emplace_back(Rational(0), at_zero);
    if (p.degree() < 1) return roots;

    BigInt scale = 1;
    for (const auto& c : p.coeffs()) scale = big_lcm(scale, denominator(c));
    std::vector<BigInt> ic;
    for (const auto& c : p.coeffs()) ic.push_back(numerator(c * Rational(scale)));
    BigInt content = 0;
    for (const auto& c : ic) content = big_gcd(content, c);
    for (auto& c : ic) c /= content;

    const BigInt a0 = big_abs(ic.front());
    const BigInt an = big_abs(ic.back());
    static const BigInt divisor_cap = BigInt("1000000000000");
    if (a0 > divisor_cap || an > divisor_cap)
        throw invalid_argument_error("coefficients too large for exact root search");

    auto divisors = [](const BigInt& n) {
        std::vector<BigInt> out;
        for (BigInt d = 1; d * d <= n; ++d)
            if (n % d == 0) {
                out.push_back(d);
                if (d * d != n) out.push_back(n / d);
            }
        return out;
    };
    std::vector<std::pair<Rational, std::size_t>> found;
    for (const BigInt& num : divisors(a0))
        for (const BigInt& den : divisors(an)) {
            if (big_gcd(num, den) != 1) continue;
            for (int sign : {1, -1}) {
                Rational cand(sign * num, den);
                if (p.eval(cand) != 0) continue;
                std::size_t mult = 0;
                Poly1 factor(std::vector<Rational>{-cand, Rational(1)});
                for (;;) {
                    auto [q, r] = divmod(p, factor);
                    if (!r.is_zero()) break;
                    p = q;
                    ++mult;
                }
                found.emplace_back(cand, mult);
            }
        }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    roots.insert(roots.end(), found.begin(), found.end());
    return roots;
}

// ---------------------------------------------------------------------------
// bivariate

using Monomial = std::pair<long long, long long>;  // (x exponent, y exponent)

class Poly2 {
public:
    Poly2() = default;

    static Poly2 constant(const Rational& v) {
        Poly2 p;
        p.set(0, 0, v);
        return p;
    }

    static Poly2 variable_x() {
        Poly2 p;
        p.set(1, 0, Rational(1));
        return p;
    }

    static Poly2 variable_y() {
        Poly2 p;
        p.set(0, 1, Rational(1));
        return p;
    }

    bool is_zero() const { return m_.empty(); }

    const std::map<Monomial, Rational>& terms() const { return m_; }

    Rational coeff(long long i, long long j) const {
        auto it = m_.find({i, j});
        return it == m_.end() ? Rational(0) : it->second;
    }

    void set(long long i, long long j, const Rational& v) {
        if (i < 0 || j < 0) throw invalid_argument_error("negative exponent");
        if (v == 0)
            m_.erase({i, j});
        else
            m_[{i, j}] = v;
    }

    void add_term(long long i, long long j, const Rational& v) {
        auto it = m_.find({i, j});
        Rational sum = (it == m_.end() ? Rational(0) : it->second) + v;
        set(i, j, sum);
    }

    long long total_degree() const {
        long long d = -1;
        for (const auto& [mono, c] : m_) d = std::max(d, mono.first + mono.second);
        return d;
    }

    // smallest total degree of a monomial; the multiplicity of the germ
    long long order() const {
        long long d = -1;
        for (const auto& [mono, c] : m_) {
            long long t = mono.first + mono.second;
            if (d < 0 || t < d) d = t;
        }
        return d;
    }

    Poly2 operator+(const Poly2& o) const {
        Poly2 out = *this;
        for (const auto& [mono, c] : o.m_) out.add_term(mono.first, mono.second, c);
        return out;
    }

    Poly2 operator-(const Poly2& o) const {
        Poly2 out = *this;
        for (const auto& [mono, c] : o.m_) out.add_term(mono.first, mono.second, -c);
        return out;
    }

    Poly2 operator*(const Poly2& o) const {
        Poly2 out;
        for (const auto& [ma, ca] : m_)
            for (const auto& [mb, cb] : o.m_)
                out.add_term(ma.first + mb.first, ma.second + mb.second, ca * cb);
        return out;
    }

    Poly2 operator*(const Rational& v) const {
        Poly2 out;
        if (v == 0) return out;
        for (const auto& [mono, c] : m_) out.m_[mono] = c * v;
        return out;
    }

    Poly2 operator-() const { return (*this) * Rational(-1); }

    Poly2 pow(long long e) const {
        if (e < 0) throw invalid_argument_error("negative exponent");
        Poly2 out = constant(Rational(1));
        Poly2 base = *this;
        while (e > 0) {
            if (e & 1) out = out * base;
            base = base * base;
            e >>= 1;
        }
        return out;
    }

    bool operator==(const Poly2& o) const = default;

    Poly2 dx() const {
        Poly2 out;
        for (const auto& [mono, c] : m_)
            if (mono.first > 0) out.add_term(mono.first - 1, mono.second, c * Rational(mono.first));
        return out;
    }

    Poly2 dy() const {
        Poly2 out;
        for (const auto& [mono, c] : m_)
            if (mono.second > 0) out.add_term(mono.first, mono.second - 1, c * Rational(mono.second));
        return out;
    }

    Rational eval(const Rational& x, const Rational& y) const {
        Rational acc(0);
        for (const auto& [mono, c] : m_)
            acc += c * rat_pow(x, mono.first) * rat_pow(y, mono.second);
        return acc;
    }

    // sum of the monomials of minimal total degree
    Poly2 leading_form() const {
        Poly2 out;
        const long long d = order();
        for (const auto& [mono, c] : m_)
            if (mono.first + mono.second == d) out.m_[mono] = c;
        return out;
    }

    // general substitution x -> px, y -> py
    Poly2 substituted(const Poly2& px, const Poly2& py) const {
        Poly2 out;
        for (const auto& [mono, c] : m_) {
            Poly2 term = px.pow(mono.first) * py.pow(mono.second) * c;
            out = out + term;
        }
        return out;
    }

    // exact division by x^k
    Poly2 shifted_down_x(long long k) const {
        Poly2 out;
        for (const auto& [mono, c] : m_) {
            if (mono.first < k) throw invalid_argument_error("division by x^k is not exact");
            out.m_[{mono.first - k, mono.second}] = c;
        }
        return out;
    }

    std::string str() const {
        if (m_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        // highest total degree first, deterministic
        std::vector<std::pair<Monomial, Rational>> terms(m_.begin(), m_.end());
        std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
            long long da = a.first.first + a.first.second;
            long long db = b.first.first + b.first.second;
            if (da != db) return da > db;
            return a.first > b.first;
        });
        for (const auto& [mono, c] : terms) {
            Rational v = c;
            if (first) {
                if (v < 0) {
                    out << "-";
                    v = -v;
                }
            } else {
                out << (v < 0 ? " - " : " + ");
                if (v < 0) v = -v;
            }
            first = false;
            const bool has_var = mono.first > 0 || mono.second > 0;
            if (v != 1 || !has_var) {
                out << to_string(v);
                if (has_var) out << "*";
            }
            if (mono.first > 0) {
                out << "x";
                if (mono.first > 1) out << "^" << mono.first;
                if (mono.second > 0) out << "*";
            }
            if (mono.second > 0) {
                out << "y";
                if (mono.second > 1) out << "^" << mono.second;
            }
        }
        return out.str();
    }

private:
    std::map<Monomial, Rational> m_;
};

// view as a polynomial in y with Poly1 (in x) coefficients
inline std::vector<Poly1> by_y(const Poly2& p) {
    std::vector<Poly1> out;
    for (const auto& [mono, c] : p.terms()) {
        const auto j = static_cast<std::size_t>(mono.second);
        if (out.size() <= j) out.resize(j + 1);
        std::vector<Rational> cs(out[j].coeffs());
        if (cs.size() <= static_cast<std::size_t>(mono.first))
            cs.resize(mono.first + 1);
        cs[static_cast<std::size_t>(mono.first)] = c;
        out[j] = Poly1(std::move(cs));
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

inline Poly2 from_y_coeffs(const std::vector<Poly1>& cs) {
    Poly2 out;
    for (std::size_t j = 0; j < cs.size(); ++j)
        for (std::size_t i = 0; i < cs[j].coeffs().size(); ++i)
            if (cs[j][i] != 0) out.set(static_cast<long long>(i), static_cast<long long>(j), cs[j][i]);
    return out;
}

namespace detail {

inline Poly1 content_y(const std::vector<Poly1>& cs) {
    Poly1 g;
    for (const auto& c : cs) g = gcd(g, c);
    return g;
}

// pseudo-remainder of a by b in (Q[x])[y]
inline std::vector<Poly1> prem_y(std::vector<Poly1> a, const std::vector<Poly1>& b) {
    const auto db = static_cast<long long>(b.size()) - 1;
    auto da = static_cast<long long>(a.size()) - 1;
    const Poly1& lb = b.back();
    while (da >= db && !a.empty()) {
        Poly1 la = a.back();
        // a := lb * a - la * y^(da-db) * b
        for (auto& c : a) c = c * lb;
        for (long long j = 0; j <= db; ++j)
            a[static_cast<std::size_t>(da - db + j)] =
                a[static_cast<std::size_t>(da - db + j)] - la * b[static_cast<std::size_t>(j)];
        while (!a.empty() && a.back().is_zero()) a.pop_back();
        da = static_cast<long long>(a.size()) - 1;
    }
    return a;
}

}  // namespace detail

// gcd in Q[x, y] via the primitive pseudo-remainder sequence
inline Poly2 gcd2(const Poly2& f, const Poly2& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    std::vector<Poly1> a = by_y(f), b = by_y(g);
    const Poly1 cont = gcd(detail::content_y(a), detail::content_y(b));
    auto primitive = [](std::vector<Poly1> v) {
        Poly1 c = detail::content_y(v);
        for (auto& e : v) e = divmod(e, c).first;
        return v;
    };
    a = primitive(std::move(a));
    b = primitive(std::move(b));
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        std::vector<Poly1> r = detail::prem_y(a, b);
        a = std::move(b);
        if (r.empty()) {
            b.clear();
        } else {
            b = primitive(std::move(r));
        }
    }
    Poly2 pp = from_y_coeffs(a);
    return from_y_coeffs({cont}) * pp;
}

// f has no repeated factor iff gcd(f, f_x, f_y) is constant (char 0)
inline bool is_squarefree(const Poly2& f) {
    Poly2 g = gcd2(gcd2(f, f.dx()), f.dy());
    return g.total_degree() == 0;
}

// ---------------------------------------------------------------------------
// parser for the input grammar: variables x, y; integer or rational literals
// (3, -2/5); operators + - * ^; parentheses. No implicit multiplication.

namespace detail {

class Parser {
public:
    explicit Parser(std::string text) : text_(std::move(text)) {}

    Poly2 parse() {
        Poly2 p = expression();
        skip_space();
        if (pos_ != text_.size())
            throw parse_error("unexpected '" + std::string(1, text_[pos_]) +
                              "' at position " + std::to_string(pos_));
        return p;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Poly2 expression() {
        Poly2 acc = term();
        for (;;) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    Poly2 term() {
        Poly2 acc = factor();
        while (eat('*')) acc = acc * factor();
        // implicit multiplication like "2x" or "x y" is a grammar error
        const char c = peek();
        if (c == 'x' || c == 'y' || std::isdigit(static_cast<unsigned char>(c)) || c == '(')
            throw parse_error("missing operator before '" + std::string(1, c) +
                              "' at position " + std::to_string(pos_));
        return acc;
    }

    Poly2 factor() {
        if (eat('-')) return -factor();
        Poly2 base = atom();
        if (eat('^')) {
            const long long e = integer_literal();
            if (e < 0) throw parse_error("negative exponent");
            return base.pow(e);
        }
        return base;
    }

    Poly2 atom() {
        skip_space();
        if (pos_ >= text_.size()) throw parse_error("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly2 p = expression();
            if (!eat(')')) throw parse_error("missing ')'");
            return p;
        }
        if (c == 'x') {
            ++pos_;
            return Poly2::variable_x();
        }
        if (c == 'y') {
            ++pos_;
            return Poly2::variable_y();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt num = bigint_literal();
            if (eat('/')) {
                BigInt den = bigint_literal();
                if (den == 0) throw parse_error("zero denominator");
                return Poly2::constant(Rational(num, den));
            }
            return Poly2::constant(Rational(num));
        }
        throw parse_error("unexpected '" + std::string(1, c) + "' at position " +
                          std::to_string(pos_));
    }

    BigInt bigint_literal() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw parse_error("expected a number at position " + std::to_string(pos_));
        return BigInt(text_.substr(start, pos_ - start));
    }

    long long integer_literal() {
        bool neg = eat('-');
        BigInt v = bigint_literal();
        return neg ? -static_cast<long long>(v) : static_cast<long long>(v);
    }

    std::string text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Poly2 parse(const std::string& text) { return detail::Parser(text).parse(); }

}  // namespace apic::poly
