#include "tiltlab/laurent.hpp"

#include "tiltlab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>

namespace tiltlab {

LaurentPoly LaurentPoly::constant(std::size_t nvars, const Integer& c) {
    LaurentPoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw InputError("variable index out of range");
    Exponent e(nvars, 0);
    e[i] = 1;
    return monomial(e);
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const Integer& c) {
    LaurentPoly p(e.size());
    p.add_term(e, c);
    return p;
}

Integer LaurentPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
}

Exponent LaurentPoly::min_exponents() const {
    if (terms_.empty()) throw PreconditionError("the zero polynomial has no denominator");
    Exponent m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < n_; ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

void LaurentPoly::add_term(const Exponent& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentPoly::same_ring(const LaurentPoly& rhs) const {
    if (n_ != rhs.n_) throw InputError("Laurent polynomials in different numbers of variables");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    same_ring(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    same_ring(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.same_ring(b);
    LaurentPoly out(a.n_);
    Exponent e(a.n_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(n_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly LaurentPoly::pow(std::int64_t k) const {
    if (k < 0) {
        if (!is_monomial()) throw PreconditionError("negative powers exist only for monomials");
        const auto& [e, c] = *terms_.begin();
        if (c != 1 && c != -1) throw PreconditionError("monomial with a non-unit coefficient is not invertible");
        Exponent inv(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) inv[i] = -e[i];
        return monomial(inv, c).pow(-k);
    }
    LaurentPoly result = constant(n_, 1);
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

bool LaurentPoly::operator<(const LaurentPoly& rhs) const {
    if (n_ != rhs.n_) return n_ < rhs.n_;
    return std::lexicographical_compare(terms_.begin(), terms_.end(), rhs.terms_.begin(), rhs.terms_.end(),
                                        [](const auto& x, const auto& y) {
                                            if (x.first != y.first) return x.first < y.first;
                                            return cmp(x.second, y.second) < 0;
                                        });
}

namespace {

std::optional<LaurentPoly> try_divide(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw PreconditionError("division by zero");
    const std::size_t n = a.variable_count();
    if (b.variable_count() != n) throw InputError("Laurent polynomials in different numbers of variables");
    LaurentPoly q(n);
    if (a.is_zero()) return q;

    // An exact quotient's exponents lie in the box [min a - min b, max a - max b].
    Exponent lo(n), hi(n);
    const Exponent amin = a.min_exponents(), bmin = b.min_exponents();
    Exponent amax = amin, bmax = bmin;
    for (const auto& [e, c] : a.terms())
        for (std::size_t i = 0; i < n; ++i) amax[i] = std::max(amax[i], e[i]);
    for (const auto& [e, c] : b.terms())
        for (std::size_t i = 0; i < n; ++i) bmax[i] = std::max(bmax[i], e[i]);
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = amin[i] - bmin[i];
        hi[i] = amax[i] - bmax[i];
        if (lo[i] > hi[i]) return std::nullopt;
    }

    const auto& [lead_b, lead_c] = *b.terms().rbegin();
    LaurentPoly r = a;
    Exponent e(n);
    while (!r.is_zero()) {
        const auto& [lead_r, lead_rc] = *r.terms().rbegin();
        for (std::size_t i = 0; i < n; ++i) {
            e[i] = lead_r[i] - lead_b[i];
            if (e[i] < lo[i] || e[i] > hi[i]) return std::nullopt;
        }
        if (!mpz_divisible_p(lead_rc.get_mpz_t(), lead_c.get_mpz_t())) return std::nullopt;
        const LaurentPoly t = LaurentPoly::monomial(e, Integer(lead_rc / lead_c));
        q += t;
        r -= t * b;
    }
    return q;
}

}  // namespace

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
    auto q = try_divide(a, b);
    if (!q) throw_invariant("Laurent division is not exact");
    return *q;
}

bool divides(const LaurentPoly& b, const LaurentPoly& a) { return try_divide(a, b).has_value(); }

DimVector denominator_vector(const LaurentPoly& v) {
    const Exponent m = v.min_exponents();
    DimVector d(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) d[i] = -static_cast<DimVector::value_type>(m[i]);
    return d;
}

namespace {

bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; });
}

}  // namespace

std::vector<std::string> default_variable_names(const Quiver& q) {
    const auto& ids = q.vertices();
    if (std::all_of(ids.begin(), ids.end(), is_identifier)) return ids;
    std::vector<std::string> names;
    if (ids.size() <= 3) {
        for (std::size_t i = 0; i < ids.size(); ++i) names.emplace_back(1, static_cast<char>('x' + i));
        return names;
    }
    for (std::size_t i = 0; i < ids.size(); ++i)
        names.push_back(is_identifier("x" + ids[i]) ? "x" + ids[i] : "x" + std::to_string(i + 1));
    return names;
}

namespace {

bool multi_char(const std::vector<std::string>& names) {
    return std::any_of(names.begin(), names.end(), [](const std::string& s) { return s.size() != 1; });
}

// Monomial with non-negative exponents; empty string for the constant monomial.
std::string monomial_string(const Exponent& e, const std::vector<std::string>& names, bool star,
                            std::size_t* factors = nullptr) {
    std::string out;
    std::size_t count = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (count++ && star) out += '*';
        out += names[i];
        if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
    if (factors) *factors = count;
    return out;
}

std::int64_t degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), std::int64_t{0}); }

}  // namespace

std::string to_string(const LaurentPoly& v, const std::vector<std::string>& names) {
    const std::size_t n = v.variable_count();
    if (names.size() != n) throw InputError("one name per variable is required");
    if (v.is_zero()) return "0";
    const bool star = multi_char(names);

    Exponent den(n, 0);
    const Exponent m = v.min_exponents();
    for (std::size_t i = 0; i < n; ++i) den[i] = std::max(0, -m[i]);

    std::vector<std::pair<Exponent, Integer>> num;
    for (const auto& [e, c] : v.terms()) {
        Exponent s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = e[i] + den[i];
        num.emplace_back(std::move(s), c);
    }
    std::sort(num.begin(), num.end(), [](const auto& a, const auto& b) {
        const auto da = degree(a.first), db = degree(b.first);
        if (da != db) return da > db;
        return a.first > b.first;
    });

    std::string top;
    for (std::size_t t = 0; t < num.size(); ++t) {
        const auto& [e, c] = num[t];
        const std::string mono = monomial_string(e, names, star);
        if (sgn(c) < 0)
            top += '-';
        else if (t)
            top += '+';
        const Integer a = abs(c);
        if (mono.empty()) {
            top += a.get_str();
        } else {
            if (a != 1) top += a.get_str() + (star ? "*" : "");
            top += mono;
        }
    }
    std::size_t factors = 0;
    const std::string bottom = monomial_string(den, names, star, &factors);
    if (bottom.empty()) return top;
    if (num.size() > 1) top = "(" + top + ")";
    return top + "/" + (factors > 1 ? "(" + bottom + ")" : bottom);
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& names)
        : text_(text), names_(names), single_(!multi_char(names)) {}

    LaurentPoly parse() {
        LaurentPoly v = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw InputError("cannot parse Laurent polynomial '" + std::string(text_) + "': " + why);
    }
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    static bool starts_factor(char ch) {
        return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '(';
    }

    LaurentPoly expr() {
        LaurentPoly acc(names_.size());
        bool first = true;
        while (true) {
            char ch = peek();
            int sign = 1;
            if (ch == '+' || ch == '-') {
                sign = ch == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                break;
            }
            LaurentPoly t = term();
            if (sign < 0)
                acc -= t;
            else
                acc += t;
            first = false;
        }
        return acc;
    }

    LaurentPoly term() {
        LaurentPoly acc = power();
        while (true) {
            const char ch = peek();
            if (ch == '*') {
                ++pos_;
                acc = acc * power();
            } else if (ch == '/') {
                ++pos_;
                const LaurentPoly d = power();
                if (d.is_zero()) fail("division by zero");
                auto q = divides(d, acc) ? std::optional(exact_divide(acc, d)) : std::nullopt;
                if (!q) fail("division is not exact");
                acc = *q;
            } else if (starts_factor(ch)) {
                acc = acc * power();
            } else {
                return acc;
            }
        }
    }

    LaurentPoly power() {
        LaurentPoly base = atom();
        if (peek() != '^') return base;
        ++pos_;
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        skip();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("exponent expected");
        const std::int64_t k = std::stoll(std::string(text_.substr(start, pos_ - start)));
        try {
            return base.pow(negative ? -k : k);
        } catch (const PreconditionError& e) {
            fail(e.what());
        }
    }

    LaurentPoly atom() {
        const char ch = peek();
        const std::size_t n = names_.size();
        if (ch == '(') {
            ++pos_;
            LaurentPoly v = expr();
            if (peek() != ')') fail("')' expected");
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return LaurentPoly::constant(n, Integer(std::string(text_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            const std::size_t start = pos_;
            if (single_) {
                ++pos_;
            } else {
                while (pos_ < text_.size() &&
                       (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                    ++pos_;
            }
            const std::string name(text_.substr(start, pos_ - start));
            auto it = std::find(names_.begin(), names_.end(), name);
            if (it == names_.end()) fail("unknown variable '" + name + "'");
            return LaurentPoly::variable(n, static_cast<std::size_t>(it - names_.begin()));
        }
        fail(ch ? "unexpected '" + std::string(1, ch) + "'" : "unexpected end of input");
    }

    std::string_view text_;
    const std::vector<std::string>& names_;
    bool single_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, const std::vector<std::string>& names) {
    return Parser(text, names).parse();
}

}  // namespace tiltlab
