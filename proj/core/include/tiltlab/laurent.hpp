#pragma once

#include "tiltlab/matrix.hpp"
#include "tiltlab/quiver.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace tiltlab {

using Exponent = std::vector<std::int32_t>;

// Sparse Laurent polynomial with integer coefficients in n variables. Terms
// are keyed by exponent vectors (entries may be negative); zero coefficients
// are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(std::size_t nvars) : n_(nvars) {}

    static LaurentPoly constant(std::size_t nvars, const Integer& c);
    static LaurentPoly variable(std::size_t nvars, std::size_t i);
    static LaurentPoly monomial(const Exponent& e, const Integer& c = 1);

    [[nodiscard]] std::size_t variable_count() const noexcept { return n_; }
    [[nodiscard]] const std::map<Exponent, Integer>& terms() const noexcept { return terms_; }
    [[nodiscard]] std::size_t term_count() const noexcept { return terms_.size(); }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] bool is_monomial() const noexcept { return terms_.size() == 1; }
    [[nodiscard]] Integer coefficient(const Exponent& e) const;

    // Componentwise minimum of the exponents. PreconditionError when zero.
    [[nodiscard]] Exponent min_exponents() const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    [[nodiscard]] LaurentPoly pow(std::int64_t k) const;  // k < 0 only for monomials

    bool operator==(const LaurentPoly&) const = default;
    // Arbitrary but fixed total order, for use as a map key.
    bool operator<(const LaurentPoly& rhs) const;

private:
    void add_term(const Exponent& e, const Integer& c);
    void same_ring(const LaurentPoly& rhs) const;

    std::size_t n_ = 0;
    std::map<Exponent, Integer> terms_;
};

// Exact quotient a/b in the Laurent ring. Throws InvariantError when b does not divide a.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);
bool divides(const LaurentPoly& b, const LaurentPoly& a);

// Writing v = p / x^d with p a polynomial divisible by no variable, returns d.
// Initial variables give -e_i.
DimVector denominator_vector(const LaurentPoly& v);

// Variable names used for printing and parsing. Numeric vertex ids are not
// valid names, so short quivers fall back to x, y, z and longer ones to x<id>.
std::vector<std::string> default_variable_names(const Quiver& q);

// Canonical form p/q: numerator terms by descending degree then descending
// exponent tuple, denominator the monomial x^d. Examples: "(y+1)/x", "2/x",
// "(xy+yz+x+z)/(xyz)". Multi-character names are joined with '*'.
std::string to_string(const LaurentPoly& v, const std::vector<std::string>& names);

// Parses expressions built from integers, variable names, + - * / ^ and
// parentheses; juxtaposition multiplies. Division must be exact. Throws
// InputError on malformed input.
LaurentPoly parse_laurent(std::string_view text, const std::vector<std::string>& names);

}  // namespace tiltlab
