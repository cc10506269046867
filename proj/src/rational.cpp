#include "ballq/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ballq {

namespace {

bool valid_integer_text(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!valid_integer_text(num_text)) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    if (slash == std::string_view::npos) return Rational(parse_integer(num_text));
    const auto den_text = text.substr(slash + 1);
    if (!valid_integer_text(den_text) || den_text[0] == '-' || den_text[0] == '+') {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    const Integer den = parse_integer(den_text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(num_text), den);
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

long Rational::to_long() const {
    if (!is_integer()) throw std::domain_error("not an integer: " + str());
    if (!value_.get_num().fits_slong_p()) throw std::domain_error("integer out of range: " + str());
    return value_.get_num().get_si();
}

Rational Rational::abs() const {
    Rational r;
    r.value_ = ::abs(value_);
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

bool is_perfect_square(const Integer& value) {
    return value >= 0 && mpz_perfect_square_p(value.get_mpz_t()) != 0;
}

}  // namespace ballq
