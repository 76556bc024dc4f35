#include "abeltrace/rational.hpp"

#include "abeltrace/errors.hpp"

#include <cctype>

namespace abeltrace {

Rational::Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw ZeroDegree("rational with zero denominator");
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ZeroDegree("division of rational by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::from_string(const std::string& text) {
    // mpq_set_str is permissive about whitespace; validate the shape first.
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto slash = text.find('/');
    bool ok = false;
    if (slash == std::string::npos) {
        ok = is_int(text);
    } else {
        ok = is_int(text.substr(0, slash)) && is_int(text.substr(slash + 1));
    }
    mpq_class q;
    if (!ok || q.set_str(text, 10) != 0)
        throw SyntaxError("malformed rational literal '" + text + "'");
    if (q.get_den() == 0)
        throw SyntaxError("zero denominator in rational literal '" + text + "'");
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::pow(unsigned e) const {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), e);
    mpq_class r(num, den);
    r.canonicalize();
    return Rational(std::move(r));
}

Rational Rational::inverse() const {
    if (is_zero()) throw ZeroDegree("inverse of zero rational");
    return Rational(mpq_class(1) / q_);
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_str();
}

} // namespace abeltrace
