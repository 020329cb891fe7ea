#include "sqtile/rational.hpp"

#include <stdexcept>

namespace sqtile {

Rat::Rat(long n, long d) : Rat(mpz_class(n), mpz_class(d)) {}

Rat::Rat(mpz_class n, mpz_class d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    q_ = mpq_class(std::move(n), std::move(d));
    q_.canonicalize();
}

Rat::Rat(mpq_class v) : q_(std::move(v)) {
    q_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    q_ /= o.q_;
    return *this;
}

bool Rat::is_square() const {
    if (sign() < 0) return false;
    return mpz_perfect_square_p(q_.get_num().get_mpz_t()) &&
           mpz_perfect_square_p(q_.get_den().get_mpz_t());
}

Rat Rat::sqrt() const {
    if (!is_square()) throw std::domain_error("Rat: sqrt of a non-square");
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), q_.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q_.get_den().get_mpz_t());
    return Rat(n, d);
}

mpz_class Rat::floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    return r;
}

namespace {

// Scans an optionally signed integer starting at `pos`.
mpz_class scan_int(std::string_view text, size_t& pos) {
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    size_t digits = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == digits)
        throw std::invalid_argument("Rat: expected digits at position " +
                                    std::to_string(start) + " in \"" + std::string(text) + "\"");
    return mpz_class(std::string(text.substr(start, pos - start)));
}

}  // namespace

Rat Rat::parse(std::string_view text) {
    size_t pos = 0;
    mpz_class n = scan_int(text, pos);
    mpz_class d = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        d = scan_int(text, pos);
        if (d <= 0)
            throw std::invalid_argument("Rat: denominator must be positive in \"" +
                                        std::string(text) + "\"");
    }
    if (pos != text.size())
        throw std::invalid_argument("Rat: trailing characters at position " +
                                    std::to_string(pos) + " in \"" + std::string(text) + "\"");
    return Rat(n, d);
}

std::string Rat::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

}  // namespace sqtile
