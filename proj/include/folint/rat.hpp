#ifndef FOLINT_RAT_HPP
#define FOLINT_RAT_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "folint/errors.hpp"

namespace folint {

// Exact rational coefficient. Always reduced, denominator >= 1, zero is 0/1.
// Arbitrary-precision storage is delegated to GMP.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}  // NOLINT: implicit by design, coefficients read naturally
    Rat(long num, long den) : v_(num, den) { normalize_(); }
    Rat(const mpz_class& num, const mpz_class& den) : v_(num, den) { normalize_(); }
    explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    // Accepts "7", "-7", "3/2"; whitespace is not tolerated.
    static Rat from_string(std::string_view s);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat abs() const { return Rat(mpq_class(::abs(v_))); }
    Rat inverse() const;
    // Integer power; negative exponents require a nonzero base.
    Rat pow(long e) const;

    double to_double() const { return v_.get_d(); }

    // "3/2" for non-integers, plain "3" otherwise.
    std::string str() const;

private:
    void normalize_() {
        if (v_.get_den() == 0) throw structural_error("rational with zero denominator");
        v_.canonicalize();
    }
    mpq_class v_;
};

inline Rat Rat::from_string(std::string_view s) {
    if (s.empty()) throw structural_error("empty rational literal");
    mpq_class q;
    if (q.set_str(std::string(s), 10) != 0)
        throw structural_error("bad rational literal: " + std::string(s));
    if (q.get_den() == 0) throw structural_error("rational with zero denominator: " + std::string(s));
    q.canonicalize();
    return Rat(std::move(q));
}

inline Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw structural_error("division by zero rational");
    v_ /= o.v_;
    return *this;
}

inline Rat Rat::inverse() const {
    if (is_zero()) throw structural_error("inverse of zero");
    return Rat(mpq_class(1) / v_);
}

inline Rat Rat::pow(long e) const {
    if (e == 0) return Rat(1);
    bool neg = e < 0;
    unsigned long k = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), k);
    Rat r(n, d);
    return neg ? r.inverse() : r;
}

inline std::string Rat::str() const {
    std::string s = v_.get_num().get_str();
    if (!is_integer()) s += "/" + v_.get_den().get_str();
    return s;
}

}  // namespace folint

#endif
