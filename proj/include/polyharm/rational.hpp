#ifndef POLYHARM_RATIONAL_HPP
#define POLYHARM_RATIONAL_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace polyharm {

/// Exact complex number with arbitrary-precision rational real and
/// imaginary parts. Backed by GMP; both parts are kept canonical
/// (lowest terms, positive denominator) at all times.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long n) : re_(n), im_(0) {}         // NOLINT: implicit by design
    GaussianRational(long num, long den) : re_(make_ratio(num, den)), im_(0) {}
    GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational imaginary_unit() { return GaussianRational(mpq_class(0), mpq_class(1)); }

    /// Parses "num" or "num/den" (den > 0 after canonicalization).
    static GaussianRational from_string(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw std::invalid_argument("not a rational literal: '" + s + "'");
        q.canonicalize();
        return GaussianRational(std::move(q), mpq_class(0));
    }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
        mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
        mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
        mpq_class i = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Strict total order, lexicographic on (re, im). Used only for
    /// deterministic term ordering, not as a numeric comparison of
    /// complex values.
    static int cmp(const GaussianRational& a, const GaussianRational& b) {
        int c = ::cmp(a.re_, b.re_);
        if (c != 0) return c;
        return ::cmp(a.im_, b.im_);
    }
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) { return cmp(a, b) < 0; }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    /// "a/b" for real values, "a/b+c/di" in general; exact round trip.
    std::string str() const {
        if (is_real()) return re_.get_str();
        std::string s = re_.get_str();
        if (sgn(im_) >= 0) s += "+";
        return s + im_.get_str() + "i";
    }

private:
    static mpq_class make_ratio(long num, long den) {
        if (den == 0) throw std::domain_error("GaussianRational: zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }

    mpq_class re_;
    mpq_class im_;
};

inline GaussianRational factorial_ratio(unsigned long n, unsigned long k) {
    // n! / k! for n >= k, exact
    mpz_class acc(1);
    for (unsigned long v = k + 1; v <= n; ++v) acc *= v;
    return GaussianRational(mpq_class(acc), mpq_class(0));
}

} // namespace polyharm

#endif
