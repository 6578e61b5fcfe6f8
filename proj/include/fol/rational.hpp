#ifndef FOL_RATIONAL_HPP
#define FOL_RATIONAL_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace fol {

// Element of Q(i): re + im*i with exact rational parts.
// mpq_class keeps both parts in lowest terms with positive denominator,
// so structural equality of the pair is canonical equality.
class GaussianRational {
  public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long n) : re_(n), im_(0) {}
    GaussianRational(const mpq_class& re) : re_(re), im_(0) { re_.canonicalize(); }
    GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }
    GaussianRational(long num, long den) : re_(num, den), im_(0) { re_.canonicalize(); }

    static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }
    // Exact: every double is a dyadic rational.
    static GaussianRational from_complex(std::complex<double> z) {
        return GaussianRational(mpq_class(z.real()), mpq_class(z.imag()));
    }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }
    GaussianRational conj() const { return GaussianRational(re_, -im_); }
    // |z|^2, a non-negative rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

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
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    // "3", "-5/2", "i", "2*i", "3/2-2*i": valid input for the expression grammar.
    std::string str() const;

  private:
    mpq_class re_, im_;
};

// Point in C^n with exact coordinates.
struct Point {
    std::vector<GaussianRational> coords;

    Point() = default;
    explicit Point(std::vector<GaussianRational> c) : coords(std::move(c)) {}
    size_t size() const { return coords.size(); }
    const GaussianRational& operator[](size_t k) const { return coords[k]; }
    GaussianRational& operator[](size_t k) { return coords[k]; }

    static Point zero(size_t n) { return Point(std::vector<GaussianRational>(n)); }
    friend bool operator==(const Point& a, const Point& b) { return a.coords == b.coords; }
};

} // namespace fol

#endif
