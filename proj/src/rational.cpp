#include "fol/rational.hpp"

#include "fol/errors.hpp"

namespace fol {

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw Error("division by zero in Q(i)");
    // (a+bi)/(c+di) = (a+bi)(c-di) / (c^2+d^2)
    mpq_class n = o.norm();
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
    mpq_class i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

std::string GaussianRational::str() const {
    auto rat = [](const mpq_class& q) { return q.get_str(); };
    if (is_zero()) return "0";
    if (im_ == 0) return rat(re_);
    std::string imag;
    if (im_ == 1)
        imag = "i";
    else if (im_ == -1)
        imag = "-i";
    else
        imag = rat(im_) + "*i";
    if (re_ == 0) return imag;
    if (im_ > 0) return rat(re_) + "+" + imag;
    return rat(re_) + imag; // imag already carries the minus sign
}

} // namespace fol
