#include "jdeform/scalar.hpp"

#include <ostream>
#include <regex>

namespace jdeform {

Scalar::Scalar(long num, long den) {
  if (den == 0) throw ParseError("zero denominator");
  re_ = mpq_class(num, den);
  re_.canonicalize();
}

namespace {

// -?[0-9]+(/[1-9][0-9]*)?
mpq_class parse_fraction(const std::string& text) {
  static const std::regex grammar("-?[0-9]+(/[1-9][0-9]*)?");
  if (!std::regex_match(text, grammar)) {
    throw ParseError("malformed fraction \"" + text + "\"");
  }
  mpq_class q(text, 10);
  q.canonicalize();
  return q;
}

}  // namespace

Scalar Scalar::parse(std::string_view text, Field field) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty scalar");
  if (s.size() >= 2 && s.substr(s.size() - 2) == "*i") {
    if (field == Field::Q) {
      throw ParseError("imaginary part in \"" + s + "\" but field is q");
    }
    std::string body = s.substr(0, s.size() - 2);
    // Split at the last sign that is not the leading one.
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
      if (body[k] == '+' || body[k] == '-') {
        split = k;
        break;
      }
    }
    if (split == std::string::npos) return Scalar(mpq_class(0), parse_fraction(body));
    std::string re = body.substr(0, split);
    std::string im = body.substr(split + (body[split] == '+' ? 1 : 0));
    return Scalar(parse_fraction(re), parse_fraction(im));
  }
  return Scalar(parse_fraction(s));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (is_real()) return Scalar(mpq_class(1) / re_);
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (!o.is_real()) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (!o.is_real()) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_real()) {
    if (sgn(o.re_) == 0) throw std::domain_error("division by zero");
    re_ /= o.re_;
    if (!is_real()) im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string Scalar::str() const {
  if (is_real()) return re_.get_str();
  std::string im = im_.get_str() + "*i";
  if (sgn(re_) == 0) return im;
  return re_.get_str() + (sgn(im_) > 0 ? "+" : "") + im;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Scalar(mpq_class(f));
}

}  // namespace jdeform
