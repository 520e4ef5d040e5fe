#include "commlab/ratfun.hpp"

#include "commlab/error.hpp"

namespace commlab {

F2RatFun::F2RatFun(const F2LaurentPoly& p) : den_(F2Poly::one()) {
  auto [shift, poly] = p.split();
  shift_ = shift;
  num_ = std::move(poly);
}

F2RatFun::F2RatFun(const F2Poly& num, const F2Poly& den, std::int64_t shift)
    : shift_(shift), num_(num), den_(den) {
  if (den_.is_zero()) fail(ErrorCode::NotDivisible, "rational function with zero denominator");
  normalize();
}

void F2RatFun::normalize() {
  if (num_.is_zero()) {
    shift_ = 0;
    den_ = F2Poly::one();
    return;
  }
  if (auto low = num_.low_degree(); low > 0) {
    num_ = num_.shifted_down(low);
    shift_ += low;
  }
  if (auto low = den_.low_degree(); low > 0) {
    den_ = den_.shifted_down(low);
    shift_ -= low;
  }
  if (den_.is_one() || num_.is_one()) return;
  auto g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

F2LaurentPoly F2RatFun::to_laurent() const {
  if (!den_.is_one()) fail(ErrorCode::NotDivisible, "rational function is not a Laurent polynomial");
  return F2LaurentPoly::from_poly(num_, shift_);
}

F2RatFun F2RatFun::inverse() const {
  if (is_zero()) fail(ErrorCode::NotDivisible, "inverse of zero rational function");
  F2RatFun out;
  out.shift_ = -shift_;
  out.num_ = den_;
  out.den_ = num_;
  return out;
}

F2RatFun& F2RatFun::operator+=(const F2RatFun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const auto low = std::min(shift_, o.shift_);
  if (den_ == o.den_) {
    num_ = num_.shifted_up(shift_ - low) + o.num_.shifted_up(o.shift_ - low);
  } else {
    num_ = (num_ * o.den_).shifted_up(shift_ - low) + (o.num_ * den_).shifted_up(o.shift_ - low);
    den_ = den_ * o.den_;
  }
  shift_ = low;
  normalize();
  return *this;
}

F2RatFun& F2RatFun::operator*=(const F2RatFun& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = o;
  // Cross-cancel before multiplying so intermediate degrees stay small.
  F2Poly a = num_, b = den_, c = o.num_, d = o.den_;
  if (!a.is_one() && !d.is_one()) {
    auto g = gcd(a, d);
    if (!g.is_one()) { a = a / g; d = d / g; }
  }
  if (!c.is_one() && !b.is_one()) {
    auto g = gcd(c, b);
    if (!g.is_one()) { c = c / g; b = b / g; }
  }
  num_ = a * c;
  den_ = b * d;
  shift_ += o.shift_;
  return *this;
}

F2RatFun F2RatFun::inverted() const {
  if (is_zero()) return *this;
  // p(1/x) = x^-deg(p) * rev(p)
  return F2RatFun(num_.reversed(), den_.reversed(), -shift_ - num_.degree() + den_.degree());
}

F2RatFun F2RatFun::stretched(std::int64_t k) const {
  if (is_zero() || k == 1) return *this;
  return F2RatFun(num_.stretched(k), den_.stretched(k), shift_ * k);
}

namespace {

std::string wrap(const std::string& s) {
  return s.find('+') == std::string::npos ? s : "(" + s + ")";
}

std::string_view strip_parens(std::string_view s) {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return s.substr(1, s.size() - 2);
  return s;
}

}  // namespace

std::string to_string(const F2RatFun& f, char var) {
  auto num = to_string(F2LaurentPoly::from_poly(f.num(), f.shift()), var);
  if (f.den().is_one()) return num;
  return wrap(num) + "/" + wrap(to_string(F2LaurentPoly::from_poly(f.den()), var));
}

F2RatFun parse_ratfun(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t' && c != '\n') s += c;
  // The only '/' allowed is the top-level fraction bar.
  auto bar = s.find('/');
  if (bar == std::string::npos) return F2RatFun(parse_laurent(strip_parens(s)));
  auto num = parse_laurent(strip_parens(std::string_view(s).substr(0, bar)));
  auto den = parse_laurent(strip_parens(std::string_view(s).substr(bar + 1)));
  if (den.is_zero()) fail(ErrorCode::ParseError, "zero denominator in '" + s + "'");
  return F2RatFun(num) / F2RatFun(den);
}

}  // namespace commlab
