#include "commlab/laurent.hpp"

#include <algorithm>
#include <charconv>

#include "commlab/error.hpp"

namespace commlab {

F2LaurentPoly::F2LaurentPoly(std::vector<std::int64_t> support) {
  std::sort(support.begin(), support.end());
  // Repeated exponents cancel in pairs.
  for (std::size_t i = 0; i < support.size();) {
    std::size_t j = i;
    while (j < support.size() && support[j] == support[i]) ++j;
    if ((j - i) % 2 == 1) support_.push_back(support[i]);
    i = j;
  }
}

F2LaurentPoly F2LaurentPoly::from_poly(const F2Poly& p, std::int64_t shift) {
  F2LaurentPoly out;
  out.support_ = p.exponents();
  for (auto& e : out.support_) e += shift;
  return out;
}

bool F2LaurentPoly::coeff(std::int64_t e) const {
  return std::binary_search(support_.begin(), support_.end(), e);
}

std::pair<std::int64_t, F2Poly> F2LaurentPoly::split() const {
  if (support_.empty()) return {0, F2Poly{}};
  const auto low = support_.front();
  F2Poly p;
  for (auto e : support_) p.flip(e - low);
  return {low, std::move(p)};
}

F2LaurentPoly& F2LaurentPoly::operator+=(const F2LaurentPoly& other) {
  std::vector<std::int64_t> out;
  out.reserve(support_.size() + other.support_.size());
  std::set_symmetric_difference(support_.begin(), support_.end(), other.support_.begin(),
                                other.support_.end(), std::back_inserter(out));
  support_ = std::move(out);
  return *this;
}

F2LaurentPoly operator*(const F2LaurentPoly& a, const F2LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.support_.size() == 1) return b.shifted(a.support_.front());
  if (b.support_.size() == 1) return a.shifted(b.support_.front());
  auto [sa, pa] = a.split();
  auto [sb, pb] = b.split();
  return F2LaurentPoly::from_poly(pa * pb, sa + sb);
}

F2LaurentPoly F2LaurentPoly::shifted(std::int64_t k) const {
  F2LaurentPoly out = *this;
  for (auto& e : out.support_) e += k;
  return out;
}

F2LaurentPoly F2LaurentPoly::inverted() const {
  F2LaurentPoly out;
  out.support_.assign(support_.rbegin(), support_.rend());
  for (auto& e : out.support_) e = -e;
  return out;
}

F2LaurentPoly F2LaurentPoly::stretched(std::int64_t k) const {
  F2LaurentPoly out = *this;
  for (auto& e : out.support_) e *= k;
  return out;
}

F2LaurentPoly exact_divide(const F2LaurentPoly& a, const F2LaurentPoly& b) {
  if (b.is_zero()) fail(ErrorCode::NotDivisible, "division by zero Laurent polynomial");
  if (a.is_zero()) return {};
  auto [sa, pa] = a.split();
  auto [sb, pb] = b.split();
  auto [q, r] = divmod(pa, pb);
  if (!r.is_zero()) fail(ErrorCode::NotDivisible, "Laurent polynomial does not divide");
  return F2LaurentPoly::from_poly(q, sa - sb);
}

F2LaurentPoly geometric_sum(std::int64_t count, std::int64_t step) {
  std::vector<std::int64_t> exps;
  if (count >= 0) {
    for (std::int64_t i = 0; i < count; ++i) exps.push_back(i * step);
  } else {
    for (std::int64_t i = 1; i <= -count; ++i) exps.push_back(-i * step);
  }
  return F2LaurentPoly(std::move(exps));
}

std::string to_string(const F2LaurentPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto e : p.support()) {
    if (!out.empty()) out += '+';
    if (e == 0) {
      out += '1';
    } else {
      out += var;
      if (e != 1) out += '^' + std::to_string(e);
    }
  }
  return out;
}

F2LaurentPoly parse_laurent(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t' && c != '\n') s += c;
  if (s.empty()) fail(ErrorCode::ParseError, "empty polynomial");
  if (s == "0") return {};
  std::vector<std::int64_t> exps;
  std::size_t pos = 0;
  while (true) {
    auto next = s.find('+', pos);
    std::string_view term(s.data() + pos, (next == std::string::npos ? s.size() : next) - pos);
    if (term == "1") {
      exps.push_back(0);
    } else if (term.size() >= 1 && (term[0] == 't' || term[0] == 's')) {
      if (term.size() == 1) {
        exps.push_back(1);
      } else {
        if (term[1] != '^') fail(ErrorCode::ParseError, "bad term '" + std::string(term) + "'");
        auto digits = term.substr(2);
        if (digits.size() >= 2 && digits.front() == '(' && digits.back() == ')')
          digits = digits.substr(1, digits.size() - 2);
        std::int64_t e = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), e);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
          fail(ErrorCode::ParseError, "bad exponent in '" + std::string(term) + "'");
        exps.push_back(e);
      }
    } else {
      fail(ErrorCode::ParseError, "bad term '" + std::string(term) + "'");
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return F2LaurentPoly(std::move(exps));
}

}  // namespace commlab
