#include "commlab/f2poly.hpp"

#include <bit>

#include "commlab/error.hpp"

namespace commlab {

namespace {

// result ^= src << shift, growing result as needed.
void xor_shifted(std::vector<std::uint64_t>& result,
                 const std::vector<std::uint64_t>& src, std::int64_t shift) {
  if (src.empty()) return;
  const std::size_t word_shift = static_cast<std::size_t>(shift / 64);
  const unsigned bit_shift = static_cast<unsigned>(shift % 64);
  const std::size_t needed = src.size() + word_shift + 1;
  if (result.size() < needed) result.resize(needed, 0);
  if (bit_shift == 0) {
    for (std::size_t i = 0; i < src.size(); ++i) result[i + word_shift] ^= src[i];
    return;
  }
  for (std::size_t i = 0; i < src.size(); ++i) {
    result[i + word_shift] ^= src[i] << bit_shift;
    result[i + word_shift + 1] ^= src[i] >> (64 - bit_shift);
  }
}

}  // namespace

void F2Poly::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

F2Poly F2Poly::monomial(std::int64_t e) {
  F2Poly p;
  p.flip(e);
  return p;
}

F2Poly F2Poly::from_exponents(const std::vector<std::int64_t>& exps) {
  F2Poly p;
  for (auto e : exps) p.flip(e);
  return p;
}

std::int64_t F2Poly::degree() const {
  if (words_.empty()) return -1;
  return static_cast<std::int64_t>(words_.size() - 1) * 64 + 63 -
         std::countl_zero(words_.back());
}

std::int64_t F2Poly::low_degree() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] != 0)
      return static_cast<std::int64_t>(i) * 64 + std::countr_zero(words_[i]);
  return 0;
}

std::int64_t F2Poly::popcount() const {
  std::int64_t n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

bool F2Poly::coeff(std::int64_t i) const {
  if (i < 0) return false;
  const auto w = static_cast<std::size_t>(i / 64);
  if (w >= words_.size()) return false;
  return (words_[w] >> (i % 64)) & 1U;
}

void F2Poly::flip(std::int64_t i) {
  const auto w = static_cast<std::size_t>(i / 64);
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] ^= std::uint64_t{1} << (i % 64);
  trim();
}

std::vector<std::int64_t> F2Poly::exponents() const {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w != 0) {
      out.push_back(static_cast<std::int64_t>(i) * 64 + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

F2Poly& F2Poly::operator+=(const F2Poly& other) {
  if (words_.size() < other.words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
  trim();
  return *this;
}

F2Poly operator*(const F2Poly& a, const F2Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const F2Poly& sparse = a.popcount() <= b.popcount() ? a : b;
  const F2Poly& dense = &sparse == &a ? b : a;
  F2Poly out;
  for (std::size_t i = 0; i < sparse.words_.size(); ++i) {
    auto w = sparse.words_[i];
    while (w != 0) {
      xor_shifted(out.words_, dense.words_,
                  static_cast<std::int64_t>(i) * 64 + std::countr_zero(w));
      w &= w - 1;
    }
  }
  out.trim();
  return out;
}

F2Poly F2Poly::shifted_up(std::int64_t k) const {
  F2Poly out;
  xor_shifted(out.words_, words_, k);
  out.trim();
  return out;
}

F2Poly F2Poly::shifted_down(std::int64_t k) const {
  if (k == 0) return *this;
  F2Poly out;
  const auto word_shift = static_cast<std::size_t>(k / 64);
  const unsigned bit_shift = static_cast<unsigned>(k % 64);
  if (word_shift >= words_.size()) return out;
  out.words_.assign(words_.size() - word_shift, 0);
  for (std::size_t i = word_shift; i < words_.size(); ++i) {
    out.words_[i - word_shift] |= bit_shift == 0 ? words_[i] : words_[i] >> bit_shift;
    if (bit_shift != 0 && i + 1 < words_.size())
      out.words_[i - word_shift] |= words_[i + 1] << (64 - bit_shift);
  }
  out.trim();
  return out;
}

F2Poly F2Poly::stretched(std::int64_t k) const {
  if (k == 1) return *this;
  F2Poly out;
  for (auto e : exponents()) out.flip(e * k);
  return out;
}

F2Poly F2Poly::reversed() const {
  F2Poly out;
  const auto d = degree();
  for (auto e : exponents()) out.flip(d - e);
  return out;
}

std::pair<F2Poly, F2Poly> divmod(const F2Poly& a, const F2Poly& b) {
  if (b.is_zero()) fail(ErrorCode::NotDivisible, "polynomial division by zero");
  F2Poly q;
  F2Poly r = a;
  const auto db = b.degree();
  for (auto dr = r.degree(); dr >= db; dr = r.degree()) {
    q.flip(dr - db);
    r += b.shifted_up(dr - db);
  }
  return {std::move(q), std::move(r)};
}

F2Poly operator%(const F2Poly& a, const F2Poly& b) { return divmod(a, b).second; }
F2Poly operator/(const F2Poly& a, const F2Poly& b) { return divmod(a, b).first; }

F2Poly gcd(F2Poly a, F2Poly b) {
  while (!b.is_zero()) {
    a = a % b;
    std::swap(a, b);
  }
  return a;
}

F2Poly inverse_mod(const F2Poly& a, const F2Poly& m) {
  // Extended Euclid tracking only the coefficient of a.
  F2Poly r0 = m, r1 = a % m;
  F2Poly s0, s1 = F2Poly::one();
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    F2Poly s2 = s0 + q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (!r0.is_one()) fail(ErrorCode::NotDivisible, "element is not invertible modulo m");
  return s0 % m;
}

F2Poly mul_mod(const F2Poly& a, const F2Poly& b, const F2Poly& m) { return (a * b) % m; }

}  // namespace commlab
