#include "commlab/rational.hpp"

#include "commlab/error.hpp"

namespace commlab {

BigRat parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t' && c != '\n') s += c;
  if (s.empty()) fail(ErrorCode::ParseError, "empty rational");
  if (s.front() == '+') s.erase(0, 1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && (i == 0 || s[i - 1] == '/'));
    if (!ok) fail(ErrorCode::ParseError, "bad rational '" + s + "'");
  }
  BigRat q;
  if (q.set_str(s, 10) != 0) fail(ErrorCode::ParseError, "bad rational '" + s + "'");
  if (q.get_den() == 0) fail(ErrorCode::ParseError, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const BigRat& q) { return q.get_str(); }

bool is_s_unit_denominator(BigInt d, const std::set<unsigned long>& primes) {
  if (d < 0) d = -d;
  for (auto p : primes) {
    if (p < 2) continue;
    while (mpz_divisible_ui_p(d.get_mpz_t(), p)) d /= p;
  }
  return d == 1;
}

BigInt coprime_part(BigInt d, const BigInt& n) {
  if (d < 0) d = -d;
  for (BigInt g = gcd(d, n); g != 1; g = gcd(d, n)) d /= g;
  return d;
}

long valuation(BigInt x, const BigInt& p) {
  long v = 0;
  if (x == 0) return 0;
  while (mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t())) {
    x /= p;
    ++v;
  }
  return v;
}

}  // namespace commlab
