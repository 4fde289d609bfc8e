#include "condmodel/rational.hpp"

#include <cctype>

#include "condmodel/error.hpp"

namespace condmodel {

Rat parse_rational(std::string_view text) {
  std::string s(text);
  // trim
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw Error(ErrorCode::ConfigError, "empty rational literal");

  auto dot = s.find('.');
  if (dot != std::string::npos) {
    // decimal form: shift the point out
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw Error(ErrorCode::ConfigError, "bad rational literal: " + s);
    mpz_class num, den = 1;
    if (num.set_str(digits, 10) != 0)
      throw Error(ErrorCode::ConfigError, "bad rational literal: " + s);
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    Rat q(num, den);
    q.canonicalize();
    return q;
  }

  Rat q;
  if (q.set_str(s, 10) != 0)
    throw Error(ErrorCode::ConfigError, "bad rational literal: " + s);
  if (q.get_den() == 0) throw Error(ErrorCode::ConfigError, "zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string int_to_string(const Int& z) { return z.get_str(); }

Int parse_integer(std::string_view text) {
  Int z;
  if (z.set_str(std::string(text), 10) != 0)
    throw Error(ErrorCode::ConfigError, "bad integer literal: " + std::string(text));
  return z;
}

Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool rational_sqrt_exact(const Rat& q, Rat* root) {
  if (q < 0) return false;
  Int num = q.get_num(), den = q.get_den();
  Int rn = isqrt(num), rd = isqrt(den);
  if (rn * rn != num || rd * rd != den) return false;
  if (root) {
    *root = Rat(rn, rd);
    root->canonicalize();
  }
  return true;
}

}  // namespace condmodel
