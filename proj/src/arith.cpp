#include "ordalg/arith.hpp"

namespace ordalg {

std::vector<std::pair<Int, unsigned>> factor_small(Int n) {
  std::vector<std::pair<Int, unsigned>> out;
  if (n < 0) n = -n;
  if (n <= 1) return out;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

bool is_power_of(const Int& n, const Int& p) {
  if (n <= 0) return false;
  Int m = n;
  while (m % p == 0) m /= p;
  return m == 1;
}

Int prime_to_part(const Int& n, const Int& p) {
  Int m = abs_int(n);
  if (m == 0) return m;
  while (m % p == 0) m /= p;
  return m;
}

Int common_denominator(const RatVector& v) {
  Int d = 1;
  for (const auto& x : v) d = lcm(d, x.get_den());
  return d;
}

RatVector to_rat(const IntVector& v) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

IntVector to_int(const RatVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_integral(v[i]))
      throw DomainError("expected integral vector, found " + to_string(v[i]));
    out[i] = v[i].get_num();
  }
  return out;
}

std::string to_string(const Int& a) { return a.get_str(); }

std::string to_string(const Rat& a) { return a.get_str(); }

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  Int num = parse_int(s.substr(0, slash));
  if (slash == std::string::npos) return Rat(num);
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in '" + s + "'");
  return make_rat(num, den);
}

Int parse_int(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) throw InputError("malformed integer '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9')
      throw InputError("malformed integer '" + s + "'");
  Int r;
  r.set_str(s[0] == '+' ? s.substr(1) : s, 10);
  return r;
}

}  // namespace ordalg
