#include "gkz/numeric.hpp"

#include "gkz/error.hpp"

namespace gkz {

Integer gcd(const Integer& a, const Integer& b) { return mp::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return mp::abs(a / gcd(a, b) * b);
}

Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_u64(a, b) * b;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += mp::abs(m);
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::int64_t to_int64(const Integer& v) {
  if (v > Integer(std::numeric_limits<std::int64_t>::max()) ||
      v < Integer(std::numeric_limits<std::int64_t>::min()))
    throw DomainError("integer " + v.str() + " does not fit in 64 bits");
  return v.convert_to<std::int64_t>();
}

std::string to_string(const Integer& v) { return v.str(); }

std::string to_string(const Rational& v) { return v.str(); }

}  // namespace gkz

namespace gkz {

IntMatrix int_matrix(const std::vector<std::vector<long>>& rows, Eigen::Index cols) {
  if (cols < 0) cols = rows.empty() ? 0 : static_cast<Eigen::Index>(rows.front().size());
  IntMatrix M(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != cols) throw DomainError("ragged matrix");
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  }
  return M;
}

IntVector int_vector(const std::vector<long>& entries) {
  IntVector v(static_cast<Eigen::Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) v(static_cast<Eigen::Index>(i)) = entries[i];
  return v;
}

}  // namespace gkz
