#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace biasmatch {

using BigInt = boost::multiprecision::cpp_int;

// Exact fraction. Always stored reduced with positive denominator (the
// cpp_rational backend normalizes on every operation).
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : v_(value) {}  // implicit by design: Rational(0), q == 1, ...
  Rational(const BigInt& value) : v_(value) {}
  // Throws std::domain_error when den == 0.
  Rational(const BigInt& num, const BigInt& den);

  // Accepts "p", "p/q", optional leading '-'. Throws std::invalid_argument.
  static Rational parse(const std::string& text);

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }
  bool is_integer() const { return denominator() == 1; }

  // Canonical "p/q" form; the denominator is printed even when it is 1.
  std::string str() const;
  // Decimal expansion truncated (not rounded) toward zero to `digits` places.
  std::string decimal_truncated(int digits) const;
  double to_double() const { return v_.convert_to<double>(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);  // throws std::domain_error on /0

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  boost::multiprecision::cpp_rational v_;
};

// Exact binomial coefficient; 0 when k < 0 or k > n. Requires n >= 0.
BigInt binomial(long long n, long long k);

// Exact n! / prod(parts_i!). Throws std::invalid_argument when the parts do
// not sum to n or any part is negative.
BigInt multinomial(int n, const std::vector<int>& parts);

// Exact q^e for integer e (negative allowed). Throws std::domain_error for
// 0 raised to a negative power.
Rational rat_pow(const Rational& q, int e);

// A colour-count vector j together with a shift sigma in {-1,+1}. The pair is
// "k-valid" for k = sigma + sum(j) when every j_i >= 0 and j_i + sigma >= 0.
struct ValidPair {
  std::vector<int> j;
  int sigma = 1;

  int r() const { return static_cast<int>(j.size()); }
  int k() const;  // sigma + sum(j)
  bool operator==(const ValidPair&) const = default;

  // CLI/report syntax: "j1,j2,...,jr;+1" or "...;-1".
  std::string str() const;
};

// Structural validity: r >= 2, sigma in {-1,+1}, j_i >= 0, j_i + sigma >= 0,
// and (when k_expected >= 0) sigma + sum(j) == k_expected.
bool is_valid_pair(const ValidPair& p, int k_expected = -1);
// Same checks, throwing std::invalid_argument with a message on failure.
void validate_pair(const ValidPair& p, int k_expected = -1);

bool is_canonical(const ValidPair& p);      // j non-increasing
ValidPair canonicalize(const ValidPair& p); // sort j non-increasingly

// Parses the "j1,...,jr;+1|-1" syntax. Throws std::invalid_argument.
ValidPair parse_pair(const std::string& text);

// Exactly one representative per symmetry class (j sorted non-increasingly),
// sigma = +1 classes first, each sigma block in descending lexicographic
// order of j. Throws std::invalid_argument unless k >= 2 and r >= 2.
std::vector<ValidPair> canonical_valid_pairs(int k, int r);

}  // namespace biasmatch
