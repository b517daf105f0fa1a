#include "biasmatch/exactmath.hpp"

#include <algorithm>
#include <stdexcept>

namespace biasmatch {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  // Divide instead of using the two-component constructor, which demands
  // pre-normalized (coprime, positive-denominator) inputs.
  v_ = boost::multiprecision::cpp_rational(num);
  v_ /= boost::multiprecision::cpp_rational(den);
}

namespace {

BigInt parse_bigint_strict(const std::string& text) {
  const size_t start = text.starts_with('-') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("no digits");
  for (size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("bad digit");
  return BigInt(text);
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(parse_bigint_strict(text));
    BigInt num = parse_bigint_strict(text.substr(0, slash));
    BigInt den = parse_bigint_strict(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("Rational: cannot parse '" + text + "'");
  }
}

std::string Rational::str() const {
  return numerator().str() + "/" + denominator().str();
}

std::string Rational::decimal_truncated(int digits) const {
  if (digits < 0) throw std::invalid_argument("decimal_truncated: negative digits");
  BigInt num = numerator(), den = denominator();
  bool neg = num < 0;
  if (neg) num = -num;
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  BigInt scaled = num * scale / den;  // truncation toward zero
  BigInt whole = scaled / scale, frac = scaled % scale;
  std::string out = (neg && scaled != 0 ? "-" : "") + whole.str();
  if (digits > 0) {
    std::string f = frac.str();
    out += "." + std::string(digits - f.size(), '0') + f;
  }
  return out;
}

Rational Rational::operator-() const {
  Rational out;
  out.v_ = -v_;
  return out;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.v_ == 0) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

BigInt binomial(long long n, long long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  for (long long i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;  // always exact: out is C(n-k+i, i) after this step
  }
  return out;
}

BigInt multinomial(int n, const std::vector<int>& parts) {
  if (n < 0) throw std::invalid_argument("multinomial: negative n");
  long long sum = 0;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    sum += p;
  }
  if (sum != n) throw std::invalid_argument("multinomial: parts do not sum to n");
  BigInt out = 1;
  long long used = 0;
  for (int p : parts) {
    used += p;
    out *= binomial(used, p);
  }
  return out;
}

Rational rat_pow(const Rational& q, int e) {
  if (e < 0) {
    if (q == Rational(0)) throw std::domain_error("rat_pow: zero base, negative exponent");
    return rat_pow(Rational(1) / q, -e);
  }
  Rational out = 1, base = q;
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

int ValidPair::k() const {
  int sum = sigma;
  for (int ji : j) sum += ji;
  return sum;
}

std::string ValidPair::str() const {
  std::string out;
  for (size_t i = 0; i < j.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(j[i]);
  }
  out += ';';
  out += (sigma >= 0 ? "+1" : "-1");
  return out;
}

bool is_valid_pair(const ValidPair& p, int k_expected) {
  if (p.r() < 2) return false;
  if (p.sigma != 1 && p.sigma != -1) return false;
  for (int ji : p.j)
    if (ji < 0 || ji + p.sigma < 0) return false;
  if (k_expected >= 0 && p.k() != k_expected) return false;
  return p.k() >= 2;
}

void validate_pair(const ValidPair& p, int k_expected) {
  if (!is_valid_pair(p, k_expected))
    throw std::invalid_argument("invalid pair '" + p.str() + "'" +
                                (k_expected >= 0 ? " for k=" + std::to_string(k_expected) : ""));
}

bool is_canonical(const ValidPair& p) {
  return std::is_sorted(p.j.begin(), p.j.end(), std::greater<int>());
}

ValidPair canonicalize(const ValidPair& p) {
  ValidPair out = p;
  std::sort(out.j.begin(), out.j.end(), std::greater<int>());
  return out;
}

ValidPair parse_pair(const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos)
    throw std::invalid_argument("pair: expected 'j1,...,jr;+1|-1', got '" + text + "'");
  std::string sig = text.substr(semi + 1);
  ValidPair p;
  if (sig == "+1")
    p.sigma = 1;
  else if (sig == "-1")
    p.sigma = -1;
  else
    throw std::invalid_argument("pair: sigma must be '+1' or '-1', got '" + sig + "'");
  std::string body = text.substr(0, semi);
  size_t pos = 0;
  while (pos <= body.size()) {
    auto comma = body.find(',', pos);
    std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("pair: bad coordinate '" + tok + "' in '" + text + "'");
    p.j.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  validate_pair(p);
  return p;
}

namespace {
// Non-increasing sequences of length `slots` summing to `total`, every entry
// in [lo, cap], emitted in descending lexicographic order.
void descending_partitions(int total, int slots, int cap, int lo,
                           std::vector<int>& acc, std::vector<std::vector<int>>& out) {
  if (slots == 0) {
    if (total == 0) out.push_back(acc);
    return;
  }
  for (int v = std::min(total, cap); v >= lo; --v) {
    if (total - v > (slots - 1) * v) continue;  // remaining slots cannot absorb the rest
    acc.push_back(v);
    descending_partitions(total - v, slots - 1, v, lo, acc, out);
    acc.pop_back();
  }
}
}  // namespace

std::vector<ValidPair> canonical_valid_pairs(int k, int r) {
  if (k < 2 || r < 2) throw std::invalid_argument("canonical_valid_pairs: need k >= 2 and r >= 2");
  std::vector<ValidPair> pairs;
  for (int sigma : {+1, -1}) {
    int total = k - sigma;
    int lo = sigma == 1 ? 0 : 1;  // j_i + sigma >= 0
    std::vector<std::vector<int>> parts;
    std::vector<int> acc;
    descending_partitions(total, r, total, lo, acc, parts);
    for (auto& j : parts) pairs.push_back(ValidPair{std::move(j), sigma});
  }
  return pairs;
}

}  // namespace biasmatch
