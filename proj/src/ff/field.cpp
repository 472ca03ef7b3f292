#include <map>
#include <mutex>
#include <sstream>

#include "adq/ff.hpp"

namespace adq {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::uint32_t ipow(int p, int k) {
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > (1ull << 31)) throw Error(Errc::Input, "field too large");
  }
  return static_cast<std::uint32_t>(q);
}

// Candidate moduli x^k + a_{k-1}x^{k-1} + ... + a_0 in lexicographic order of
// (a_{k-1}, ..., a_0); index t enumerates them with a_0 as the fastest digit.
std::vector<int> candidate(int p, int k, std::uint64_t t) {
  std::vector<int> m(k + 1, 0);
  m[k] = 1;
  for (int i = 0; i < k; ++i) {
    m[i] = static_cast<int>(t % p);
    t /= p;
  }
  return m;
}

} // namespace

Field Field::create(int p, int k) {
  if (!is_prime(p)) throw Error(Errc::Input, "characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw Error(Errc::Input, "extension degree must be >= 1");
  static std::mutex mu;
  static std::map<std::pair<int, int>, Field> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, k});
    if (it != cache.end()) return it->second;
  }
  auto d = std::make_shared<Data>();
  d->p = p;
  d->k = k;
  d->q = ipow(p, k);
  if (k == 1) {
    d->modulus = {0, 1};
  } else {
    Field base = create(p, 1);
    std::uint64_t total = ipow(p, k);
    bool found = false;
    for (std::uint64_t t = 0; t < total && !found; ++t) {
      auto m = candidate(p, k, t);
      std::vector<std::int64_t> mi(m.begin(), m.end());
      if (is_irreducible(Poly::from_ints(base, mi))) {
        d->modulus = m;
        found = true;
      }
    }
    if (!found) throw Error(Errc::Invariant, "no irreducible modulus found");
  }
  Field f;
  f.d_ = d;
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(std::make_pair(p, k), f);
  return it->second;
}

std::vector<int> Field::coeffs(Elt a) const {
  std::vector<int> c(d_->k);
  for (int i = 0; i < d_->k; ++i) {
    c[i] = static_cast<int>(a % d_->p);
    a /= d_->p;
  }
  return c;
}

Elt Field::from_coeffs(const std::vector<int> &c) const {
  Elt a = 0;
  for (int i = d_->k - 1; i >= 0; --i) {
    int v = i < static_cast<int>(c.size()) ? c[i] % d_->p : 0;
    if (v < 0) v += d_->p;
    a = a * d_->p + static_cast<Elt>(v);
  }
  return a;
}

Elt Field::add_ext(Elt a, Elt b) const {
  Elt r = 0, mult = 1;
  const Elt p = d_->p;
  for (int i = 0; i < d_->k; ++i) {
    Elt s = a % p + b % p;
    if (s >= p) s -= p;
    r += s * mult;
    mult *= p;
    a /= p;
    b /= p;
  }
  return r;
}

Elt Field::sub_ext(Elt a, Elt b) const {
  Elt r = 0, mult = 1;
  const Elt p = d_->p;
  for (int i = 0; i < d_->k; ++i) {
    Elt x = a % p, y = b % p;
    Elt s = x >= y ? x - y : x + p - y;
    r += s * mult;
    mult *= p;
    a /= p;
    b /= p;
  }
  return r;
}

Elt Field::mul_ext(Elt a, Elt b) const {
  const int k = d_->k, p = d_->p;
  auto x = coeffs(a), y = coeffs(b);
  std::vector<std::int64_t> prod(2 * k - 1, 0);
  for (int i = 0; i < k; ++i)
    if (x[i])
      for (int j = 0; j < k; ++j) prod[i + j] += static_cast<std::int64_t>(x[i]) * y[j];
  for (auto &v : prod) v %= p;
  const auto &m = d_->modulus;
  for (int i = 2 * k - 2; i >= k; --i) {
    std::int64_t t = prod[i];
    if (!t) continue;
    prod[i] = 0;
    for (int j = 0; j < k; ++j) prod[i - k + j] = (prod[i - k + j] - t * m[j]) % p;
  }
  std::vector<int> r(k);
  for (int i = 0; i < k; ++i) r[i] = static_cast<int>(((prod[i] % p) + p) % p);
  return from_coeffs(r);
}

Elt Field::pow(Elt a, std::uint64_t e) const {
  Elt r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elt Field::inv(Elt a) const {
  if (a == 0) throw Error(Errc::Input, "inverse of zero");
  return pow(a, d_->q - 2);
}

std::uint64_t Field::order(Elt a) const {
  if (a == 0) throw Error(Errc::Input, "order of zero");
  std::uint64_t n = d_->q - 1, ord = n;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f) continue;
    while (n % f == 0) n /= f;
    while (ord % f == 0 && pow(a, ord / f) == 1) ord /= f;
  }
  if (n > 1)
    while (ord % n == 0 && pow(a, ord / n) == 1) ord /= n;
  return ord;
}

std::string Field::format(Elt a) const {
  auto c = coeffs(a);
  std::ostringstream os;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  return os.str();
}

Elt Field::parse(std::string_view s) const {
  std::vector<int> c;
  std::string cur;
  auto flush = [&] {
    std::size_t b = cur.find_first_not_of(" \t");
    std::size_t e = cur.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error(Errc::Input, "empty field element component");
    std::string t = cur.substr(b, e - b + 1);
    std::size_t used = 0;
    long v = std::stol(t, &used);
    if (used != t.size()) throw Error(Errc::Input, "bad field element '" + std::string(s) + "'");
    if (v < 0 || v >= d_->p)
      throw Error(Errc::Input, "field element component out of range in '" + std::string(s) + "'");
    c.push_back(static_cast<int>(v));
    cur.clear();
  };
  for (char ch : s) {
    if (ch == ',') flush();
    else cur += ch;
  }
  flush();
  if (static_cast<int>(c.size()) != d_->k)
    throw Error(Errc::Input, "expected " + std::to_string(d_->k) + " components in '" + std::string(s) + "'");
  return from_coeffs(c);
}

} // namespace adq
