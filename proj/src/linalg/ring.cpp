#include <regex>

#include "adq/linalg.hpp"

namespace adq {

namespace {
std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = ((a % m) + m) % m, cur_r = m, old_s = 1, cur_s = 0;
  while (cur_r) {
    std::int64_t q = old_r / cur_r;
    std::int64_t t = old_r - q * cur_r;
    old_r = cur_r;
    cur_r = t;
    t = old_s - q * cur_s;
    old_s = cur_s;
    cur_s = t;
  }
  if (old_r != 1) throw Error(Errc::Input, "element is not a unit");
  std::int64_t res = old_s % m;
  return res < 0 ? res + m : res;
}
} // namespace

Ring Ring::field(const Field &F) {
  Ring r;
  r.kind_ = RingKind::Field;
  r.F_ = F;
  r.p_ = F.p();
  r.N_ = 1;
  r.size_ = F.q();
  return r;
}

Ring Ring::zmod(int p, int N) {
  if (N < 1) throw Error(Errc::Input, "truncation length must be >= 1");
  Ring r;
  r.kind_ = RingKind::Zmod;
  r.F_ = Field::create(p, 1);
  r.p_ = p;
  r.N_ = N;
  std::uint64_t s = 1;
  for (int i = 0; i < N; ++i) {
    s *= static_cast<std::uint64_t>(p);
    if (s > (1ull << 31)) throw Error(Errc::Input, "Z/p^N too large");
  }
  r.size_ = static_cast<std::uint32_t>(s);
  return r;
}

Ring Ring::dual(int p) {
  Ring r;
  r.kind_ = RingKind::Dual;
  r.F_ = Field::create(p, 1);
  r.p_ = p;
  r.N_ = 2;
  r.size_ = static_cast<std::uint32_t>(p) * p;
  return r;
}

Ring Ring::parse_tag(const std::string &tag) {
  std::smatch m;
  static const std::regex fq(R"(\s*Fq\[\s*(\d+)\s*,\s*(\d+)\s*\]\s*)");
  static const std::regex zm(R"(\s*Zmod\[\s*(\d+)\s*,\s*(\d+)\s*\]\s*)");
  static const std::regex du(R"(\s*Dual\[\s*(\d+)\s*\]\s*)");
  if (std::regex_match(tag, m, fq)) return field(Field::create(std::stoi(m[1]), std::stoi(m[2])));
  if (std::regex_match(tag, m, zm)) {
    int p = std::stoi(m[1]);
    if (!is_prime(p)) throw Error(Errc::Input, "Zmod base must be prime");
    return zmod(p, std::stoi(m[2]));
  }
  if (std::regex_match(tag, m, du)) {
    int p = std::stoi(m[1]);
    if (!is_prime(p)) throw Error(Errc::Input, "Dual base must be prime");
    return dual(p);
  }
  throw Error(Errc::Input, "unknown ring tag '" + tag + "'");
}

std::string Ring::tag() const {
  switch (kind_) {
  case RingKind::Field: return "Fq[" + std::to_string(p_) + "," + std::to_string(F_.k()) + "]";
  case RingKind::Zmod: return "Zmod[" + std::to_string(p_) + "," + std::to_string(N_) + "]";
  case RingKind::Dual: return "Dual[" + std::to_string(p_) + "]";
  }
  return "";
}

Elt Ring::from_int(std::int64_t v) const {
  switch (kind_) {
  case RingKind::Field: return F_.from_int(v);
  case RingKind::Zmod: {
    std::int64_t r = v % static_cast<std::int64_t>(size_);
    return static_cast<Elt>(r < 0 ? r + size_ : r);
  }
  case RingKind::Dual: return F_.from_int(v);
  }
  return 0;
}

Elt Ring::residue(Elt a) const {
  if (kind_ == RingKind::Field) return a;
  return a % p_;
}

Elt Ring::lift(Elt r) const {
  if (kind_ != RingKind::Field && r >= static_cast<Elt>(p_))
    throw Error(Errc::Input, "residue outside the prime field");
  return r;
}

bool Ring::is_unit(Elt a) const {
  if (kind_ == RingKind::Field) return a != 0;
  return a % p_ != 0;
}

Elt Ring::inv(Elt a) const {
  switch (kind_) {
  case RingKind::Field: return F_.inv(a);
  case RingKind::Zmod: return static_cast<Elt>(inv_mod(a, size_));
  case RingKind::Dual: {
    Elt a0 = a % p_, a1 = a / p_;
    if (!a0) throw Error(Errc::Input, "element is not a unit");
    Elt i0 = F_.inv(a0);
    Elt i1 = F_.neg(F_.mul(a1, F_.mul(i0, i0)));
    return i0 + i1 * p_;
  }
  }
  return 0;
}

int Ring::val(Elt a) const {
  if (a == 0) return N_;
  switch (kind_) {
  case RingKind::Field: return 0;
  case RingKind::Zmod: {
    int v = 0;
    while (a % p_ == 0) {
      a /= p_;
      ++v;
    }
    return v;
  }
  case RingKind::Dual: return a % p_ ? 0 : 1;
  }
  return 0;
}

Elt Ring::div_exact(Elt y, Elt x) const {
  if (x == 0) throw Error(Errc::Input, "division by zero");
  int vx = val(x);
  if (val(y) < vx) throw Error(Errc::Invariant, "inexact division in chain ring");
  switch (kind_) {
  case RingKind::Field: return F_.div(y, x);
  case RingKind::Zmod: {
    Elt pv = pi_pow(vx);
    std::int64_t u = x / pv;
    std::int64_t yy = y / pv;
    return static_cast<Elt>((static_cast<std::uint64_t>(yy) * inv_mod(u, size_)) % size_);
  }
  case RingKind::Dual: {
    if (vx == 0) return mul(y, inv(x));
    Elt b = x / p_, bb = y / p_;
    return F_.div(bb, b);
  }
  }
  return 0;
}

Elt Ring::pi_pow(int v) const {
  if (v <= 0) return 1;
  if (v >= N_) return 0;
  switch (kind_) {
  case RingKind::Field: return 0;
  case RingKind::Zmod: {
    Elt r = 1;
    for (int i = 0; i < v; ++i) r *= p_;
    return r;
  }
  case RingKind::Dual: return static_cast<Elt>(p_);
  }
  return 0;
}

Elt Ring::truncate(Elt a, const Ring &target) const {
  if (target == *this) return a;
  if (target.p_ != p_) throw Error(Errc::Input, "residue characteristic mismatch");
  if (target.kind_ == RingKind::Field) {
    if (!target.F_.prime() && kind_ != RingKind::Field) throw Error(Errc::Input, "cannot reduce into extension");
    return residue(a);
  }
  if (kind_ == RingKind::Zmod && target.kind_ == RingKind::Zmod) {
    if (target.N_ > N_) throw Error(Errc::Input, "cannot increase truncation length");
    return a % target.size_;
  }
  throw Error(Errc::Input, "unsupported ring change " + tag() + " -> " + target.tag());
}

std::string Ring::format(Elt a) const {
  switch (kind_) {
  case RingKind::Field: return F_.format(a);
  case RingKind::Zmod: return std::to_string(a);
  case RingKind::Dual: {
    Elt a0 = a % p_, a1 = a / p_;
    if (!a1) return std::to_string(a0);
    return std::to_string(a0) + "+" + std::to_string(a1) + "e";
  }
  }
  return "";
}

Elt Ring::parse(const std::string &s) const {
  std::string t;
  for (char c : s)
    if (c != ' ' && c != '\t') t += c;
  if (t.empty()) throw Error(Errc::Input, "empty ring element");
  switch (kind_) {
  case RingKind::Field: return F_.parse(t);
  case RingKind::Zmod: {
    std::size_t used = 0;
    long long v = std::stoll(t, &used);
    if (used != t.size()) throw Error(Errc::Input, "bad integer '" + s + "'");
    return from_int(v);
  }
  case RingKind::Dual: {
    // Forms: "a", "be", "a+be", "a-be".
    std::int64_t a0 = 0, a1 = 0;
    std::size_t epos = t.find('e');
    if (epos == std::string::npos) {
      a0 = std::stoll(t);
    } else {
      if (epos + 1 != t.size()) throw Error(Errc::Input, "bad dual number '" + s + "'");
      std::size_t split = t.find_last_of("+-", epos);
      std::string coef;
      if (split == std::string::npos || split == 0) {
        coef = t.substr(0, epos);
      } else {
        a0 = std::stoll(t.substr(0, split));
        coef = t.substr(split, epos - split);
      }
      if (coef.empty() || coef == "+") a1 = 1;
      else if (coef == "-") a1 = -1;
      else a1 = std::stoll(coef);
    }
    return F_.from_int(a0) + F_.from_int(a1) * p_;
  }
  }
  return 0;
}

} // namespace adq
