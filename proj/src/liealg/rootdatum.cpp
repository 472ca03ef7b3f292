#include <map>
#include <sstream>

#include "adq/liealg.hpp"

namespace adq {

namespace {

using Vec = std::vector<std::int64_t>;

std::int64_t pair(const Vec &a, const Vec &b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RootDatum with_negatives(std::string name, int r, std::vector<std::pair<Vec, Vec>> pos) {
  RootDatum d;
  d.name = std::move(name);
  d.r = r;
  for (auto &[a, c] : pos) {
    d.roots.push_back(a);
    d.coroots.push_back(c);
  }
  for (auto &[a, c] : pos) {
    Vec na = a, nc = c;
    for (auto &x : na) x = -x;
    for (auto &x : nc) x = -x;
    d.roots.push_back(na);
    d.coroots.push_back(nc);
  }
  return d;
}

// Reflection s_i(beta) = beta - <beta, a_i^> a_i as a permutation of the roots.
std::vector<std::size_t> reflection(const RootDatum &d, std::size_t i) {
  std::map<Vec, std::size_t> idx;
  for (std::size_t j = 0; j < d.roots.size(); ++j) idx[d.roots[j]] = j;
  std::vector<std::size_t> perm(d.roots.size());
  for (std::size_t j = 0; j < d.roots.size(); ++j) {
    Vec b = d.roots[j];
    std::int64_t c = pair(b, d.coroots[i]);
    for (int k = 0; k < d.r; ++k) b[k] -= c * d.roots[i][k];
    auto it = idx.find(b);
    if (it == idx.end()) throw Error(Errc::Input, "reflection does not preserve the roots");
    perm[j] = it->second;
  }
  return perm;
}

// Elementary divisors of the lattice spanned by the rows.
std::vector<std::int64_t> divisors_of(const std::vector<Vec> &rows) {
  if (rows.empty()) return {};
  return smith_form_Z(IMat(rows.begin(), rows.end())).diag;
}

} // namespace

RootDatum builtin_root_datum(const std::string &name) {
  if (name == "A1") return with_negatives("A1", 1, {{{2}, {1}}});
  if (name == "A1xA1") return with_negatives("A1xA1", 2, {{{2, 0}, {1, 0}}, {{0, 2}, {0, 1}}});
  if (name == "C2")
    return with_negatives("C2", 2, {{{2, 0}, {1, 0}}, {{0, 2}, {0, 1}}, {{1, 1}, {1, 1}}, {{1, -1}, {1, -1}}});
  if (name == "B2")
    return with_negatives("B2", 2, {{{1, 0}, {2, 0}}, {{0, 1}, {0, 2}}, {{1, 1}, {1, 1}}, {{1, -1}, {1, -1}}});
  if (name == "GL2") return with_negatives("GL2", 2, {{{1, -1}, {1, -1}}});
  if (name == "GSp4")
    return with_negatives("GSp4", 3,
                          {{{1, -1, 0}, {1, -1, 0}},
                           {{1, 1, -1}, {1, 1, 0}},
                           {{2, 0, -1}, {1, 0, 0}},
                           {{0, 2, -1}, {0, 1, 0}}});
  throw Error(Errc::Input, "unknown root datum '" + name + "'");
}

std::vector<std::string> builtin_root_data() { return {"A1", "A1xA1", "C2", "B2", "GL2", "GSp4"}; }

RootDatum parse_root_datum(const std::string &text) {
  RootDatum d;
  d.name = "custom";
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    auto fail = [&](const std::string &msg) {
      throw Error(Errc::Input, "root datum line " + std::to_string(lineno) + ": " + msg);
    };
    if (word == "rank") {
      if (!(ls >> d.r) || d.r < 1) fail("bad rank");
    } else if (word == "root") {
      if (!d.r) fail("rank must come first");
      Vec a(d.r), c(d.r);
      for (auto &x : a)
        if (!(ls >> x)) fail("short root");
      if (!(ls >> word) || word != "coroot") fail("expected 'coroot'");
      for (auto &x : c)
        if (!(ls >> x)) fail("short coroot");
      d.roots.push_back(a);
      d.coroots.push_back(c);
    } else if (word == "name") {
      ls >> d.name;
    } else {
      fail("unknown keyword '" + word + "'");
    }
  }
  validate_root_datum(d);
  return d;
}

void validate_root_datum(const RootDatum &d) {
  if (d.roots.size() != d.coroots.size()) throw Error(Errc::Input, "roots and coroots differ in number");
  for (std::size_t i = 0; i < d.roots.size(); ++i) {
    if (static_cast<int>(d.roots[i].size()) != d.r || static_cast<int>(d.coroots[i].size()) != d.r)
      throw Error(Errc::Input, "root of wrong length");
    if (pair(d.roots[i], d.coroots[i]) != 2) throw Error(Errc::Input, "root/coroot pairing is not 2");
  }
  for (std::size_t i = 0; i < d.roots.size(); ++i) reflection(d, i);
}

std::uint64_t weyl_order(const RootDatum &d) {
  std::vector<std::vector<std::size_t>> gens;
  for (std::size_t i = 0; i < d.roots.size(); ++i) gens.push_back(reflection(d, i));
  std::vector<std::size_t> id(d.roots.size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  std::map<std::vector<std::size_t>, int> seen = {{id, 0}};
  std::vector<std::vector<std::size_t>> queue = {id};
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (const auto &s : gens) {
      std::vector<std::size_t> w(id.size());
      for (std::size_t i = 0; i < id.size(); ++i) w[i] = s[queue[h][i]];
      if (seen.emplace(w, 0).second) queue.push_back(w);
    }
  return queue.size();
}

std::set<std::int64_t> bad_primes(const RootDatum &d, std::int64_t bound) {
  std::size_t m = d.roots.size();
  if (m > 16) throw Error(Errc::SubsetBudgetExceeded, "too many roots for subset enumeration");
  std::set<std::int64_t> divisors;
  for (std::uint64_t mask = 1; mask < (1ull << m); ++mask) {
    std::vector<Vec> a, c;
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1) {
        a.push_back(d.roots[i]);
        c.push_back(d.coroots[i]);
      }
    for (auto x : divisors_of(a)) divisors.insert(std::llabs(x));
    for (auto x : divisors_of(c)) divisors.insert(std::llabs(x));
  }
  std::set<std::int64_t> bad;
  for (std::int64_t l = 2; l < bound; ++l) {
    if (!is_prime(l)) continue;
    for (auto x : divisors)
      if (x % l == 0) {
        bad.insert(l);
        break;
      }
  }
  return bad;
}

} // namespace adq
