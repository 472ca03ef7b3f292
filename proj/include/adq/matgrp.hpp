#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "adq/linalg.hpp"

namespace adq {

enum class Ambient { GL, SL, Sp, GSp, SO, O };

const char *ambient_name(Ambient a);
Ambient parse_ambient(const std::string &s);
bool is_symplectic(Ambient a);
bool is_orthogonal(Ambient a);

struct GroupSpec {
  Field F;
  int n = 0;
  Ambient ambient = Ambient::GL;
  Mat J;  // empty (0x0) for GL/SL
  std::vector<Mat> gens;
  std::string name;

  Ring ring() const { return Ring::field(F); }
};

/// Standard form: antidiag(1,..,1,-1,..,-1) for symplectic ambients, antidiag(1,..,1) for orthogonal.
Mat standard_form(Ambient a, int n, const Field &F);
/// nu with g^T J g = nu J, or nullopt.
std::optional<Elt> similitude(const Mat &g, const Mat &J);
/// Throws Errc::InvalidGenerator naming the first violated constraint.
void validate(const GroupSpec &s);

/// Symplectic transvection x -> x + w(x,v) v with w(x,y) = x^T J y.
Mat transvection(const Mat &J, const std::vector<Elt> &v);
GroupSpec sl2_standard(const Field &F);
GroupSpec sp4_standard(int p);
GroupSpec gsp4_standard(int p);
/// Least generator of F_p^x.
Elt primitive_root(const Field &F);

/// A subgroup of an enumerated group: sorted element indices plus generating indices.
struct Subgroup {
  std::vector<std::uint32_t> elems;
  std::vector<std::uint32_t> gens;
  std::size_t order() const { return elems.size(); }
  bool operator==(const Subgroup &o) const = default;
  bool contains(std::uint32_t x) const;
};

struct ConjClass {
  std::uint32_t rep;
  std::uint64_t size;
  std::uint32_t order;  // element order
};

/// Fully enumerated matrix group. Element 0 is the identity; elements are stored in BFS
/// order with element(i) = element(parent(i)) * gen(pgen(i)).
class Group {
public:
  static constexpr std::uint64_t kDefaultCap = 200000;
  /// Throws Errc::CapExceeded (with partial count) or Errc::InvalidGenerator.
  static std::shared_ptr<const Group> enumerate(const GroupSpec &spec, std::uint64_t cap = kDefaultCap);

  const GroupSpec &spec() const { return spec_; }
  const Ring &ring() const { return R_; }
  int n() const { return spec_.n; }
  std::size_t order() const { return count_; }
  std::size_t ngens() const { return spec_.gens.size(); }

  Mat element(std::uint32_t i) const;
  const Elt *raw(std::uint32_t i) const { return data_.data() + static_cast<std::size_t>(i) * nn_; }
  std::optional<std::uint32_t> find(const Mat &m) const;
  std::uint32_t index_of(const Mat &m) const;
  std::uint32_t parent(std::uint32_t i) const { return parent_[i]; }
  std::uint32_t pgen(std::uint32_t i) const { return pgen_[i]; }
  /// element(i) * gen(s)
  std::uint32_t rmul_gen(std::uint32_t i, std::size_t s) const { return rmul_[s][i]; }
  std::uint32_t gen_index(std::size_t s) const { return gen_idx_[s]; }
  std::uint32_t inv(std::uint32_t i) const { return inv_[i]; }
  std::uint32_t mul(std::uint32_t i, std::uint32_t j) const;
  /// gen(s)^-1 * element(x) * gen(s)
  std::uint32_t conj_gen(std::uint32_t x, std::size_t s) const;
  /// g^-1 x g
  std::uint32_t conj(std::uint32_t x, std::uint32_t g) const { return mul(inv(g), mul(x, g)); }

  std::uint32_t element_order(std::uint32_t i) const;
  bool is_semisimple(std::uint32_t i) const;

  const std::vector<ConjClass> &classes() const;
  std::uint32_t class_of(std::uint32_t i) const;

  Subgroup whole() const;
  Subgroup closure(const std::vector<std::uint32_t> &gens) const;
  Subgroup normal_closure(const std::vector<std::uint32_t> &gens) const;
  const Subgroup &derived() const;
  Subgroup center() const;
  bool is_abelian() const;
  /// dim Hom(G, F_p) = log_p #{x in G^ab : x^p = 1}.
  int hom_to_Fp_dim(int p) const;
  /// Kernels of all nontrivial homomorphisms G -> Z/2.
  std::vector<Subgroup> index2_subgroups() const;
  /// Similitude of each element (GSp/Sp); empty for other ambients.
  std::vector<Elt> similitude_image() const;
  /// Sub-spec with the given generators (as matrices) and the same ambient data.
  GroupSpec subgroup_spec(const Subgroup &H, const std::string &name = "") const;
  /// Greedy generating set from seeded random elements.
  std::vector<std::uint32_t> small_generating_set(std::uint64_t seed) const;
  std::uint32_t random_element(Rng &rng) const { return static_cast<std::uint32_t>(below(rng, count_)); }

private:
  Group() = default;
  void build(std::uint64_t cap);
  std::string key(const Elt *e) const;
  void mul_raw(const Elt *x, const Elt *y, Elt *out) const;

  GroupSpec spec_;
  Ring R_;
  int nn_ = 0;
  std::size_t count_ = 0;
  std::vector<Elt> data_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<std::uint32_t> parent_, pgen_, inv_, gen_idx_;
  std::vector<std::vector<std::uint32_t>> rmul_;

  mutable std::once_flag classes_once_, derived_once_, orders_once_;
  mutable std::vector<ConjClass> classes_;
  mutable std::vector<std::uint32_t> class_of_;
  mutable std::vector<std::uint32_t> orders_;
  mutable Subgroup derived_;
  void compute_classes() const;
};

using GroupPtr = std::shared_ptr<const Group>;

/// Enumerate a subgroup as a standalone group (own BFS tree and tables).
GroupPtr enumerate_subgroup(const Group &G, const Subgroup &H, const std::string &name = "");

/// g with g^-1 H1 g = H2, or nullopt.
std::optional<std::uint32_t> subgroup_conjugacy_test(const Group &G, const Subgroup &H1, const Subgroup &H2);

/// Closures of seeded random tuples of elements, deduplicated up to conjugacy in G.
std::vector<Subgroup> random_subgroup_search(const Group &G, std::uint64_t seed, int num_gens, int samples);

/// For groups too large to enumerate: random tuples drawn by product replacement from the
/// spec's generators. Each result is a sub-spec; duplicates with equal generated element
/// sets are removed when the subgroup is enumerable, otherwise only exact generator repeats.
struct SampledSubgroup {
  GroupSpec spec;
  GroupPtr group;  // null when the subgroup exceeded the cap
  std::uint64_t partial = 0;
};
std::vector<SampledSubgroup> random_subgroup_search_pr(const GroupSpec &ambient, std::uint64_t seed, int num_gens,
                                                       int samples, std::uint64_t cap);

/// Product-replacement random element generator.
class ProductReplacement {
public:
  ProductReplacement(const std::vector<Mat> &gens, std::uint64_t seed, int warmup = 60);
  Mat next();

private:
  std::vector<Mat> slots_;
  Mat acc_;
  Rng rng_;
};

} // namespace adq
