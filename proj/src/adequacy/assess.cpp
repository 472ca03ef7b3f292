#include <sstream>

#include "adq/adequacy.hpp"

namespace adq {

Fingerprint fingerprint(const Group &G) {
  Fingerprint f;
  f.order = G.order();
  f.classes = G.classes().size();
  f.abelianization = G.order() / G.derived().order();
  f.center = G.center().order();
  return f;
}

GroupPtr symplectic_part(const GroupPtr &Gp) {
  if (Gp->spec().ambient != Ambient::GSp) return Gp;
  std::vector<Elt> nu = Gp->similitude_image();
  std::vector<std::uint32_t> gens;
  for (std::uint32_t x = 0; x < Gp->order(); ++x)
    if (nu[x] == 1) gens.push_back(x);
  Subgroup H = Gp->closure(gens);
  return enumerate_subgroup(*Gp, H, Gp->spec().name + "_sp");
}

AdequacyReport assess(const GroupPtr &Gp, const AssessOptions &opt) {
  AdequacyReport r;
  r.seed = opt.seed;
  r.name = Gp->spec().name;
  r.order_gamma_prime = Gp->order();
  GroupPtr G = symplectic_part(Gp);
  r.order_gamma = G->order();
  r.fp = fingerprint(*Gp);
  if (Gp->spec().ambient == Ambient::GSp) {
    std::vector<Elt> nu = Gp->similitude_image();
    std::vector<char> hit(Gp->spec().F.q(), 0);
    for (Elt v : nu) hit[v] = 1;
    std::size_t count = 0;
    for (char c : hit) count += c;
    r.similitude_surjective = count == Gp->spec().F.q() - 1;
  }
  std::vector<std::string> notes;
  if (Gp->spec().ambient == Ambient::GSp && !r.similitude_surjective) notes.push_back("similitude not surjective");

  r.abs_irred = abs_irreducible(natural_module(G));
  ClassicalLieData lie = lie_for(G->spec());
  SpanResult A = spanning_sum_A(G, lie), B = spanning_sum_B(G, lie);
  r.condA = A.verdict;
  r.condB = B.verdict;
  r.spanA_dim = A.dim;
  r.spanB_dim = B.dim;
  GModule ad = adjoint_module(G, lie);
  GModule add = dual_module(ad);
  r.h0_adjoint_dual = h0_dim(add);
  r.h1_trivial = h1_dim(trivial_module(G, G->spec().F), opt.seed);
  r.h1_adjoint = h1_dim(ad, opt.seed);
  r.h1_adjoint_dual = h1_dim(add, opt.seed);
  r.adequate = tri_and(r.condA, tri(r.h0_adjoint_dual == 0 && r.h1_trivial == 0 && r.h1_adjoint_dual == 0));
  if (r.condA == Tri::Unknown) notes.push_back("spanning sum is a lower bound");
  if (!r.abs_irred) notes.push_back("reducible");
  if (opt.structure) {
    if (Gp->spec().ambient == Ambient::GSp) {
      TidyResult t = tidy_check(*Gp);
      r.tidy = t.tidy;
      r.tidy_witness = t.witness;
    }
    if (r.abs_irred) {
      InducedResult in = induced_checks(*G);
      r.induced = in.induced;
      r.split_induced = in.split_induced;
    }
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < notes.size(); ++i) os << (i ? "; " : "") << notes[i];
  r.notes = os.str();
  return r;
}

const char *const kCsvHeader =
    "order_gamma_prime,order_gamma,condA,condB,h1_adjoint,h1_trivial,adequate,tidy,induced,split_induced,abs_irred,notes";

namespace {

const char *tf(bool b) { return b ? "T" : "F"; }

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

} // namespace

std::string csv_row(const AdequacyReport &r) {
  std::ostringstream os;
  os << r.order_gamma_prime << ',' << r.order_gamma << ',' << tri_name(r.condA) << ',' << tri_name(r.condB) << ','
     << r.h1_adjoint << ',' << r.h1_trivial << ',' << tri_name(r.adequate) << ',' << tf(r.tidy) << ','
     << tf(r.induced) << ',' << tf(r.split_induced) << ',' << tf(r.abs_irred) << ',' << csv_field(r.notes);
  return os.str();
}

} // namespace adq
