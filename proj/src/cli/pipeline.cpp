#include <atomic>
#include <filesystem>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "adq/cli.hpp"
#include "adq/lift.hpp"

namespace adq::cli {

namespace {

// Run f(i) for i in [0, n) on up to `threads` workers.
template <typename F>
void parallel_for(std::size_t n, int threads, F f) {
  threads = std::max(1, std::min<int>(threads, static_cast<int>(n)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::mutex mu;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!err) err = std::current_exception();
        }
      }
    });
  for (auto &th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

} // namespace

int exit_code_for(Errc c) {
  switch (c) {
  case Errc::Input:
  case Errc::InvalidGenerator:
  case Errc::AmbientMismatch:
  case Errc::ResidueCondition:
  case Errc::NotCoprime:
  case Errc::NotCommuting:
  case Errc::NotSemisimple:
  case Errc::EigenvaluesNotRational:
  case Errc::ResidueNotSemisimple: return 1;
  case Errc::CapExceeded:
  case Errc::OrderCap:
  case Errc::SubsetBudgetExceeded: return 2;
  default: return 3;
  }
}

AssessOutput run_assess(const std::vector<GroupSpec> &groups, const JobConfig &cfg) {
  AssessOutput out;
  out.reports.resize(groups.size());
  std::vector<char> capped(groups.size(), 0), hit(groups.size(), 0);
  if (!cfg.cache_dir.empty()) std::filesystem::create_directories(cfg.cache_dir);
  parallel_for(groups.size(), cfg.threads, [&](std::size_t i) {
    AdequacyReport &r = out.reports[i];
    GroupPtr G;
    try {
      G = Group::enumerate(groups[i], cfg.max_order);
    } catch (const Error &e) {
      if (e.code() != Errc::CapExceeded) throw;
      capped[i] = 1;
      r.name = groups[i].name;
      r.seed = cfg.seed;
      r.adequate = r.condA = r.condB = Tri::Unknown;
      r.notes = "CAP_EXCEEDED after " + std::to_string(e.partial()) + " elements";
      return;
    }
    std::string path;
    if (!cfg.cache_dir.empty()) {
      path = cfg.cache_dir + "/" + cache_key(*G, "assess-v1-seed" + std::to_string(cfg.seed)) + ".json";
      if (std::filesystem::exists(path)) {
        r = report_from_json(read_file(path));
        r.name = groups[i].name;
        hit[i] = 1;
        return;
      }
    }
    AssessOptions opt;
    opt.seed = cfg.seed;
    r = assess(G, opt);
    if (!path.empty()) write_file(path, report_to_json(r));
  });
  std::ostringstream csv;
  csv << kCsvHeader << "\n";
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < groups.size(); ++i) {
    csv << csv_row(out.reports[i]) << "\n";
    arr.push_back(nlohmann::json::parse(report_to_json(out.reports[i])));
    out.capped = out.capped || capped[i];
    out.cache_hits += hit[i];
  }
  out.csv = csv.str();
  out.json = arr.dump(2) + "\n";
  return out;
}

namespace {

void fill_enumerated(SearchEntry &e, const GroupPtr &H, std::uint64_t seed) {
  e.enumerated = true;
  e.order = H->order();
  AssessOptions opt;
  opt.seed = seed;
  opt.structure = false;
  AdequacyReport r = assess(H, opt);
  e.abs_irred = r.abs_irred;
  e.condA = r.condA;
  e.adequate = r.adequate;
  GroupPtr G = symplectic_part(H);
  e.h0_adjoint = h0_dim(adjoint_module(G, lie_for(G->spec())));
  e.notes = r.notes;
}

} // namespace

SearchOutput run_search(const GroupSpec &ambient, const JobConfig &cfg) {
  SearchOutput out;
  GroupPtr G;
  try {
    G = Group::enumerate(ambient, cfg.max_order);
  } catch (const Error &e) {
    if (e.code() != Errc::CapExceeded) throw;
  }
  if (G) {
    auto subs = random_subgroup_search(*G, cfg.seed, cfg.num_gens, cfg.samples);
    out.entries.resize(subs.size());
    parallel_for(subs.size(), cfg.threads, [&](std::size_t i) {
      GroupPtr H = enumerate_subgroup(*G, subs[i], ambient.name + "_sub" + std::to_string(i));
      out.entries[i].spec = H->spec();
      fill_enumerated(out.entries[i], H, cfg.seed);
    });
  } else {
    auto subs = random_subgroup_search_pr(ambient, cfg.seed, cfg.num_gens, cfg.samples, cfg.max_order);
    out.entries.resize(subs.size());
    parallel_for(subs.size(), cfg.threads, [&](std::size_t i) {
      SearchEntry &e = out.entries[i];
      e.spec = subs[i].spec;
      e.spec.name = ambient.name + "_sub" + std::to_string(i);
      if (subs[i].group) {
        fill_enumerated(e, subs[i].group, cfg.seed);
        return;
      }
      e.partial = subs[i].partial;
      GeneratorReport g = assess_generators(e.spec, cfg.seed + i);
      e.abs_irred = g.abs_irred;
      e.condA = g.condA;
      e.h0_adjoint = g.h0_adjoint;
      e.adequate = Tri::Unknown;
      e.notes = "not enumerated; more than " + std::to_string(e.partial) + " elements";
    });
  }
  std::ostringstream csv;
  csv << "index,order,abs_irred,condA,h0_adjoint,adequate,notes\n";
  for (std::size_t i = 0; i < out.entries.size(); ++i) {
    const SearchEntry &e = out.entries[i];
    csv << i << ',' << (e.enumerated ? std::to_string(e.order) : std::string("?")) << ','
        << (e.abs_irred ? "T" : "F") << ',' << tri_name(e.condA) << ',' << e.h0_adjoint << ','
        << tri_name(e.adequate) << ',' << e.notes << "\n";
  }
  out.summary_csv = csv.str();
  return out;
}

LiftCheckOutput run_lift_check(std::uint64_t seed, int count) {
  LiftCheckOutput out;
  Rng rng(seed);
  auto fail = [&](const std::string &m) {
    ++out.failures;
    out.messages.push_back(m);
  };
  for (int it = 0; it < count; ++it) {
    int p = it % 2 ? 5 : 3;
    Ring R = Ring::zmod(p, 2 + static_cast<int>(below(rng, 2)));
    Ring F = Ring::field(R.residue_field());
    // invariant summand lift of a random matrix at one residue eigenvalue
    int n = 2 + static_cast<int>(below(rng, 3));
    Mat f(R, n, n);
    for (auto &e : f.a) e = static_cast<Elt>(below(rng, R.size()));
    auto roots = roots_exhaustive(charpoly(f).residue());
    if (!roots.empty()) {
      Poly pb = eigen_factor(f, roots[below(rng, roots.size())]);
      Mat e = lift_idempotent(f, pb);
      Summand N = image(e);
      Mat fN = f * N.basis;
      bool stable = true;
      for (int j = 0; j < fN.cols; ++j) stable = stable && N.contains(fN.col(j));
      Mat kb = kernel_basis(eval_at(RPoly::lift(F, pb), change_ring(f, F)));
      if (e * e != e) fail("idempotent check failed for " + format_mat(f));
      if (!stable) fail("lift is not f-stable for " + format_mat(f));
      if (N.rank() != pb.deg() || make_summand(change_ring(N.basis, F)) != make_summand(kb))
        fail("lift does not reduce to the residue kernel for " + format_mat(f));
    }
    // L0 for a random element of GSp4 over Z/p^3
    Ring R3 = Ring::zmod(p, 3), R2 = Ring::zmod(p, 2);
    Mat g;
    for (;;) {
      g = random_gsp4_element(R3, rng);
      Poly m = minpoly(change_ring(g, Ring::field(R3.residue_field())));
      if (gcd(m, m.derivative()).deg() == 0) break;
    }
    try {
      LieLift L = l0_of(g);
      std::vector<Elt> w = {static_cast<Elt>(p), 0, static_cast<Elt>(p * below(rng, p)), static_cast<Elt>(p)};
      Mat h = transvection(symplectic_form(R3, 4), w);
      LieLift C = l0_of(h * g * *inverse(h));
      if (C.L0 != make_summand(ad_matrix(h, L.alg) * L.L0.basis)) fail("conjugation check failed for " + format_mat(g));
      LieLift D = l0_of(change_ring(g, R2));
      if (make_summand(change_ring(L.alg.basis * L.L0.basis, R2)) != make_summand(D.alg.basis * D.L0.basis))
        fail("change of ring check failed for " + format_mat(g));
    } catch (const Error &e) {
      fail(std::string("L0 check raised ") + e.what());
    }
    ++out.checked;
  }
  return out;
}

} // namespace adq::cli
