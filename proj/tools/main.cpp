#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "adq/cli.hpp"
#include "adq/fixtures.hpp"
#include "adq/heights.hpp"
#include "adq/lift.hpp"

using namespace adq;

namespace {

std::vector<std::uint64_t> parse_primes(const std::string &s) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) {
      std::int64_t v = std::stoll(tok);
      if (!is_prime(v)) throw Error(Errc::Input, "not a prime: " + tok);
      out.push_back(static_cast<std::uint64_t>(v));
    }
  return out;
}

GroupSpec load_group(const std::string &arg) {
  if (std::filesystem::exists(arg)) return cli::parse_group(cli::read_file(arg));
  return fixtures::by_name(arg).spec;
}

void emit(const std::string &path, const std::string &content) {
  if (path.empty() || path == "-")
    std::cout << content;
  else
    cli::write_file(path, content);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Adequacy, cohomology and lifting computations for small classical groups"};
  app.require_subcommand(1);
  cli::JobConfig cfg;
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--max-order", cfg.max_order, "Enumeration cap")->capture_default_str();
  app.add_option("--threads", cfg.threads, "Worker threads")->capture_default_str();
  app.add_option("--cache", cfg.cache_dir, "Report cache directory");

  auto *assess_cmd = app.add_subcommand("assess", "Adequacy reports for groups in a JSON file");
  std::string input, report = "-", json_out;
  assess_cmd->add_option("--input", input, "Group file (object or array) or fixture name")->required();
  assess_cmd->add_option("--report", report, "CSV output (default stdout)");
  assess_cmd->add_option("--json", json_out, "JSON output");

  auto *search_cmd = app.add_subcommand("search", "Random subgroup search");
  std::string ambient = "sp4_f3", outdir, summary = "-";
  search_cmd->add_option("--ambient", ambient, "Ambient fixture name or group file")->capture_default_str();
  search_cmd->add_option("--samples", cfg.samples, "Number of random tuples")->capture_default_str();
  search_cmd->add_option("--gens", cfg.num_gens, "Generators per tuple")->capture_default_str();
  search_cmd->add_option("--out", outdir, "Directory for subgroup group files");
  search_cmd->add_option("--summary", summary, "Summary CSV (default stdout)");

  auto *coh_cmd = app.add_subcommand("cohomology", "h0 and h1 of a module");
  std::string group_arg, module = "adjoint";
  bool oracle = false;
  coh_cmd->add_option("--group", group_arg, "Group file or fixture name")->required();
  coh_cmd->add_option("--module", module, "trivial|natural|adjoint|adjoint-dual")
      ->check(CLI::IsMember({"trivial", "natural", "adjoint", "adjoint-dual"}));
  coh_cmd->add_flag("--oracle", oracle, "Also run the all-pairs computation");

  auto *demo_cmd = app.add_subcommand("lift-demo", "Invariant direct summand lift of one matrix");
  std::string ring_tag, matrix, split = "eigen=1";
  demo_cmd->add_option("--ring", ring_tag, "Zmod[p,N] or Dual[p]")->required();
  demo_cmd->add_option("--matrix", matrix, "Rows separated by ';', entries by ','")->required();
  demo_cmd->add_option("--split", split, "eigen=<value>, topnil, or factor=<c0,c1,..> (residue, lowest first)");

  auto *check_cmd = app.add_subcommand("lift-check", "Seeded self-checks of the lifting code");
  int check_count = 50;
  check_cmd->add_option("--count", check_count, "Number of random cases")->capture_default_str();

  auto *heights_cmd = app.add_subcommand("heights", "Point count against the leading constant");
  std::string primes;
  std::int64_t X = 2000;
  std::string heights_csv;
  heights_cmd->add_option("--primes", primes, "Comma-separated primes in the unit condition");
  heights_cmd->add_option("--X", X, "Height bound")->capture_default_str();
  heights_cmd->add_option("--csv", heights_csv, "Also write the line to this CSV file");

  auto *root_cmd = app.add_subcommand("rootdata", "Weyl group order and bad primes of a root datum");
  std::string root_name = "C2", root_file;
  std::int64_t bound = 100;
  root_cmd->add_option("--name", root_name, "Built-in datum")->capture_default_str();
  root_cmd->add_option("--file", root_file, "Datum file");
  root_cmd->add_option("--bound", bound, "Prime bound")->capture_default_str();

  auto *fix_cmd = app.add_subcommand("fixtures", "List or export the fixture library");
  std::string fix_dir, fix_name;
  fix_cmd->add_option("--write", fix_dir, "Write every fixture as <dir>/<name>.json");
  fix_cmd->add_option("--name", fix_name, "Print one fixture as JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*assess_cmd) {
      std::vector<GroupSpec> groups;
      if (std::filesystem::exists(input))
        groups = cli::parse_groups(cli::read_file(input));
      else
        groups.push_back(fixtures::by_name(input).spec);
      cli::AssessOutput out = cli::run_assess(groups, cfg);
      emit(report, out.csv);
      if (!json_out.empty()) cli::write_file(json_out, out.json);
      return out.capped ? 2 : 0;
    }
    if (*search_cmd) {
      GroupSpec amb = load_group(ambient);
      cli::SearchOutput out = cli::run_search(amb, cfg);
      if (!outdir.empty()) {
        std::filesystem::create_directories(outdir);
        for (const auto &e : out.entries) cli::write_file(outdir + "/" + e.spec.name + ".json", cli::group_to_json(e.spec));
      }
      emit(summary, "# seed " + std::to_string(cfg.seed) + "\n" + out.summary_csv);
      return 0;
    }
    if (*coh_cmd) {
      auto G = Group::enumerate(load_group(group_arg), cfg.max_order);
      GModule M = natural_module(G);
      if (module == "trivial") M = trivial_module(G, G->spec().F);
      if (module == "adjoint" || module == "adjoint-dual") M = adjoint_module(G, lie_for(G->spec()));
      if (module == "adjoint-dual") M = dual_module(M);
      std::cout << "order " << G->order() << "\nmodule " << module << " (dim " << M.d << ")\n";
      std::cout << "h0 " << h0_dim(M) << "\nh1 " << h1_dim(M, cfg.seed) << "\n";
      if (oracle) std::cout << "h1_bruteforce " << h1_bruteforce(M) << "\n";
      return 0;
    }
    if (*demo_cmd) {
      Ring R = Ring::parse_tag(ring_tag);
      Mat f = parse_mat(matrix, R);
      if (!f.square()) throw Error(Errc::Input, "matrix must be square");
      const Field &F = R.residue_field();
      Poly pb;
      if (split == "topnil") {
        pb = eigen_factor(f, 0);
      } else if (split.rfind("eigen=", 0) == 0) {
        pb = eigen_factor(f, F.parse(split.substr(6)));
      } else if (split.rfind("factor=", 0) == 0) {
        std::vector<std::int64_t> c;
        std::stringstream ss(split.substr(7));
        for (std::string t; std::getline(ss, t, ',');) c.push_back(std::stoll(t));
        pb = Poly::from_ints(F, c);
      } else {
        throw Error(Errc::Input, "unknown split '" + split + "'");
      }
      std::cout << "charpoly " << charpoly(f).str() << "\n";
      if (pb.deg() > 0) {
        HenselSplit h = hensel_factor(f, pb);
        std::cout << "p " << h.p.str() << "\nq " << h.q.str() << "\n";
      }
      Summand N = invariant_summand_lift(f, pb);
      std::cout << "rank " << N.rank() << "\n";
      for (int j = 0; j < N.rank(); ++j) {
        std::cout << "basis";
        for (Elt e : N.vector(j)) std::cout << ' ' << R.format(e);
        std::cout << "\n";
      }
      return 0;
    }
    if (*check_cmd) {
      cli::LiftCheckOutput out = cli::run_lift_check(cfg.seed, check_count);
      for (const auto &m : out.messages) std::cout << m << "\n";
      std::cout << "checked " << out.checked << " failures " << out.failures << "\n";
      return out.failures ? 3 : 0;
    }
    if (*heights_cmd) {
      auto sigma = parse_primes(primes);
      auto Q = NumberFieldInvariants::rationals();
      double C = schanuel_constant(Q, sigma);
      std::uint64_t count = brute_count_Q(sigma, X, cfg.threads);
      double expected = C * static_cast<double>(X) * static_cast<double>(X);
      std::ostringstream line;
      line << std::setprecision(10) << X << ',' << count << ',' << expected << ','
           << static_cast<double>(count) / expected << "\n";
      std::cout << "# affine points (a:1), point at infinity excluded\nX,count,C_sigma_X2,ratio\n" << line.str();
      if (!heights_csv.empty()) cli::write_file(heights_csv, "X,count,C_sigma_X2,ratio\n" + line.str());
      return 0;
    }
    if (*root_cmd) {
      RootDatum d = root_file.empty() ? builtin_root_datum(root_name) : parse_root_datum(cli::read_file(root_file));
      validate_root_datum(d);
      std::uint64_t w = weyl_order(d);
      auto bad = bad_primes(d, bound);
      std::cout << "datum " << d.name << "\nrank " << d.r << "\nroots " << d.roots.size() << "\nweyl_order " << w
                << "\nbad_primes";
      for (auto l : bad) std::cout << ' ' << l;
      std::cout << "\n";
      return 0;
    }
    if (*fix_cmd) {
      if (!fix_name.empty()) {
        std::cout << cli::group_to_json(fixtures::by_name(fix_name).spec);
        return 0;
      }
      if (!fix_dir.empty()) std::filesystem::create_directories(fix_dir);
      for (const auto &f : fixtures::library()) {
        std::cout << f.name << (f.experimental ? " [experimental]" : "") << "  " << f.description << "\n";
        if (!fix_dir.empty()) cli::write_file(fix_dir + "/" + f.name + ".json", cli::group_to_json(f.spec));
      }
      return 0;
    }
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::exit_code_for(e.code());
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
