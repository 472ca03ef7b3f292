#include <fstream>
#include <sstream>

#include <json.hpp>

#include "adq/cli.hpp"

namespace adq::cli {

using nlohmann::json;

namespace {

Elt parse_elt(const Field &F, const json &v) {
  if (v.is_number_integer()) return F.from_int(v.get<std::int64_t>());
  if (v.is_string()) return F.parse(v.get<std::string>());
  if (v.is_array()) {
    std::vector<int> c;
    for (const auto &x : v) c.push_back(x.get<int>());
    return F.from_coeffs(c);
  }
  throw Error(Errc::Input, "matrix entry must be an integer, string or coefficient list");
}

json elt_json(const Field &F, Elt a) {
  if (F.prime()) return a;
  return F.format(a);
}

Mat parse_matrix(const Field &F, int n, const json &m, const std::string &what) {
  if (!m.is_array() || static_cast<int>(m.size()) != n) throw Error(Errc::Input, what + ": expected " + std::to_string(n) + " rows");
  Mat out(Ring::field(F), n, n);
  for (int i = 0; i < n; ++i) {
    if (!m[i].is_array() || static_cast<int>(m[i].size()) != n)
      throw Error(Errc::Input, what + ": row " + std::to_string(i) + " has the wrong length");
    for (int j = 0; j < n; ++j) out(i, j) = parse_elt(F, m[i][j]);
  }
  return out;
}

json matrix_json(const Mat &m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json r = json::array();
    for (int j = 0; j < m.cols; ++j) r.push_back(elt_json(m.R.residue_field(), m(i, j)));
    rows.push_back(r);
  }
  return rows;
}

GroupSpec group_from(const json &j, std::size_t index) {
  std::string where = "group " + std::to_string(index);
  try {
    GroupSpec s;
    int p = j.at("p").get<int>();
    int k = j.value("ext_degree", 1);
    s.F = Field::create(p, k);
    s.n = j.at("n").get<int>();
    if (s.n < 1) throw Error(Errc::Input, "n must be positive");
    s.ambient = parse_ambient(j.at("ambient").get<std::string>());
    s.name = j.value("name", std::string());
    if (j.contains("form") && !j["form"].is_null()) {
      s.J = parse_matrix(s.F, s.n, j["form"], "form");
    } else if (is_symplectic(s.ambient) || is_orthogonal(s.ambient)) {
      s.J = standard_form(s.ambient, s.n, s.F);
    }
    const json &gens = j.at("generators");
    if (!gens.is_array()) throw Error(Errc::Input, "generators must be a list");
    for (std::size_t g = 0; g < gens.size(); ++g)
      s.gens.push_back(parse_matrix(s.F, s.n, gens[g], "generator " + std::to_string(g)));
    validate(s);
    return s;
  } catch (const json::exception &e) {
    throw Error(Errc::Input, where + ": " + e.what());
  } catch (const Error &e) {
    throw Error(e.code(), where + ": " + e.what());
  }
}

} // namespace

std::vector<GroupSpec> parse_groups(const std::string &text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error &e) {
    throw Error(Errc::Input, std::string("JSON parse error: ") + e.what());
  }
  std::vector<GroupSpec> out;
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(group_from(j[i], i));
  } else if (j.is_object() && j.contains("groups")) {
    for (std::size_t i = 0; i < j["groups"].size(); ++i) out.push_back(group_from(j["groups"][i], i));
  } else {
    out.push_back(group_from(j, 0));
  }
  return out;
}

GroupSpec parse_group(const std::string &text) {
  auto v = parse_groups(text);
  if (v.size() != 1) throw Error(Errc::Input, "expected exactly one group");
  return v[0];
}

std::string group_to_json(const GroupSpec &s, int indent) {
  json j;
  j["name"] = s.name;
  j["p"] = s.F.p();
  j["ext_degree"] = s.F.k();
  j["ambient"] = ambient_name(s.ambient);
  j["n"] = s.n;
  j["form"] = s.J.rows ? matrix_json(s.J) : json(nullptr);
  json gens = json::array();
  for (const Mat &g : s.gens) gens.push_back(matrix_json(g));
  j["generators"] = gens;
  return j.dump(indent) + "\n";
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Input, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::Input, "cannot write " + path);
  out << content;
}

} // namespace adq::cli
