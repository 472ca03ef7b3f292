#include <algorithm>
#include <cstdio>

#include <json.hpp>

#include "adq/cli.hpp"

namespace adq::cli {

using nlohmann::json;

namespace {

Tri tri_from(const std::string &s) {
  if (s == "T") return Tri::True;
  if (s == "F") return Tri::False;
  return Tri::Unknown;
}

} // namespace

std::string report_to_json(const AdequacyReport &r, int indent) {
  json j;
  j["name"] = r.name;
  j["order_gamma_prime"] = r.order_gamma_prime;
  j["order_gamma"] = r.order_gamma;
  j["similitude_surjective"] = r.similitude_surjective;
  j["abs_irred"] = r.abs_irred;
  j["condA"] = tri_name(r.condA);
  j["condB"] = tri_name(r.condB);
  j["spanA_dim"] = r.spanA_dim;
  j["spanB_dim"] = r.spanB_dim;
  j["h0_adjoint_dual"] = r.h0_adjoint_dual;
  j["h1_trivial"] = r.h1_trivial;
  j["h1_adjoint"] = r.h1_adjoint;
  j["h1_adjoint_dual"] = r.h1_adjoint_dual;
  j["adequate"] = tri_name(r.adequate);
  j["tidy"] = r.tidy;
  j["tidy_witness"] = r.tidy_witness;
  j["induced"] = r.induced;
  j["split_induced"] = r.split_induced;
  j["fingerprint"] = {{"order", r.fp.order},
                      {"classes", r.fp.classes},
                      {"abelianization", r.fp.abelianization},
                      {"center", r.fp.center}};
  j["seed"] = r.seed;
  j["notes"] = r.notes;
  return j.dump(indent);
}

AdequacyReport report_from_json(const std::string &text) {
  try {
    json j = json::parse(text);
    AdequacyReport r;
    r.name = j.at("name");
    r.order_gamma_prime = j.at("order_gamma_prime");
    r.order_gamma = j.at("order_gamma");
    r.similitude_surjective = j.at("similitude_surjective");
    r.abs_irred = j.at("abs_irred");
    r.condA = tri_from(j.at("condA"));
    r.condB = tri_from(j.at("condB"));
    r.spanA_dim = j.at("spanA_dim");
    r.spanB_dim = j.at("spanB_dim");
    r.h0_adjoint_dual = j.at("h0_adjoint_dual");
    r.h1_trivial = j.at("h1_trivial");
    r.h1_adjoint = j.at("h1_adjoint");
    r.h1_adjoint_dual = j.at("h1_adjoint_dual");
    r.adequate = tri_from(j.at("adequate"));
    r.tidy = j.at("tidy");
    r.tidy_witness = j.at("tidy_witness");
    r.induced = j.at("induced");
    r.split_induced = j.at("split_induced");
    const json &f = j.at("fingerprint");
    r.fp.order = f.at("order");
    r.fp.classes = f.at("classes");
    r.fp.abelianization = f.at("abelianization");
    r.fp.center = f.at("center");
    r.seed = j.at("seed");
    r.notes = j.at("notes");
    return r;
  } catch (const json::exception &e) {
    throw Error(Errc::Input, std::string("bad report JSON: ") + e.what());
  }
}

std::string cache_key(const Group &G, const std::string &tag) {
  std::vector<std::string> enc;
  enc.reserve(G.order());
  std::size_t nn = static_cast<std::size_t>(G.n()) * G.n();
  for (std::uint32_t i = 0; i < G.order(); ++i) {
    const Elt *e = G.raw(i);
    std::string s;
    for (std::size_t t = 0; t < nn; ++t) s += std::to_string(e[t]) + ",";
    enc.push_back(std::move(s));
  }
  std::sort(enc.begin(), enc.end());
  std::uint64_t h = 1469598103934665603ull;
  auto feed = [&](const std::string &s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  feed(G.spec().F.format(0) + "|" + std::to_string(G.spec().F.q()) + "|" + ambient_name(G.spec().ambient) + "|" + tag);
  if (G.spec().J.rows) feed(format_mat(G.spec().J));
  for (const auto &s : enc) feed(s + ";");
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

} // namespace adq::cli
