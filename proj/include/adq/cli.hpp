#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adq/adequacy.hpp"

namespace adq::cli {

// ---- group files ----------------------------------------------------------

/// One group object, or an array of them.
std::vector<GroupSpec> parse_groups(const std::string &text);
GroupSpec parse_group(const std::string &text);
std::string group_to_json(const GroupSpec &s, int indent = 2);
std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &content);

// ---- reports --------------------------------------------------------------

std::string report_to_json(const AdequacyReport &r, int indent = 2);
AdequacyReport report_from_json(const std::string &text);

/// FNV-1a over the sorted element encodings of the group plus a tag string.
std::string cache_key(const Group &G, const std::string &tag);

// ---- pipelines ------------------------------------------------------------

struct JobConfig {
  std::uint64_t seed = 1;
  std::uint64_t max_order = Group::kDefaultCap;
  int threads = 1;
  std::string cache_dir;
  int samples = 200;
  int num_gens = 2;
};

struct AssessOutput {
  std::vector<AdequacyReport> reports;
  std::string csv;
  std::string json;
  bool capped = false;
  int cache_hits = 0;
};
/// One row per input, in input order; a group over the cap gets a row noting the partial count.
AssessOutput run_assess(const std::vector<GroupSpec> &groups, const JobConfig &cfg);

struct SearchEntry {
  GroupSpec spec;
  bool enumerated = false;
  std::uint64_t order = 0;    // 0 when not enumerated
  std::uint64_t partial = 0;  // elements reached before the cap
  bool abs_irred = false;
  Tri condA = Tri::Unknown;
  int h0_adjoint = 0;
  Tri adequate = Tri::Unknown;
  std::string notes;
};
struct SearchOutput {
  std::vector<SearchEntry> entries;
  std::string summary_csv;
};
/// Random num_gens-generated subgroups of the ambient group. Enumerable ambients are searched
/// by element tuples with conjugacy deduplication; larger ones by product replacement.
SearchOutput run_search(const GroupSpec &ambient, const JobConfig &cfg);

struct LiftCheckOutput {
  int checked = 0;
  int failures = 0;
  std::vector<std::string> messages;
};
/// Self-consistency checks of the lifting code on seeded random inputs.
LiftCheckOutput run_lift_check(std::uint64_t seed, int count);

/// Process exit code for an error: 1 input, 2 cap, 3 invariant or other internal failure.
int exit_code_for(Errc c);

} // namespace adq::cli
