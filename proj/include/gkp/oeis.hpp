#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gkp/numeric.hpp"
#include "gkp/params.hpp"

namespace gkp {

struct OeisEntry {
  enum class Source { Network, Fixture };
  std::string anum;
  std::vector<Integer> values;
  Source source = Source::Fixture;
};

std::string_view to_string(OeisEntry::Source s);

/// Maps the flattened entry onto the triangle: recurrence row n >= row_offset
/// contributes |n k| for k = k_offset .. n - k_trim, rows in order.
struct TriangleLayout {
  int row_offset = 0;
  int k_offset = 0;
  int k_trim = 0;
};

/// "A" followed by exactly six digits.
bool valid_anum(std::string_view anum);

/// Lines "index value"; blank lines and '#' comments are skipped. Indices
/// must be consecutive. Throws MalformedLine / NonConsecutiveIndex.
OeisEntry parse_bfile(std::string_view text, const std::string& anum = "");

struct FixtureInfo {
  std::string anum;
  std::string name;
  std::string file;
  TriangleLayout layout;
  ParamTuple params;
};

/// Fixture manifest: A-number -> file, layout and generating tuple.
std::map<std::string, FixtureInfo> load_manifest(const std::filesystem::path& fixture_dir);

/// Directory holding the committed fixtures (GKP_FIXTURE_DIR overrides the
/// compiled-in default).
std::filesystem::path default_fixture_dir();

/// GKP_CACHE_DIR, else ./.oeis-cache
std::filesystem::path default_cache_dir();

struct FetchOptions {
  std::filesystem::path cache_dir = default_cache_dir();
  std::filesystem::path fixture_dir = default_fixture_dir();
  bool offline = false;
  std::string base_url = "https://oeis.org";
};

/// Fixture first, then the cache, then one GET of {base_url}/bNNNNNN.txt
/// whose body is stored verbatim in the cache. Offline lookups never reach
/// the network.
OeisEntry fetch(const std::string& anum, const FetchOptions& opts = {});

struct VerifyReport {
  bool match = false;
  bool skipped = false;  // triangle has non-integer entries
  int last_row = -1;     // last recurrence row compared completely
  struct Mismatch {
    int n = 0, k = 0;
    Integer expected;
    Rational got;
  };
  std::optional<Mismatch> mismatch;
  std::string note;
};

VerifyReport verify_against(const ParamTuple& p, const OeisEntry& e, const TriangleLayout& layout,
                            int N);

}  // namespace gkp
