#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "gkp/oeis.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gkp/error.hpp"
#include "gkp/triangle.hpp"
#include "httplib.h"
#include "json.hpp"

#ifndef GKP_FIXTURE_DIR
#define GKP_FIXTURE_DIR "data/oeis"
#endif

namespace gkp {

namespace fs = std::filesystem;

std::string_view to_string(OeisEntry::Source s) {
  return s == OeisEntry::Source::Network ? "network" : "fixture";
}

bool valid_anum(std::string_view anum) {
  if (anum.size() != 7 || anum[0] != 'A') return false;
  for (std::size_t i = 1; i < anum.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(anum[i]))) return false;
  }
  return true;
}

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_int_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string bfile_name(const std::string& anum) { return "b" + anum.substr(1) + ".txt"; }

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Exclusive lock on <dir>/.lock for the lifetime of the object.
class DirLock {
 public:
  explicit DirLock(const fs::path& dir) {
    fd_ = ::open((dir / ".lock").c_str(), O_CREAT | O_RDWR, 0644);
    if (fd_ >= 0) ::flock(fd_, LOCK_EX);
  }
  ~DirLock() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
  }
  DirLock(const DirLock&) = delete;
  DirLock& operator=(const DirLock&) = delete;

 private:
  int fd_ = -1;
};

void store_in_cache(const fs::path& dir, const std::string& name, const std::string& body) {
  fs::create_directories(dir);
  DirLock lock(dir);
  const fs::path tmp = dir / (name + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary);
    out << body;
  }
  fs::rename(tmp, dir / name);
}

}  // namespace

OeisEntry parse_bfile(std::string_view text, const std::string& anum) {
  OeisEntry e;
  e.anum = anum;
  std::optional<long long> prev;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    ++line_no;
    line = strip(line);
    if (line.empty() || line.front() == '#') continue;
    const auto sp = line.find_first_of(" \t");
    const std::string_view idx = sp == std::string_view::npos ? line : line.substr(0, sp);
    const std::string_view val = sp == std::string_view::npos ? std::string_view() : strip(line.substr(sp));
    if (!is_int_literal(idx) || !is_int_literal(val)) {
      throw Error(Errc::MalformedLine, "line " + std::to_string(line_no) + ": '" + std::string(line) + "'");
    }
    const long long i = std::stoll(std::string(idx));
    if (prev && i != *prev + 1) {
      throw Error(Errc::NonConsecutiveIndex, "index " + std::to_string(i) + " follows " + std::to_string(*prev));
    }
    prev = i;
    e.values.emplace_back(std::string(val));
  }
  return e;
}

fs::path default_fixture_dir() {
  if (const char* env = std::getenv("GKP_FIXTURE_DIR"); env && *env) return env;
  return GKP_FIXTURE_DIR;
}

fs::path default_cache_dir() {
  if (const char* env = std::getenv("GKP_CACHE_DIR"); env && *env) return env;
  return ".oeis-cache";
}

std::map<std::string, FixtureInfo> load_manifest(const fs::path& fixture_dir) {
  std::map<std::string, FixtureInfo> out;
  const fs::path path = fixture_dir / "manifest.json";
  if (!fs::exists(path)) return out;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(Errc::ParseError, "manifest: " + std::string(ex.what()));
  }
  for (const auto& [anum, v] : j.items()) {
    FixtureInfo f;
    f.anum = anum;
    f.name = v.value("name", "");
    f.file = v.value("file", bfile_name(anum));
    const auto& lay = v.at("layout");
    f.layout.row_offset = lay.value("row_offset", 0);
    f.layout.k_offset = lay.value("k_offset", 0);
    f.layout.k_trim = lay.value("k_trim", 0);
    std::string csv;
    for (const auto& s : v.at("params")) csv += (csv.empty() ? "" : ",") + s.get<std::string>();
    f.params = parse_params(csv);
    out.emplace(anum, std::move(f));
  }
  return out;
}

OeisEntry fetch(const std::string& anum, const FetchOptions& opts) {
  if (!valid_anum(anum)) throw Error(Errc::ParseError, "not an A-number: '" + anum + "'");
  const std::string name = bfile_name(anum);

  std::string fixture_file = name;
  if (auto m = load_manifest(opts.fixture_dir); m.count(anum)) fixture_file = m.at(anum).file;
  if (const fs::path fx = opts.fixture_dir / fixture_file; fs::exists(fx)) {
    OeisEntry e = parse_bfile(read_file(fx), anum);
    e.source = OeisEntry::Source::Fixture;
    return e;
  }
  if (const fs::path cached = opts.cache_dir / name; fs::exists(cached)) {
    OeisEntry e = parse_bfile(read_file(cached), anum);
    e.source = OeisEntry::Source::Network;
    return e;
  }
  if (opts.offline) throw Error(Errc::NotInFixtures, anum + " is neither a fixture nor cached");

  httplib::Result res;
  try {
    httplib::Client cli(opts.base_url);
    cli.set_follow_location(true);
    cli.set_connection_timeout(10);
    cli.set_read_timeout(30);
    res = cli.Get("/" + name);
  } catch (const std::exception& ex) {
    throw Error(Errc::NetworkError, ex.what());
  }
  if (!res) throw Error(Errc::NetworkError, "GET " + opts.base_url + "/" + name + ": " + httplib::to_string(res.error()));
  if (res->status != 200) {
    throw Error(Errc::NetworkError, "GET " + opts.base_url + "/" + name + ": HTTP " + std::to_string(res->status));
  }
  OeisEntry e;
  try {
    e = parse_bfile(res->body, anum);
  } catch (const Error& ex) {
    throw Error(Errc::MalformedResponse, ex.what());
  }
  if (e.values.empty()) throw Error(Errc::MalformedResponse, "empty b-file for " + anum);
  store_in_cache(opts.cache_dir, name, res->body);
  e.source = OeisEntry::Source::Network;
  return e;
}

VerifyReport verify_against(const ParamTuple& p, const OeisEntry& e, const TriangleLayout& layout,
                            int N) {
  VerifyReport rep;
  const Triangle t = triangle(p, N);
  std::size_t idx = 0;
  for (int n = layout.row_offset; n <= N; ++n) {
    const int k_end = n - layout.k_trim;
    if (layout.k_offset <= k_end && idx + static_cast<std::size_t>(k_end - layout.k_offset) >= e.values.size()) {
      rep.note = e.anum + " ends before row " + std::to_string(n);
      rep.match = rep.last_row >= N;
      return rep;
    }
    for (int k = layout.k_offset; k <= k_end; ++k, ++idx) {
      const Rational got = t.at(n, k);
      if (!is_integer(got)) {
        rep.skipped = true;
        rep.note = "non-integer entry at (" + std::to_string(n) + "," + std::to_string(k) + "); OEIS comparison skipped";
        return rep;
      }
      if (Rational(e.values[idx]) != got) {
        rep.mismatch = VerifyReport::Mismatch{n, k, e.values[idx], got};
        return rep;
      }
    }
    rep.last_row = n;
  }
  rep.match = true;
  return rep;
}

}  // namespace gkp
