#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"

#include "doctest.h"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <thread>

#include "gkp/error.hpp"
#include "gkp/oeis.hpp"
#include "gkp/triangle.hpp"

using namespace gkp;
namespace fs = std::filesystem;

namespace {

ParamTuple P(const char* s) { return parse_params(s); }

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::ParseError;
}

struct TempDir {
  fs::path path;
  TempDir() {
    static std::atomic<int> counter{0};
    path = fs::temp_directory_path() / ("gkp-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

/// Serves b-files from memory on a loopback port and counts requests.
struct LocalOeis {
  httplib::Server server;
  std::thread thread;
  std::atomic<int> hits{0};
  int port = 0;

  explicit LocalOeis(const std::map<std::string, std::string>& files) {
    server.Get(R"(/(b\d{6}\.txt))", [this, files](const httplib::Request& req, httplib::Response& res) {
      ++hits;
      const auto it = files.find(req.matches[1]);
      if (it == files.end()) {
        res.status = 404;
        return;
      }
      res.set_content(it->second, "text/plain");
    });
    port = server.bind_to_any_port("127.0.0.1");
    thread = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }
  ~LocalOeis() {
    server.stop();
    thread.join();
  }
  std::string url() const { return "http://127.0.0.1:" + std::to_string(port); }
};

}  // namespace

TEST_CASE("parse_bfile examples") {
  CHECK(parse_bfile("0 1\n1 1\n2 1\n").values == ints({1, 1, 1}));
  CHECK(code_of([] { (void)parse_bfile("abc\n"); }) == Errc::MalformedLine);
  CHECK(code_of([] { (void)parse_bfile("0 1\n2 1\n"); }) == Errc::NonConsecutiveIndex);
}

TEST_CASE("parse_bfile tolerates comments, blank lines, CRLF and big values") {
  const OeisEntry e = parse_bfile("# header\n\n5 -3\r\n6 123456789012345678901234567890\n7 0\n");
  CHECK(e.values.size() == 3);
  CHECK(e.values[0] == -3);
  CHECK(e.values[1] == Integer("123456789012345678901234567890"));
  CHECK(code_of([] { (void)parse_bfile("1 2 3\n"); }) == Errc::MalformedLine);
  CHECK(code_of([] { (void)parse_bfile("1 x\n"); }) == Errc::MalformedLine);
}

TEST_CASE("A-number grammar") {
  CHECK(valid_anum("A007318"));
  CHECK_FALSE(valid_anum("A07318"));
  CHECK_FALSE(valid_anum("a007318"));
  CHECK_FALSE(valid_anum("A0073180"));
  CHECK(code_of([] { (void)fetch("B007318"); }) == Errc::ParseError);
}

TEST_CASE("fetch from fixtures") {
  TempDir cache;
  FetchOptions o;
  o.cache_dir = cache.path;
  o.offline = true;
  const OeisEntry pas = fetch("A007318", o);
  CHECK(pas.source == OeisEntry::Source::Fixture);
  REQUIRE(pas.values.size() >= 6);
  CHECK(std::vector<Integer>(pas.values.begin(), pas.values.begin() + 6) == ints({1, 1, 1, 1, 2, 1}));
  const OeisEntry sub = fetch("A008277", o);
  CHECK(sub.source == OeisEntry::Source::Fixture);
  CHECK(std::vector<Integer>(sub.values.begin(), sub.values.begin() + 6) == ints({1, 1, 1, 1, 3, 1}));
  CHECK(code_of([&] { (void)fetch("A000000", o); }) == Errc::NotInFixtures);
}

TEST_CASE("manifest lists the table families with their layouts") {
  const auto m = load_manifest(default_fixture_dir());
  CHECK(m.size() == 11);
  for (const char* a : {"A008292", "A173018", "A008517", "A019538", "A008277", "A008297", "A105278", "A094587",
                        "A008279", "A007318", "A132393"}) {
    CAPTURE(a);
    REQUIRE(m.count(a) == 1);
  }
  CHECK(m.at("A008292").layout.row_offset == 1);
  CHECK(m.at("A008292").params == P("0,1,1,1,-1,0"));
}

TEST_CASE("network fetch goes through the cache once") {
  LocalOeis srv(std::map<std::string, std::string>{{"b000045.txt", "# Fibonacci\n0 0\n1 1\n2 1\n3 2\n4 3\n"}});
  TempDir cache, fixtures;
  FetchOptions o;
  o.cache_dir = cache.path / "nested";
  o.fixture_dir = fixtures.path;
  o.base_url = srv.url();

  const OeisEntry a = fetch("A000045", o);
  CHECK(a.source == OeisEntry::Source::Network);
  CHECK(a.values == ints({0, 1, 1, 2, 3}));
  CHECK(fs::exists(o.cache_dir / "b000045.txt"));
  CHECK(srv.hits == 1);

  const OeisEntry b = fetch("A000045", o);
  CHECK(b.values == a.values);
  CHECK(srv.hits == 1);

  o.offline = true;
  CHECK(fetch("A000045", o).values == a.values);
}

TEST_CASE("network errors are classified") {
  LocalOeis srv(std::map<std::string, std::string>{{"b000001.txt", "0 1\nnot a line\n"}});
  TempDir cache, fixtures;
  FetchOptions o;
  o.cache_dir = cache.path;
  o.fixture_dir = fixtures.path;
  o.base_url = srv.url();
  CHECK(code_of([&] { (void)fetch("A000001", o); }) == Errc::MalformedResponse);
  CHECK_FALSE(fs::exists(cache.path / "b000001.txt"));
  CHECK(code_of([&] { (void)fetch("A000002", o); }) == Errc::NetworkError);
  o.base_url = "http://127.0.0.1:1";
  CHECK(code_of([&] { (void)fetch("A000003", o); }) == Errc::NetworkError);
}

TEST_CASE("offline fetch never touches the network") {
  LocalOeis srv(std::map<std::string, std::string>{{"b000045.txt", "0 0\n"}});
  TempDir cache, fixtures;
  FetchOptions o;
  o.cache_dir = cache.path;
  o.fixture_dir = fixtures.path;
  o.base_url = srv.url();
  o.offline = true;
  CHECK(code_of([&] { (void)fetch("A000045", o); }) == Errc::NotInFixtures);
  CHECK(srv.hits == 0);
}

TEST_CASE("concurrent fetches leave one intact cache file") {
  std::string body;
  for (int i = 0; i < 2000; ++i) body += std::to_string(i) + " " + std::to_string(i * i) + "\n";
  LocalOeis srv(std::map<std::string, std::string>{{"b000290.txt", body}});
  TempDir cache, fixtures;
  FetchOptions o;
  o.cache_dir = cache.path;
  o.fixture_dir = fixtures.path;
  o.base_url = srv.url();
  std::vector<std::thread> ts;
  std::atomic<int> ok{0};
  for (int i = 0; i < 8; ++i) {
    ts.emplace_back([&] {
      if (fetch("A000290", o).values.size() == 2000) ++ok;
    });
  }
  for (auto& t : ts) t.join();
  CHECK(ok == 8);
  std::ifstream in(cache.path / "b000290.txt");
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == body);
}

TEST_CASE("verify_against examples") {
  const auto m = load_manifest(default_fixture_dir());
  FetchOptions o;
  o.offline = true;
  const OeisEntry a8292 = fetch("A008292", o);
  const VerifyReport eul = verify_against(P("0,1,1,1,-1,0"), a8292, m.at("A008292").layout, 8);
  CHECK(eul.match);
  CHECK(eul.last_row == 8);

  const OeisEntry a8277 = fetch("A008277", o);
  CHECK(verify_against(P("0,1,0,0,0,1"), a8277, m.at("A008277").layout, 10).match);

  const VerifyReport neg = verify_against(P("0,1,1,1,-1,0"), a8277, m.at("A008277").layout, 10);
  CHECK_FALSE(neg.match);
  REQUIRE(neg.mismatch);
  CHECK(neg.mismatch->n == 1);
  CHECK(neg.mismatch->k == 1);
  CHECK(neg.mismatch->expected == 1);
  CHECK(neg.mismatch->got == 0);
}

TEST_CASE("verify_against skips non-integer triangles and reports short entries") {
  const OeisEntry e = parse_bfile("0 1\n1 1\n2 1\n", "A000012");
  const VerifyReport half = verify_against(P("1/2,0,1/3,0,0,1"), e, {}, 3);
  CHECK(half.skipped);
  CHECK_FALSE(half.match);
  const VerifyReport shortr = verify_against(P("0,0,1,0,0,1"), e, {}, 4);
  CHECK_FALSE(shortr.match);
  CHECK_FALSE(shortr.mismatch);
  CHECK(shortr.last_row == 1);
}

TEST_CASE("every fixture matches its tuple through row 12") {
  FetchOptions o;
  o.offline = true;
  for (const auto& [anum, f] : load_manifest(default_fixture_dir())) {
    CAPTURE(anum);
    const VerifyReport r = verify_against(f.params, fetch(anum, o), f.layout, 12);
    CHECK(r.match);
  }
}
