#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "bkneser/hochster.hpp"
#include "bkneser/kneser.hpp"
#include "cli.hpp"

using namespace bkneser;
using namespace bkneser::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("bkneser-test-" + name + "-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("info") {
  auto r = call({"info", "--m", "5", "--k", "2"});
  CHECK(r.code == kOk);
  CHECK(contains(r.out, "vertices: 20"));
  CHECK(contains(r.out, "edges: 30"));
  CHECK(contains(r.out, "degree: 3"));
  CHECK(contains(r.out, "ladder_rung: no"));

  r = call({"info", "--m", "2", "--k", "1", "--format", "json"});
  CHECK(r.code == kOk);
  CHECK(contains(r.out, "\"ladder_rung\": true"));

  r = call({"info", "--m", "3", "--k", "2"});
  CHECK(r.code == kParameterError);
  CHECK(contains(r.err, "m >= 2k"));

  r = call({"info", "--m", "40", "--k", "20", "--format", "csv"});
  CHECK(r.code == kOk);
  CHECK(r.out == "m,k,vertices,edges,degree,side,ladder_rung\n40,20,275693057640,137846528820,1,137846528820,true\n");
}

TEST_CASE("argument errors exit with the parameter code") {
  CHECK(call({}).code == kParameterError);
  CHECK(call({"info", "--m", "5"}).code == kParameterError);
  CHECK(call({"bogus"}).code == kParameterError);
  CHECK(call({"info", "--m", "5", "--k", "2", "--threads", "0"}).code == kParameterError);
  CHECK(call({"export", "--m", "5", "--k", "2", "--format", "pdf"}).code == kParameterError);
  CHECK(call({"bounds", "--m", "5", "--k", "2", "--invariant", "ind"}).code == kParameterError);
  CHECK(call({"certify", "--m", "5", "--k", "2", "--kind", "matching", "--s", "9"}).code == kParameterError);
  CHECK(call({"--help"}).code == kOk);
}

TEST_CASE("betti-linear") {
  auto r = call({"betti-linear", "--m", "5", "--k", "2", "--i-max", "5", "--verify", "--format", "csv"});
  CHECK(r.code == kOk);
  CHECK(r.out == "i,beta,oracle,match\n1,30,30,OK\n2,60,60,OK\n3,20,20,OK\n4,0,0,OK\n5,0,0,OK\n");

  r = call({"betti-linear", "--m", "2", "--k", "1", "--i-max", "2", "--verify", "--format", "csv"});
  CHECK(r.out == "i,beta,oracle,match\n1,2,2,OK\n2,0,0,OK\n");

  r = call({"betti-linear", "--m", "6", "--k", "3", "--i-max", "3", "--format", "csv"});
  CHECK(r.code == kOk);
  CHECK(r.out == "i,beta\n1,20\n2,0\n3,0\n");

  r = call({"betti-linear", "--m", "5", "--k", "2", "--i-max", "3", "--verify"});
  CHECK(count(r.out, "OK") == 3);

  // the oracle guard surfaces by name
  r = call({"betti-linear", "--m", "5", "--k", "2", "--i-max", "3", "--verify", "--max-subsets", "100"});
  CHECK(r.code == kGuardExceeded);
  CHECK(contains(r.err, "max_subsets"));
}

TEST_CASE("betti-table") {
  auto r = call({"betti-table", "--m", "3", "--k", "1"});
  CHECK(r.code == kOk);
  CHECK(contains(r.out, "pd: 4\nreg: 2\n"));

  r = call({"betti-table", "--m", "2", "--k", "1", "--format", "csv"});
  CHECK(contains(r.out, "2,4,1\n"));

  r = call({"betti-table", "--m", "5", "--k", "2"});
  CHECK(r.code == kGuardExceeded);
  CHECK(contains(r.err, "max_subsets"));

  CHECK(call({"betti-table", "--m", "3", "--k", "1", "--char", "2"}).out ==
        call({"betti-table", "--m", "3", "--k", "1", "--char", "0"}).out);
}

TEST_CASE("guard environment overrides") {
  ::setenv("BKNESER_MAX_SUBSETS", "10", 1);
  auto r = call({"betti-table", "--m", "2", "--k", "1"});
  CHECK(r.code == kGuardExceeded);
  // flags win over the environment
  r = call({"betti-table", "--m", "2", "--k", "1", "--max-subsets", "100"});
  CHECK(r.code == kOk);
  ::setenv("BKNESER_MAX_SUBSETS", "ten", 1);
  CHECK(call({"info", "--m", "2", "--k", "1"}).code == kParameterError);
  ::unsetenv("BKNESER_MAX_SUBSETS");

  ::setenv("BKNESER_MAX_SEARCH_NODES", "5", 1);
  r = call({"certify", "--m", "5", "--k", "2", "--kind", "domination"});
  CHECK(r.code == kOk);
  CHECK(contains(r.out, "exact: -"));
  CHECK(contains(r.out, "max_search_nodes"));
  ::unsetenv("BKNESER_MAX_SEARCH_NODES");
}

TEST_CASE("bounds") {
  auto r = call({"bounds", "--m", "5", "--k", "2", "--invariant", "reg-power", "--p", "1", "--format", "json"});
  CHECK(r.code == kOk);
  CHECK(contains(r.out, "\"lower\": \"6\""));
  CHECK(contains(r.out, "\"upper\": \"10\""));
  CHECK(contains(r.out, "\"exact\": \"6\""));

  r = call({"bounds", "--m", "6", "--k", "2", "--invariant", "reg-power"});
  CHECK(contains(r.out, "upper: 15"));
  CHECK(contains(r.out, "exact: -"));

  r = call({"bounds", "--m", "5", "--k", "2", "--invariant", "pd", "--format", "json"});
  CHECK(contains(r.out, "\"lower\": \"14\""));
  CHECK(contains(r.out, "\"upper\": \"16\""));

  r = call({"bounds", "--m", "3", "--k", "1"});
  CHECK(contains(r.out, "exact: 2"));

  CHECK(call({"bounds", "--m", "5", "--k", "2", "--format", "csv"}).code == kParameterError);
}

TEST_CASE("certify") {
  auto r = call({"certify", "--m", "5", "--k", "2", "--kind", "matching", "--s", "5"});
  CHECK(r.code == kOk);
  CHECK(contains(r.out, "exact: 6"));
  CHECK(contains(r.out, "ind-family-S{5} (INDUCED_MATCHING, size 6): verified"));

  r = call({"certify", "--m", "5", "--k", "2", "--kind", "cochord", "--variant", "stars"});
  CHECK(contains(r.out, "upper: 10"));
  r = call({"certify", "--m", "5", "--k", "2", "--kind", "cochord"});
  CHECK(contains(r.out, "upper: 6"));
  r = call({"certify", "--m", "3", "--k", "1", "--kind", "cochord", "--variant", "double-stars"});
  CHECK(contains(r.out, "upper: 2"));
  CHECK(call({"certify", "--m", "6", "--k", "2", "--kind", "cochord", "--variant", "double-stars"}).code ==
        kParameterError);

  r = call({"certify", "--m", "5", "--k", "2", "--kind", "domination", "--s", "1", "--j", "2"});
  CHECK(contains(r.out, "dom-W-S{1}-j2 (DOMINATING_SET, size 6): verified"));
  r = call({"certify", "--m", "4", "--k", "1", "--kind", "domination", "--s", "1,2", "--j", "3"});
  CHECK(contains(r.out, "(DOMINATING_SET, size 2): verified"));
  r = call({"certify", "--m", "4", "--k", "2", "--kind", "domination"});
  CHECK(contains(r.out, "dom-left-side (DOMINATING_SET, size 6): verified"));

  r = call({"certify", "--m", "5", "--k", "2", "--kind", "gamma", "--format", "json"});
  CHECK(contains(r.out, "\"exact\": \"3\""));
  CHECK(contains(r.out, "\"L{1,2}\""));

  r = call({"certify", "--m", "5", "--k", "2", "--kind", "regularity"});
  CHECK(contains(r.out, "exact: 6"));
}

TEST_CASE("export") {
  auto r = call({"export", "--m", "2", "--k", "1", "--format", "m2"});
  CHECK(r.out ==
        "-- edge ideal of H(2,1)\n"
        "R = QQ[xL0,xL1,xR0,xR1];\n"
        "I = monomialIdeal(xL0*xR0, xL1*xR1);\n"
        "betti res I\n");

  r = call({"export", "--m", "5", "--k", "2", "--format", "singular"});
  CHECK(contains(r.out, "ring r = 0,(xL0,"));
  CHECK(contains(r.out, ",xR9),dp;"));
  CHECK(count(r.out, "*") == 30);
  CHECK(count(r.out, "xL") - 30 == 10);
  CHECK(contains(r.out, "resolution rs = res(I,0);"));
  CHECK(contains(r.out, "print(betti(rs),\"betti\");"));

  r = call({"export", "--m", "3", "--k", "1", "--format", "dot"});
  CHECK(contains(r.out, "label=\"{1,2}\", shape=box"));
  CHECK(count(r.out, " -- ") == 6);

  r = call({"export", "--m", "3", "--k", "1", "--format", "json"});
  CHECK(contains(r.out, "\"subset\": \"{2,3}\""));

  CHECK(export_script(5, 2, OutputFormat::kM2) == export_script(5, 2, OutputFormat::kM2));
  CHECK_THROWS(export_script(5, 2, OutputFormat::kCsv));
}

TEST_CASE("m2 generators are ordered by left then right rank") {
  const auto script = export_script(3, 1, OutputFormat::kM2);
  CHECK(contains(script, "monomialIdeal(xL0*xR0, xL0*xR1, xL1*xR0, xL1*xR2, xL2*xR1, xL2*xR2)"));
}

TEST_CASE("cache round trip") {
  const auto dir = fresh_dir("cache");
  const auto fresh = call({"betti-table", "--m", "4", "--k", "1", "--format", "json"});
  const auto first = call({"betti-table", "--m", "4", "--k", "1", "--format", "json", "--cache-dir", dir.string()});
  CHECK(first.out == fresh.out);
  const ResultCache cache(dir);
  const auto key = ResultCache::key(4, 1, "betti-table", "char=0");
  REQUIRE(std::filesystem::exists(cache.path_for(key)));
  const auto stored = cache.load(key);
  REQUIRE(stored);
  const auto h = KneserGraph::build(4, 1);
  CHECK(BettiTable::from_json(*stored) == full_betti_oracle(h.graph(), 0));

  // a second run is served from the cache: shrink the guard so a recomputation would fail
  const auto second = call({"betti-table", "--m", "4", "--k", "1", "--format", "json", "--cache-dir", dir.string(),
                            "--max-subsets", "1"});
  CHECK(second.code == kOk);
  CHECK(second.out == fresh.out);

  const auto cert = call({"certify", "--m", "5", "--k", "2", "--kind", "regularity", "--cache-dir", dir.string()});
  const auto cert_again = call({"certify", "--m", "5", "--k", "2", "--kind", "regularity", "--cache-dir", dir.string()});
  CHECK(cert.out == cert_again.out);
  CHECK(cert.out == call({"certify", "--m", "5", "--k", "2", "--kind", "regularity"}).out);

  ::setenv("BKNESER_CACHE_DIR", dir.string().c_str(), 1);
  CHECK(config_from_environment().cache_dir == dir);
  ::unsetenv("BKNESER_CACHE_DIR");
  std::filesystem::remove_all(dir);
}

TEST_CASE("cache keys") {
  CHECK(ResultCache::fnv1a("") == 0xcbf29ce484222325ULL);
  CHECK(ResultCache::fnv1a("a") == 0xaf63dc4c8601ec8cULL);
  const ResultCache cache("/tmp/x");
  CHECK(cache.path_for("k1") != cache.path_for("k2"));
  CHECK_FALSE(cache.load("missing-key-never-written"));
}

TEST_CASE("binary exit codes") {
  CHECK(WEXITSTATUS(std::system(BKNESER_BINARY " info --m 5 --k 2 > /dev/null"))
        == 0);
  CHECK(WEXITSTATUS(std::system(BKNESER_BINARY " info --m 3 --k 2 > /dev/null 2>&1")) == 2);
  CHECK(WEXITSTATUS(std::system(BKNESER_BINARY " betti-table --m 5 --k 2 > /dev/null 2>&1")) == 3);
}
