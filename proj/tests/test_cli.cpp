#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "sss/cli.hpp"
#include "sss/share_header.hpp"

using namespace sss;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& suffix) {
  const auto p =
      fs::temp_directory_path() / ("sss_cli_" + std::to_string(::getpid()) + "_" + suffix);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

int run(std::vector<std::string> args) {
  args.insert(args.begin(), "sss");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

std::vector<uint8_t> read_all(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE(f);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary | std::ios::trunc);
  f << text;
}

struct CoutCapture {
  std::ostringstream ss;
  std::streambuf* old;
  CoutCapture() : old(std::cout.rdbuf(ss.rdbuf())) {}
  ~CoutCapture() { std::cout.rdbuf(old); }
};

}  // namespace

TEST_CASE("split twice with the same seed produces bit-identical share files") {
  const auto dir = fresh_dir("split");
  write_text(dir / "f", "attack at dawn, bring 257 snacks");

  const auto d1 = dir / "out1";
  const auto d2 = dir / "out2";
  CHECK(run({"split", "--scheme", "nt23", "--seed", "7", "--out-dir", d1.string(),
             (dir / "f").string()}) == 0);
  CHECK(run({"split", "--scheme", "nt23", "--seed", "7", "--out-dir", d2.string(),
             (dir / "f").string()}) == 0);
  for (int i = 1; i <= 3; ++i)
    CHECK(read_all(d1 / ("f.s" + std::to_string(i))) == read_all(d2 / ("f.s" + std::to_string(i))));
}

TEST_CASE("split then combine restores the file; duplicate share exits 1") {
  const auto dir = fresh_dir("combine");
  write_text(dir / "f", "0123456789");
  CHECK(run({"split", "--scheme", "xori23", "--seed", "1", "--out-dir", dir.string(),
             (dir / "f").string()}) == 0);

  CHECK(run({"combine", (dir / "f.s1").string(), (dir / "f.s3").string(), "-o",
             (dir / "restored").string()}) == 0);
  CHECK(read_all(dir / "restored") == read_all(dir / "f"));

  CHECK(run({"combine", (dir / "f.s1").string(), (dir / "f.s1").string(), "-o",
             (dir / "bad").string()}) == 1);
  CHECK(!fs::exists(dir / "bad"));
}

TEST_CASE("inspect output round-trips against the parsed header") {
  const auto dir = fresh_dir("inspect");
  write_text(dir / "f", "xyz");
  CHECK(run({"split", "--scheme", "nt24", "--seed", "3", "--out-dir", dir.string(),
             (dir / "f").string()}) == 0);

  const auto share = dir / "f.s2";
  std::ifstream in(share, std::ios::binary);
  const ShareHeader h = read_header(in);

  // capture stdout of the inspect command
  std::string text;
  {
    CoutCapture capture;
    CHECK(run({"inspect", share.string()}) == 0);
    text = capture.ss.str();
  }

  auto field = [&](const std::string& name) {
    const auto pos = text.find(name);
    REQUIRE(pos != std::string::npos);
    auto start = text.find_first_not_of(" ", pos + name.size());
    auto end = text.find('\n', start);
    return text.substr(start, end - start);
  };
  CHECK(field("scheme") == "nt24");
  CHECK(field("share_index") == std::to_string(h.share_index));
  CHECK(field("flags") == std::to_string(h.flags));
  CHECK(field("original_length") == std::to_string(h.original_length));
  char crc[9];
  std::snprintf(crc, sizeof crc, "%08x", h.payload_crc32);
  CHECK(field("payload_crc32") == std::string(crc));
}

TEST_CASE("verify exits 0 for a correct scheme") {
  CHECK(run({"verify", "--scheme", "xorc23"}) == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"split"}) == 2);                          // missing required options
  CHECK(run({"frobnicate"}) == 2);                     // unknown subcommand
  CHECK(run({"verify", "--scheme", "nope"}) == 2);     // unknown scheme tag
  CHECK(run({}) == 2);                                 // no subcommand
}

TEST_CASE("missing input file is an operational error, exit 1") {
  const auto dir = fresh_dir("op");
  CHECK(run({"split", "--scheme", "nt23", "--out-dir", dir.string(),
             (dir / "nope").string()}) == 1);
  CHECK(run({"inspect", (dir / "nope").string()}) == 1);
}

TEST_CASE("disperse/retrieve through the CLI with directory endpoints") {
  const auto dir = fresh_dir("disp");
  write_text(dir / "f.bin", std::string(3000, 'q'));
  std::vector<std::string> args{"disperse",
                                (dir / "f.bin").string(),
                                "--scheme",
                                "nt24",
                                "-m",
                                (dir / "f.manifest").string(),
                                "--seed",
                                "5"};
  for (int i = 1; i <= 4; ++i) {
    args.push_back("--endpoint");
    args.push_back((dir / ("ep" + std::to_string(i))).string());
  }
  CHECK(run(args) == 0);
  CHECK(fs::exists(dir / "f.manifest"));

  CHECK(run({"retrieve", "-m", (dir / "f.manifest").string(), "-o",
             (dir / "back.bin").string()}) == 0);
  CHECK(read_all(dir / "back.bin") == read_all(dir / "f.bin"));

  // two endpoints lost: operational failure
  fs::remove_all(dir / "ep1");
  fs::remove_all(dir / "ep2");
  fs::remove_all(dir / "ep3");
  CHECK(run({"retrieve", "-m", (dir / "f.manifest").string(), "-o",
             (dir / "back2.bin").string()}) == 1);
}
