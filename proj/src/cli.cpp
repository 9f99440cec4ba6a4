#include "sss/cli.hpp"

#include <atomic>
#include <csignal>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sss/bench.hpp"
#include "sss/blob_server.hpp"
#include "sss/dispersal.hpp"
#include "sss/engine.hpp"
#include "sss/errors.hpp"
#include "sss/manifest.hpp"
#include "sss/schemes.hpp"
#include "sss/share_header.hpp"
#include "sss/verify.hpp"

namespace sss {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

SchemeId parse_scheme(const std::string& tag) {
  const auto s = scheme_from_tag(tag);
  if (!s)
    throw CLI::ValidationError("--scheme", "unknown scheme '" + tag +
                                               "' (nt23, nt24, xorc23, xori23, shamir2x3, shamir2x4)");
  return *s;
}

RngPolicy rng_from(const std::optional<uint64_t>& seed) {
  return seed ? RngPolicy::seeded(*seed) : RngPolicy::system_entropy();
}

std::string crc_hex(uint32_t crc) {
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", crc);
  return buf;
}

std::string base_name_for(const std::string& input) {
  if (input == "-") return "stdin";
  const auto name = fs::path(input).filename().string();
  return name.empty() ? "secret" : name;
}

// ---- split ----------------------------------------------------------------

int cmd_split(const std::string& input, const std::string& scheme_tag, const std::string& out_dir,
              const std::optional<uint64_t>& seed) {
  const SchemeId scheme = parse_scheme(scheme_tag);
  const int n = share_count(scheme);

  fs::create_directories(out_dir);
  std::vector<fs::path> outputs;
  for (int i = 1; i <= n; ++i)
    outputs.push_back(fs::path(out_dir) / (base_name_for(input) + ".s" + std::to_string(i)));

  std::vector<ShareHeader> headers;
  if (input == "-")
    headers = split_to_files(std::cin, scheme, rng_from(seed), outputs);
  else
    headers = split_file(input, scheme, rng_from(seed), outputs);

  for (int i = 0; i < n; ++i)
    std::cout << "wrote " << outputs[i].string() << " (" << headers[i].payload_length()
              << " payload bytes, crc " << crc_hex(headers[i].payload_crc32) << ")\n";
  return 0;
}

// ---- combine ----------------------------------------------------------------

int cmd_combine(const std::string& share_a, const std::string& share_b, const std::string& output) {
  CombineInfo info;
  if (output == "-") {
    std::ifstream a(share_a, std::ios::binary);
    if (!a) throw Error(Errc::IoError, "cannot open " + share_a);
    std::ifstream b(share_b, std::ios::binary);
    if (!b) throw Error(Errc::IoError, "cannot open " + share_b);
    info = combine_streams(a, b, std::cout);
    std::cerr << "reconstructed " << info.original_length << " bytes from shares " << info.pair.lo
              << " and " << info.pair.hi << " (" << scheme_tag(info.scheme) << ")\n";
  } else {
    info = combine_files(share_a, share_b, output);
    std::cout << "reconstructed " << info.original_length << " bytes into " << output
              << " from shares " << info.pair.lo << " and " << info.pair.hi << " ("
              << scheme_tag(info.scheme) << ")\n";
  }
  return 0;
}

// ---- inspect ----------------------------------------------------------------

int cmd_inspect(const std::string& share, bool as_json) {
  std::ifstream in(share, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + share);
  const ShareHeader h = read_header(in);

  if (as_json) {
    json doc{{"report", "inspect"},
             {"file", share},
             {"scheme", scheme_tag(h.scheme)},
             {"share_index", h.share_index},
             {"flags", h.flags},
             {"original_length", h.original_length},
             {"payload_crc32", crc_hex(h.payload_crc32)},
             {"payload_length", h.payload_length()}};
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << "scheme           " << scheme_tag(h.scheme) << "\n"
            << "share_index      " << int(h.share_index) << "\n"
            << "flags            " << int(h.flags) << "\n"
            << "original_length  " << h.original_length << "\n"
            << "payload_crc32    " << crc_hex(h.payload_crc32) << "\n"
            << "payload_length   " << h.payload_length() << "\n";
  return 0;
}

// ---- disperse / retrieve ----------------------------------------------------

int cmd_disperse(const std::string& input, const std::string& scheme_tag_str,
                 const std::vector<std::string>& locators, const std::string& manifest_path,
                 std::string object_id, const std::optional<uint64_t>& seed) {
  const SchemeId scheme = parse_scheme(scheme_tag_str);
  if (object_id.empty()) {
    object_id = fs::path(input).stem().string();
    if (object_id.empty() || input == "-") object_id = "secret";
  }

  std::vector<Endpoint> endpoints;
  for (size_t i = 0; i < locators.size(); ++i)
    endpoints.push_back(make_endpoint(locators[i], static_cast<int>(i) + 1));

  Manifest manifest;
  if (input == "-") {
    manifest = disperse(std::cin, scheme, endpoints, rng_from(seed), object_id);
  } else {
    std::ifstream in(input, std::ios::binary);
    if (!in) throw Error(Errc::IoError, "cannot open " + input);
    manifest = disperse(in, scheme, endpoints, rng_from(seed), object_id);
  }

  save_manifest(manifest, manifest_path);
  std::cout << "dispersed object " << manifest.object_id << " (" << manifest.original_length
            << " bytes, " << scheme_tag(manifest.scheme) << ") across " << manifest.entries.size()
            << " endpoints; manifest " << manifest_path << "\n";
  for (const auto& e : manifest.entries)
    std::cout << "  share " << e.share_index << " -> " << e.locator << " (crc "
              << crc_hex(e.payload_crc32) << ")\n";
  return 0;
}

int cmd_retrieve(const std::string& manifest_path, const std::string& output) {
  const Manifest manifest = load_manifest(manifest_path);
  RetrieveReport report;
  if (output == "-")
    report = retrieve(manifest, std::cout);
  else
    report = retrieve_to_file(manifest, output);

  std::ostream& log = output == "-" ? std::cerr : std::cout;
  log << "reconstructed " << report.bytes_written << " bytes using shares " << report.pair_used.lo
      << " and " << report.pair_used.hi << "\n";
  for (const auto& s : report.shares)
    if (!s.error.empty())
      log << "  share " << s.share_index << " at " << s.locator << " skipped: " << s.error << "\n";
  return 0;
}

// ---- serve ----------------------------------------------------------------

BlobServer* g_server = nullptr;

int cmd_serve(const std::string& root, const std::string& addr) {
  const auto colon = addr.rfind(':');
  if (colon == std::string::npos)
    throw Error(Errc::BadParams, "--addr wants host:port, got '" + addr + "'");
  const std::string host = addr.substr(0, colon);
  const int port = std::stoi(addr.substr(colon + 1));

  fs::create_directories(root);
  BlobServer server(root);
  g_server = &server;
  std::signal(SIGINT, [](int) { if (g_server) g_server->stop(); });
  std::signal(SIGTERM, [](int) { if (g_server) g_server->stop(); });

  std::cout << "serving shares from " << root << " on " << host << ":" << port << "\n";
  server.run(host, port);
  g_server = nullptr;
  return 0;
}

// ---- verify ----------------------------------------------------------------

void print_verify_plain(const VerifyReport& r) {
  std::cout << "verify " << scheme_tag(r.scheme) << ": " << r.cases_run << " cases, " << r.failures
            << " failures\n";
  for (const auto& c : r.census) {
    std::cout << "  share " << c.share_index << ": " << c.distinct_values << " distinct values (";
    bool first = true;
    for (const auto& [mult, vals] : c.multiplicity_histogram) {
      if (!first) std::cout << ", ";
      std::cout << vals << " seen x" << mult;
      first = false;
    }
    std::cout << ")\n";
  }
}

json verify_to_json(const VerifyReport& r) {
  json census = json::array();
  for (const auto& c : r.census) {
    json hist = json::object();
    for (const auto& [mult, vals] : c.multiplicity_histogram) hist[std::to_string(mult)] = vals;
    census.push_back({{"share_index", c.share_index},
                      {"distinct_values", c.distinct_values},
                      {"multiplicity_histogram", hist}});
  }
  return json{{"report", "verify"},
              {"scheme", scheme_tag(r.scheme)},
              {"cases_run", r.cases_run},
              {"failures", r.failures},
              {"census", census}};
}

int cmd_verify(const std::string& scheme_tag_str, bool as_json) {
  std::vector<SchemeId> schemes;
  if (scheme_tag_str == "all")
    schemes = {SchemeId::NT23, SchemeId::NT24, SchemeId::XORC23, SchemeId::XORI23};
  else
    schemes = {parse_scheme(scheme_tag_str)};

  uint64_t failures = 0;
  for (const SchemeId s : schemes) {
    const VerifyReport r = verify_exhaustive(s);
    failures += r.failures;
    if (as_json)
      std::cout << verify_to_json(r).dump(2) << "\n";
    else
      print_verify_plain(r);
  }
  return failures == 0 ? 0 : 1;
}

// ---- bench ----------------------------------------------------------------

int cmd_bench(const std::string& scheme_tag_str, uint64_t size, const std::optional<uint64_t>& seed,
              bool as_json) {
  std::vector<SchemeId> schemes;
  if (scheme_tag_str == "all")
    schemes = {SchemeId::NT23,   SchemeId::NT24,      SchemeId::XORC23,
               SchemeId::XORI23, SchemeId::Shamir2x3, SchemeId::Shamir2x4};
  else
    schemes = {parse_scheme(scheme_tag_str)};

  if (!as_json)
    std::printf("%-10s %-8s %12s %10s %12s\n", "scheme", "dir", "bytes", "seconds", "MB/s");
  for (const SchemeId s : schemes) {
    for (const auto& r : run_bench(s, size, rng_from(seed))) {
      if (as_json) {
        json doc{{"report", "bench"},
                 {"scheme", scheme_tag(r.scheme)},
                 {"direction", r.direction},
                 {"bytes", r.bytes},
                 {"seconds", r.seconds},
                 {"bytes_per_second", r.bytes_per_second}};
        std::cout << doc.dump(2) << "\n";
      } else {
        std::printf("%-10s %-8s %12llu %10.3f %12.2f\n", scheme_tag(r.scheme), r.direction.c_str(),
                    static_cast<unsigned long long>(r.bytes), r.seconds,
                    r.bytes_per_second / 1e6);
      }
    }
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"sss — (2,n) threshold secret sharing over files and storage endpoints"};
  app.require_subcommand(1);

  // split
  std::string in_file, scheme_tag_str, out_dir;
  std::optional<uint64_t> seed;
  auto* split = app.add_subcommand("split", "split FILE into share files");
  split->add_option("file", in_file, "input file, or - for stdin")->required();
  split->add_option("--scheme", scheme_tag_str, "nt23|nt24|xorc23|xori23|shamir2x3|shamir2x4")
      ->required();
  split->add_option("--out-dir", out_dir, "directory for the share files")->required();
  split->add_option("--seed", seed, "deterministic randomness (test only; insecure)");

  // combine
  std::string share_a, share_b, out_file;
  auto* combine = app.add_subcommand("combine", "reconstruct the secret from two share files");
  combine->add_option("share_a", share_a)->required();
  combine->add_option("share_b", share_b)->required();
  combine->add_option("-o,--output", out_file, "output file, or - for stdout")->required();

  // inspect
  std::string inspect_file;
  bool inspect_json = false;
  auto* inspect = app.add_subcommand("inspect", "print a share file's header");
  inspect->add_option("share", inspect_file)->required();
  inspect->add_flag("--json", inspect_json, "structured output");

  // disperse
  std::string disp_file, disp_scheme, disp_manifest, disp_object;
  std::vector<std::string> disp_endpoints;
  std::optional<uint64_t> disp_seed;
  auto* disperse_cmd = app.add_subcommand("disperse", "split and store shares across endpoints");
  disperse_cmd->add_option("file", disp_file, "input file, or - for stdin")->required();
  disperse_cmd->add_option("--scheme", disp_scheme)->required();
  disperse_cmd->add_option("--endpoint", disp_endpoints,
                           "endpoint locator, one per share (directory path or http://host:port)")
      ->required();
  disperse_cmd->add_option("-m,--manifest", disp_manifest, "manifest file to write")->required();
  disperse_cmd->add_option("--object-id", disp_object, "object id (default: input stem)");
  disperse_cmd->add_option("--seed", disp_seed, "deterministic randomness (test only; insecure)");

  // retrieve
  std::string ret_manifest, ret_out;
  auto* retrieve_cmd = app.add_subcommand("retrieve", "fetch any two shares and reconstruct");
  retrieve_cmd->add_option("-m,--manifest", ret_manifest)->required();
  retrieve_cmd->add_option("-o,--output", ret_out, "output file, or - for stdout")->required();

  // serve
  std::string serve_root, serve_addr = "127.0.0.1:8080";
  auto* serve = app.add_subcommand("serve", "run the HTTP share blob store");
  serve->add_option("--root", serve_root, "directory backing the store")->required();
  serve->add_option("--addr", serve_addr, "listen address host:port");

  // verify
  std::string verify_scheme;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "exhaustive kernel verification and share census");
  verify->add_option("--scheme", verify_scheme, "scheme tag or 'all'")->required();
  verify->add_flag("--json", verify_json, "structured output");

  // bench
  std::string bench_scheme;
  uint64_t bench_size = 16ull << 20;
  std::optional<uint64_t> bench_seed;
  bool bench_json = false;
  auto* bench = app.add_subcommand("bench", "time split/combine over synthetic input");
  bench->add_option("--scheme", bench_scheme, "scheme tag or 'all'")->required();
  bench->add_option("--size", bench_size, "input size in bytes (>= 1 MiB)");
  bench->add_option("--seed", bench_seed, "deterministic randomness");
  bench->add_flag("--json", bench_json, "structured output");

  try {
    app.parse(argc, const_cast<char**>(argv));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help() << std::flush;
    return 2;
  }

  try {
    if (split->parsed()) return cmd_split(in_file, scheme_tag_str, out_dir, seed);
    if (combine->parsed()) return cmd_combine(share_a, share_b, out_file);
    if (inspect->parsed()) return cmd_inspect(inspect_file, inspect_json);
    if (disperse_cmd->parsed())
      return cmd_disperse(disp_file, disp_scheme, disp_endpoints, disp_manifest, disp_object,
                          disp_seed);
    if (retrieve_cmd->parsed()) return cmd_retrieve(ret_manifest, ret_out);
    if (serve->parsed()) return cmd_serve(serve_root, serve_addr);
    if (verify->parsed()) return cmd_verify(verify_scheme, verify_json);
    if (bench->parsed()) return cmd_bench(bench_scheme, bench_size, bench_seed, bench_json);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace sss
