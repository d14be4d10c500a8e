// Command line front end: verify, search, order, report, export.
#include "hermlat/suites.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace hermlat;

void print_report(const VerificationReport& r) {
  for (const auto& c : r.checks)
    std::cout << (c.status == CheckStatus::kPass ? "PASS " : c.status == CheckStatus::kFail ? "FAIL " : "SKIP ")
              << c.id << "  " << c.description << "\n";
  const auto j = r.to_json();
  std::cout << r.suite << ": " << j["status"].get<std::string>() << " (" << j["summary"]["pass"] << " passed, "
            << j["summary"]["fail"] << " failed, " << j["summary"]["skip"] << " skipped)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification toolkit for Hermitian lattices over Z[w] and Z[i]"};
  app.set_version_flag("--version", HERMLAT_VERSION);
  app.require_subcommand(1);

  std::string data_dir = default_data_dir().string();
  app.add_option("--data", data_dir, "data directory (lattices/, diagrams/, configs/)");

  SuiteOptions opts;
  std::string target, json_out;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> targets = suite_names();
  targets.push_back("all");
  verify->add_option("target", target, "suite name or all")->required()->check(CLI::IsMember(targets));
  verify->add_option("--json", json_out, "write the JSON report here");
  verify->add_flag("--search", opts.search, "recompute configurations instead of reading the shipped files");
  verify->add_option("--cap", opts.order_cap, "element order cap")->capture_default_str();
  verify->add_option("--bfs-cap", opts.bfs_cap, "group closure cap")->capture_default_str();
  verify->add_option("--seed", opts.seed, "seed for randomized checks")->capture_default_str();
  verify->add_option("--threads", opts.threads, "suites run concurrently under all")->capture_default_str();

  std::string which, out_path;
  auto* search = app.add_subcommand("search", "run a deterministic configuration search");
  search->add_option("which", which, "extend26 or gaussian")
      ->required()
      ->check(CLI::IsMember({"extend26", "gaussian"}));
  search->add_option("-o,--output", out_path, "configuration file; the certificate is written next to it")
      ->required();

  std::string word, config_path;
  std::size_t word_cap = 200;
  auto* order = app.add_subcommand("order", "order of a word in the reflections of a configuration");
  order->add_option("word", word, "space separated labels, label' for an inverse")->required();
  order->add_option("--config", config_path, "configuration file (default: the Y555 seeds)");
  order->add_option("--cap", word_cap, "order cap")->capture_default_str();

  std::string report_path;
  auto* report = app.add_subcommand("report", "run every suite and write the full JSON report");
  report->add_option("--json", report_path, "report file")->required();
  report->add_flag("--search", opts.search, "recompute configurations instead of reading the shipped files");
  report->add_option("--seed", opts.seed, "seed for randomized checks")->capture_default_str();
  report->add_option("--threads", opts.threads, "suites run concurrently")->capture_default_str();

  std::string export_dir;
  auto* exp = app.add_subcommand("export", "write the canonical lattice, diagram and seed files");
  exp->add_option("dir", export_dir, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      opts.data_dir = data_dir;
      const auto r = target == "all" ? run_all_suites(opts) : run_suite(target, opts);
      print_report(r);
      if (!json_out.empty()) write_text_file(json_out, dump_canonical(r.to_json()));
      return r.pass() ? 0 : 1;
    }
    if (*search) {
      const auto art = which == "extend26" ? search_extend26() : search_gaussian();
      write_text_file(out_path, art.configuration_text);
      write_text_file(certificate_path(out_path), art.certificate_text);
      std::cout << "wrote " << out_path << " and " << certificate_path(out_path).string() << "\n";
      return 0;
    }
    if (*order) {
      if (config_path.empty()) config_path = (std::filesystem::path(data_dir) / "configs" / "y555_seeds.json").string();
      const auto r = word_order(word, config_path, data_dir, word_cap);
      if (r.order)
        std::cout << *r.order << "\n";
      else
        std::cout << "exceeds cap " << r.cap << "\n";
      return r.order ? 0 : 1;
    }
    if (*report) {
      opts.data_dir = data_dir;
      const auto r = run_all_suites(opts);
      write_text_file(report_path, dump_canonical(r.to_json()));
      print_report(r);
      return r.pass() ? 0 : 1;
    }
    if (*exp) {
      export_canonical_data(export_dir);
      std::cout << "wrote canonical data to " << export_dir << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
