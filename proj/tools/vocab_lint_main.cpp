#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include "CLI11.hpp"
#include "vocab_lint/engine.hpp"

namespace vl = vocab_lint;

namespace {

bool use_color() {
  const char* no_color = std::getenv("NO_COLOR");
  if (no_color && *no_color) return false;
  return isatty(STDOUT_FILENO) != 0;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw vl::VocabError(vl::ErrorKind::unreadable_input, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

vl::RuleConfig base_config(const std::string& config_path) {
  return config_path.empty() ? vl::RuleConfig{} : vl::RuleConfig::load(config_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Static checks for controlled vocabularies and picklists"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(vl::kToolVersion));

  std::string config_path;
  std::string output = "text";

  auto* check = app.add_subcommand("check", "Lint OBO or TSV vocabulary files");
  std::vector<std::string> files;
  std::string format;
  std::string fail_on;
  std::vector<std::string> rules;
  std::vector<std::string> suppress;
  bool isolate = false;
  check->add_option("files", files, "Input files")->required();
  check->add_option("--format", format, "Input format for all files: obo or tsv");
  check->add_option("--config", config_path, "JSON configuration file");
  check->add_option("--output", output, "text or json");
  check->add_option("--fail-on", fail_on, "Lowest severity that fails the run");
  check->add_option("--rule", rules, "Enabled rule pattern; replaces the configured list")->allow_extra_args(false);
  check->add_option("--suppress", suppress, "RULE:subject to silence")->allow_extra_args(false);
  check->add_flag("--isolate-files", isolate, "Analyse each file on its own");

  auto* suggest = app.add_subcommand("suggest", "Search reference vocabularies before minting");
  std::vector<std::string> queries;
  std::vector<std::string> references;
  std::size_t top = 5;
  suggest->add_option("query", queries, "Proposed labels")->required();
  suggest->add_option("--references", references, "Reference OBO or TSV file; repeatable")->allow_extra_args(false);
  suggest->add_option("--config", config_path, "JSON configuration file");
  suggest->add_option("--output", output, "text or json");
  suggest->add_option("--top", top, "Suggestions per query");

  auto* health = app.add_subcommand("health", "Score vocabulary maintenance from a snapshot");
  std::string metadata;
  health->add_option("--metadata", metadata, "Metadata snapshot file");
  health->add_option("--config", config_path, "JSON configuration file");
  health->add_option("--output", output, "text or json");

  auto* rules_cmd = app.add_subcommand("rules", "Print the rule catalog");
  rules_cmd->add_option("--output", output, "text or json");

  CLI11_PARSE(app, argc, argv);

  try {
    auto out_format = vl::parse_output_format(output);
    if (check->parsed()) {
      auto config = base_config(config_path);
      if (!fail_on.empty()) {
        auto s = vl::parse_severity(fail_on);
        if (!s) {
          throw vl::VocabError(vl::ErrorKind::invalid_config,
                               "--fail-on must be error, warning or info");
        }
        config.fail_threshold = *s;
      }
      if (!rules.empty()) config.enabled_rules = rules;
      for (const auto& s : suppress) config.suppressions.push_back(vl::Suppression::parse(s));
      if (isolate) config.isolate_files = true;
      std::optional<vl::InputFormat> forced;
      if (!format.empty()) forced = vl::parse_format(format);
      std::vector<vl::InputSpec> inputs;
      for (const auto& f : files) inputs.push_back({f, forced});
      auto report = vl::run_lint(config, inputs);
      std::cout << vl::render_report(report, out_format,
                                     out_format == vl::OutputFormat::text && use_color());
      return vl::exit_code(report, config);
    }
    if (suggest->parsed()) {
      auto config = base_config(config_path);
      if (!references.empty()) {
        config.reference_paths.assign(references.begin(), references.end());
      }
      std::cout << vl::suggest_mode(config, queries, out_format, top);
      return 0;
    }
    if (health->parsed()) {
      auto config = base_config(config_path);
      if (!metadata.empty()) config.metadata_path = metadata;
      if (!config.metadata_path) {
        throw vl::VocabError(vl::ErrorKind::invalid_config, "health needs --metadata");
      }
      auto load = vl::SnapshotProvider(read_text(config.metadata_path->string())).fetch();
      std::cout << vl::render_health(load, config.health, out_format);
      return load.errors.empty() ? 0 : 2;
    }
    std::cout << vl::render_catalog(out_format);
    return 0;
  } catch (const vl::VocabError& e) {
    std::cerr << "vocab-lint: " << vl::to_string(e.kind()) << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "vocab-lint: " << e.what() << "\n";
    return 2;
  }
}
