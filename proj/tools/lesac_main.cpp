#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "lesac/pipeline.hpp"

using namespace lesac;

int main(int argc, char** argv) {
  CLI::App app{"lesac - deontic structured argumentation"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string link = "last", setcomp = "eli", stance = "skeptical", semantics = "grounded", output;
  std::string defeat = "sub";
  std::string target;
  std::size_t index = 0;

  const std::map<std::string, Command> commands{{"validate", Command::Validate},
                                                {"conclusions", Command::Conclusions},
                                                {"explain", Command::Explain},
                                                {"graph", Command::Graph},
                                                {"check", Command::Check}};
  const std::map<std::string, std::string> help{
      {"validate", "check that the knowledge base is well-defined"},
      {"conclusions", "print accepted conclusions"},
      {"explain", "explain why a conclusion is accepted"},
      {"graph", "print the argument and defeat graph"},
      {"check", "verify rationality postulates and ordering properties"}};

  for (const auto& [name, cmd] : commands) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("kb", cfg.kb_path, "knowledge base (.lsc)")->required()->check(CLI::ExistingFile);
    sub->add_option("--link", link, "last or weakest")->check(CLI::IsMember({"last", "weakest"}));
    sub->add_option("--setcomp", setcomp, "eli or dem")->check(CLI::IsMember({"eli", "dem"}));
    sub->add_option("--stance", stance, "skeptical or credulous")->check(CLI::IsMember({"skeptical", "credulous"}));
    sub->add_option("--semantics", semantics, "grounded or complete")->check(CLI::IsMember({"grounded", "complete"}));
    sub->add_option("--output", output, "text, json or dot (explain defaults to json, the rest to text)")->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_option("--extension", index, "pick one extension by index");
    sub->add_option("--defeat-against", defeat, "sub (attacked subargument) or whole (attacked argument)")
        ->check(CLI::IsMember({"sub", "whole"}));
    if (cmd == Command::Explain) {
      sub->add_option("--target", target, "formula to explain")->required();
      sub->add_flag("--verbose", cfg.verbose, "also list every principle involved");
    }
    sub->callback([&cfg, cmd = cmd] { cfg.command = cmd; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;  // usage errors count as query failures
  }

  for (auto* sub : app.get_subcommands())
    if (sub->count("--extension")) cfg.extension_index = index;
  if (!target.empty()) cfg.target = target;
  cfg.link = link == "last" ? Link::Last : Link::Weakest;
  cfg.setcomp = setcomp == "eli" ? SetMode::Elitist : SetMode::Democratic;
  cfg.stance = stance == "skeptical" ? Stance::Skeptical : Stance::Credulous;
  cfg.semantics = semantics == "grounded" ? SemanticsKind::Grounded : SemanticsKind::Complete;
  if (output.empty()) output = cfg.command == Command::Explain ? "json" : "text";
  cfg.output = output == "json" ? OutputFormat::Json : output == "dot" ? OutputFormat::Dot : OutputFormat::Text;
  cfg.defeat_target = defeat == "whole" ? DefeatTarget::Whole : DefeatTarget::Subargument;

  const RunResult res = run(cfg);
  std::cout << res.out;
  std::cerr << res.err;
  return res.exit_code;
}
