// excross: command-line front end over the C interface.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "excross/excross.h"

namespace {

struct CString {
  char* p = nullptr;
  ~CString() { excross_string_free(p); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"The semigroup S(G), partial actions and crossed products"};
  app.require_subcommand(1);

  std::optional<std::string> group, action, algebra, out;
  std::string format = "json";
  std::string level = "exhaustive";
  std::optional<std::size_t> max_word_len, max_group_order;
  std::uint64_t seed = 0;

  app.add_option("--group", group, "Preset (\"cyclic N\", klein4, sym3, trivial) or group document");
  app.add_option("--action", action, "Set-level or algebra-level action document");
  app.add_option("--algebra", algebra, "Algebra document, or an algebra-level action document");
  app.add_option("--out", out, "Write the report here instead of stdout");
  app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--level", level, "quick or exhaustive")->check(CLI::IsMember({"quick", "exhaustive"}));
  app.add_option("--max-word-len", max_word_len, "Longest representative word the oracle must certify")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-group-order", max_group_order, "Largest |G| for which S(G) is enumerated")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for randomized checks");

  const struct {
    const char* name;
    const char* help;
    std::initializer_list<const char*> verbs;
  } groups[] = {
      {"sg", "The semigroup S(G)", {"enumerate", "table", "oracle-check"}},
      {"action", "Partial actions", {"validate", "induce"}},
      {"cp", "Crossed products", {"group", "semigroup"}},
      {"check", "Verification suites", {"iso", "assoc", "covariant", "all"}},
  };
  std::string command, subcommand;
  for (const auto& g : groups) {
    CLI::App* sub = app.add_subcommand(g.name, g.help);
    sub->require_subcommand(1);
    sub->fallthrough();
    for (const char* verb : g.verbs) {
      CLI::App* leaf = sub->add_subcommand(verb);
      leaf->fallthrough();
      leaf->callback([&command, &subcommand, name = std::string(g.name), v = std::string(verb)] {
        command = name;
        subcommand = v;
      });
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  excross_run_options options{};
  options.command = command.c_str();
  options.subcommand = subcommand.c_str();
  options.group = group ? group->c_str() : nullptr;
  options.action = action ? action->c_str() : nullptr;
  options.algebra = algebra ? algebra->c_str() : nullptr;
  options.format = format == "csv" ? EXCROSS_FORMAT_CSV : format == "text" ? EXCROSS_FORMAT_TEXT : EXCROSS_FORMAT_JSON;
  options.level = level == "quick" ? EXCROSS_LEVEL_QUICK : EXCROSS_LEVEL_EXHAUSTIVE;
  options.max_word_len = max_word_len.value_or(0);
  options.max_group_order = max_group_order.value_or(0);
  options.seed = seed;

  CString output, diagnostic;
  int exit_code = 0;
  if (excross_run(&options, &output.p, &diagnostic.p, &exit_code) != EXCROSS_OK) {
    std::cerr << "excross: " << excross_last_error() << "\n";
    return 2;
  }
  if (out) {
    std::ofstream file(*out, std::ios::binary);
    if (!file) {
      std::cerr << "excross: cannot write " << *out << "\n";
      return 2;
    }
    file << output.p;
  } else {
    std::cout << output.p;
  }
  if (diagnostic.p != nullptr && diagnostic.p[0] != '\0') std::cerr << "excross: " << diagnostic.p << "\n";
  return exit_code;
}
