// preproj: counts, Hasse quivers, braid normal forms and oracle runs for
// two-term silting over preprojective algebras of Dynkin type.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "preproj/errors.hpp"
#include "preproj/oracle/oracle.hpp"
#include "preproj/report.hpp"

using namespace preproj;

namespace {

enum Exit { kOk = 0, kValidation = 2, kCap = 3, kInvariant = 4 };

struct Options {
  std::string family = "A";
  int rank = 2;
  std::string labeling = "figure1";
  std::size_t cap = kDefaultEnumerationCap;
  std::string format;
  std::string out;
  bool tilting = false;
  bool slow = false;

  Config resolve(Format fallback) const {
    Config c;
    c.family = parse_family(family);
    c.rank = rank;
    c.labeling = parse_labeling(labeling);
    c.cap = cap;
    c.format = format.empty() ? fallback : parse_format(format);
    c.out = out;
    c.tilting = tilting;
    c.slow = slow;
    c.validate();
    return c;
  }
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--family", o.family, "Dynkin family: A, D or E")->capture_default_str();
  cmd->add_option("--rank", o.rank, "Rank of the diagram")->capture_default_str();
  cmd->add_option("--labeling", o.labeling, "Vertex names for A_n: figure1 or linear")->capture_default_str();
  cmd->add_option("--cap", o.cap, "Abort enumeration beyond this many elements")->capture_default_str();
  cmd->add_option("--format", o.format, "json, dot or text");
  cmd->add_option("--out", o.out, "Write to this file instead of stdout");
  cmd->add_flag("--tilting", o.tilting, "Restrict to tilting objects");
  cmd->add_flag("--slow", o.slow, "oracle verify: also check I_w against every reduced word");
}

void emit(const Config& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw ValidationError("cannot open " + c.out + " for writing");
  f << text;
  if (!f) throw ValidationError("write to " + c.out + " failed");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int cmd_classify(const Config& c) {
  const auto group = enumerate(c.graph(), c.cap);
  const auto r = classify(group);
  switch (c.format) {
    case Format::Json: emit(c, dump(classify_json(r, group))); break;
    case Format::Text: emit(c, classify_text(r) + "\n"); break;
    case Format::Dot: throw ValidationError("classify has no dot output");
  }
  return kOk;
}

int cmd_hasse(const Config& c) {
  const auto graph = c.graph();
  const auto group = enumerate(graph, c.cap);
  std::optional<TiltingAction> action;
  HasseQuiver q;
  if (c.tilting) {
    action.emplace(group, fold(graph));
    q = hasse(*action);
  } else {
    q = hasse(group);
  }
  switch (c.format) {
    case Format::Dot: emit(c, to_dot(q)); break;
    case Format::Json: emit(c, dump(hasse_json(q))); break;
    case Format::Text: emit(c, hasse_text(q)); break;
  }
  return kOk;
}

int cmd_braid_nf(const Config& c, const std::vector<std::string>& tokens) {
  const auto graph = c.graph();
  const auto group = enumerate(graph, c.cap);
  const FoldedWeylGroup fg(group, fold(graph));
  const BraidGroup braid(fg);
  std::string text;
  for (const auto& t : tokens) text += t + " ";
  const auto r = braid_report(braid, text);
  switch (c.format) {
    case Format::Text: emit(c, braid_text(r, group)); break;
    case Format::Json: emit(c, dump(braid_json(r, braid))); break;
    case Format::Dot: throw ValidationError("braid-nf has no dot output");
  }
  return kOk;
}

int cmd_oracle_verify(const Config& c) {
  const auto graph = c.graph();
  const auto alg = oracle::build_algebra(graph);
  const auto group = enumerate(graph, c.cap);
  const auto r = oracle::verify(alg, group, c.slow);
  switch (c.format) {
    case Format::Json: emit(c, dump(oracle_json(r))); break;
    case Format::Text: emit(c, oracle_text(r)); break;
    case Format::Dot: throw ValidationError("oracle verify has no dot output");
  }
  return r.pass ? kOk : kInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-term silting and tilting over preprojective algebras"};
  app.require_subcommand(1);

  Options o;
  auto* classify_cmd = app.add_subcommand("classify", "Count 2-silt and 2-tilt, name the folded type");
  add_common(classify_cmd, o);
  auto* hasse_cmd = app.add_subcommand("hasse", "Hasse quiver of 2-silt (or 2-tilt with --tilting)");
  add_common(hasse_cmd, o);
  std::vector<std::string> word;
  auto* braid_cmd = app.add_subcommand("braid-nf", "Garside normal form of a signed braid word");
  add_common(braid_cmd, o);
  braid_cmd->add_option("word", word, "Letters such as 1 -2 2; put -- before a leading negative")
      ->required();
  auto* oracle_cmd = app.add_subcommand("oracle", "Module-theoretic cross-checks");
  auto* verify_cmd = oracle_cmd->add_subcommand("verify", "Run every oracle check");
  oracle_cmd->require_subcommand(1);
  add_common(verify_cmd, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (*classify_cmd) return cmd_classify(o.resolve(Format::Text));
    if (*hasse_cmd) return cmd_hasse(o.resolve(Format::Dot));
    if (*braid_cmd) return cmd_braid_nf(o.resolve(Format::Text), word);
    if (*verify_cmd) return cmd_oracle_verify(o.resolve(Format::Text));
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const InvariantFailure& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return kInvariant;
  }
  return kOk;
}
