// simbasis: bases of simplices and chambers for a point configuration.
//
//   simbasis <command> config.json [--seed-direction 1,3] [--tie-break lex|reverse-lex]
//
// Every command prints exactly one JSON document on stdout. Exit status is 0
// on success, 1 on bad input, 2 when a certificate or internal check fails.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "simbasis/errors.hpp"
#include "simbasis/report.hpp"

using namespace simbasis;

namespace {

struct Options {
  std::string file;
  std::string seed_direction;
  std::string tie_break = "lex";
  std::string simplex;
  int point = 0;
  std::optional<std::size_t> max_steps;
};

struct VerificationFailure {
  json result;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Simplex parse_simplex(const std::string& csv, const Configuration& config) {
  auto labels = parse_label_list(csv);
  for (Label l : labels) {
    if (!config.has_label(l)) throw InputError("unknown label " + std::to_string(l));
  }
  if (labels.size() != config.dim() + 1) {
    throw InputError("a simplex needs " + std::to_string(config.dim() + 1) + " labels");
  }
  Simplex s(labels);
  if (s.vertices.size() != labels.size()) throw InputError("repeated label in " + csv);
  if (!config.is_simplex(s)) throw InputError(to_string(s) + " is affinely dependent");
  return s;
}

json run(const std::string& command, const Options& opt, json& envelope) {
  const std::string bytes = read_file(opt.file);
  envelope["input_digest"] = "sha256:" + sha256_hex(bytes);
  const Configuration config = parse_config_text(bytes);

  const TieBreak tie = opt.tie_break == "reverse-lex" ? TieBreak::reverse_lex : TieBreak::lex;
  const ShellingOrder order = opt.seed_direction.empty()
                                  ? shelling_order(config)
                                  : shelling_order(config, parse_rational_list(opt.seed_direction));
  envelope["ordering"] = order_json(order);
  if (command == "order") return order_json(order);

  // Validate command arguments before the expensive part.
  std::optional<Simplex> simplex;
  if (command == "relation" || command == "express") simplex = parse_simplex(opt.simplex, config);
  if (command == "relation") {
    if (!config.has_label(opt.point)) throw InputError("unknown label " + std::to_string(opt.point));
    if (simplex->contains(opt.point)) throw InputError("point is a vertex of the simplex");
  }

  const ChamberComplex complex(config);
  if (command == "chambers") return chambers_json(complex);
  if (command == "matrix") return matrix_json(complex);
  if (command == "relation") return relation_json(cone_relation(*simplex, opt.point, complex));

  const BasisPair pair = build_basis(complex, order, tie);
  if (command == "basis") return basis_json(pair, complex);
  if (command == "verify") {
    const auto cert = verify_triangular(pair, complex.matrix, complex.simplices);
    const auto rank = verify_basis(pair, complex.matrix, complex.simplices);
    json out = {{"basis", basis_json(pair, complex)},
                {"certificate", certificate_json(cert, pair)},
                {"rank_report", rank_json(rank)}};
    if (!cert.ok() || !rank.ok()) throw VerificationFailure{out};
    return out;
  }
  if (command == "express") {
    const auto trace = express_in_basis(*simplex, pair, complex, opt.max_steps);
    const auto check = verify_trace(trace, pair, complex);
    json out = trace_json(trace, check);
    if (!check.ok) throw VerificationFailure{out};
    return out;
  }
  throw InputError("unknown command " + command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bases of simplices and chambers for a point configuration"};
  app.require_subcommand(1);
  Options opt;
  std::size_t max_steps = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", opt.file, "configuration JSON")->required();
    sub->add_option("--seed-direction", opt.seed_direction, "generic functional, comma-separated rationals");
    sub->add_option("--tie-break", opt.tie_break, "chamber choice among equals")
        ->check(CLI::IsMember({"lex", "reverse-lex"}));
  };
  add_common(app.add_subcommand("order", "shelling order"));
  add_common(app.add_subcommand("chambers", "chamber enumeration"));
  add_common(app.add_subcommand("matrix", "incidence matrix"));
  add_common(app.add_subcommand("basis", "basis pair"));
  add_common(app.add_subcommand("verify", "triangular certificate and rank report"));
  auto* relation = app.add_subcommand("relation", "cone relation for a simplex and a point");
  add_common(relation);
  relation->add_option("--simplex", opt.simplex, "vertex labels, comma-separated")->required();
  relation->add_option("--point", opt.point, "label of the point")->required();
  auto* express = app.add_subcommand("express", "expression trace into the basis");
  add_common(express);
  express->add_option("--simplex", opt.simplex, "vertex labels, comma-separated")->required();
  auto* steps_opt = express->add_option("--max-steps", max_steps, "step budget");

  json envelope = {{"tool", {{"name", "simbasis"}, {"version", std::string(kToolVersion)}}}};
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    envelope["error"] = {{"kind", "usage"}, {"message", e.what()}};
    std::cout << envelope.dump(2) << "\n";
    return 1;
  }
  if (*steps_opt) opt.max_steps = max_steps;
  const std::string command = app.get_subcommands().front()->get_name();
  envelope["command"] = command;

  int status = 0;
  try {
    envelope["result"] = run(command, opt, envelope);
  } catch (const VerificationFailure& f) {
    envelope["result"] = f.result;
    envelope["error"] = {{"kind", "verification"}, {"message", "certificate check failed"}};
    status = 2;
  } catch (const InputError& e) {
    envelope["error"] = {{"kind", "input"}, {"message", e.what()}};
    status = 1;
  } catch (const DegenerateInput& e) {
    envelope["error"] = {{"kind", "input"}, {"message", e.what()}};
    status = 1;
  } catch (const std::exception& e) {
    envelope["error"] = {{"kind", "verification"}, {"message", e.what()}};
    status = 2;
  }
  if (status == 1 || command == "order") envelope.erase("ordering");
  std::cout << envelope.dump(2) << "\n";
  return status;
}
