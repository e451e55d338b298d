#include "linkcat/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "linkcat/compose.hpp"
#include "linkcat/error.hpp"
#include "linkcat/families.hpp"
#include "linkcat/io.hpp"
#include "linkcat/render.hpp"

namespace linkcat::cli {

namespace {

// Failure to read or decode an input file, already formatted for the user.
struct InputError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{path + ": cannot open file"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <class Decode>
auto load(const std::string& path, Decode decode) {
  const std::string text = read_file(path);
  try {
    return decode(io::parse_json(text));
  } catch (const ParseError& e) {
    throw InputError{path + ": " + e.what()};
  } catch (const io::FormatError& e) {
    throw InputError{path + ": " + e.what()};
  } catch (const InvalidArgument& e) {
    throw InputError{path + ": " + e.what()};
  }
}

Linking load_linking(const std::string& path) {
  return load(path, [](const nlohmann::json& j) { return io::linking_from_json(j); });
}

// Maps library exceptions onto exit codes.
template <class Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.message << '\n';
    return kExitParse;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const io::FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InterfaceMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kExitInterface;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitRejected;
  }
}

}  // namespace

int run_compose(const std::string& first_path, const std::string& second_path,
                bool flat, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Linking first = load_linking(first_path);
    const Linking second = load_linking(second_path);
    const Composite c = compose_with_loops(second, first);
    nlohmann::json j = io::to_json(flat ? flatten(c.linking) : c.linking);
    j["newLoops"] = c.new_loops;
    out << io::dump(j);
    return kExitOk;
  });
}

int run_check(const std::string& path, const std::string& family,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const FamilyTag tag = parse_family(family);
    const Linking l = load_linking(path);
    const std::vector<std::string> failed = membership_failures(l, tag);
    nlohmann::json report{{"family", to_string(tag)},
                          {"member", failed.empty()},
                          {"failed", failed}};
    out << io::dump(report);
    return failed.empty() ? kExitOk : kExitNegative;
  });
}

int run_enumerate(const std::string& family, std::size_t n, bool table,
                  std::optional<std::size_t> cap, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&] {
    FamilyTag tag = parse_family(family);
    tag.loopless = true;
    const std::vector<Linking> elems = enumerate(tag, n, cap);
    if (table) {
      const std::vector<TableEntry> entries = multiplication_table(elems);
      out << io::dump(io::enumeration_to_json(elems, &entries));
    } else {
      out << io::dump(io::enumeration_to_json(elems, nullptr));
    }
    return kExitOk;
  });
}

int run_render(const std::string& path, const std::string& format,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (format != "ascii" && format != "svg") {
      throw PreconditionFailed("unknown format '" + format +
                               "' (expected ascii or svg)");
    }
    const Linking l = load_linking(path);
    out << (format == "svg" ? render_svg(l) : render_ascii(l));
    return kExitOk;
  });
}

int run_mll_check(const std::string& formula, const std::string& axioms,
                  std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const mll::Formula f = mll::parse_formula(formula);
    const std::vector<mll::Axiom> pairs = io::parse_axiom_list(axioms);
    const bool correct = mll::dr_correct(f, pairs);
    nlohmann::json axiom_json = nlohmann::json::array();
    for (const auto& [u, v] : pairs) axiom_json.push_back({u, v});
    out << io::dump({{"formula", mll::to_string(f)},
                     {"axioms", axiom_json},
                     {"correct", correct}});
    return correct ? kExitOk : kExitNegative;
  });
}

int run_mll_compose(const std::string& first_path,
                    const std::string& second_path, std::ostream& out,
                    std::ostream& err) {
  return guarded(err, [&] {
    auto decode = [](const nlohmann::json& j) { return io::net_from_json(j); };
    const mll::ProofNet first = load(first_path, decode);
    const mll::ProofNet second = load(second_path, decode);
    out << io::dump(io::to_json(mll::compose_nets(second, first)));
    return kExitOk;
  });
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Linking diagrams composed by pullback of injective relations"};
  app.require_subcommand(1);

  std::string first;
  std::string second;
  bool flat = false;
  auto* compose_cmd =
      app.add_subcommand("compose", "Compose FIRST : X->Y with SECOND : Y->Z");
  compose_cmd->add_option("first", first, "Linking JSON file X -> Y")->required();
  compose_cmd->add_option("second", second, "Linking JSON file Y -> Z")->required();
  compose_cmd->add_flag("--flat", flat, "Drop all loops from the composite");

  std::string file;
  std::string family;
  auto* check_cmd = app.add_subcommand("check", "Test family membership");
  check_cmd->add_option("file", file, "Linking JSON file")->required();
  check_cmd->add_option("--family", family,
                        "link, part, brau, tlieb, natplus; append -flat for "
                        "the loopless variant")
      ->required();

  std::size_t n = 0;
  bool table = false;
  auto* enum_cmd = app.add_subcommand(
      "enumerate", "List a loopless diagram monoid on n points");
  enum_cmd->add_option("--family", family, "part, brau or tlieb")->required();
  enum_cmd->add_option("--n", n, "Number of points per row")->required();
  enum_cmd->add_flag("--table", table, "Include the multiplication table");

  std::string format = "ascii";
  auto* render_cmd = app.add_subcommand("render", "Draw a linking");
  render_cmd->add_option("file", file, "Linking JSON file")->required();
  render_cmd->add_option("--format", format, "ascii or svg")
      ->check(CLI::IsMember({"ascii", "svg"}));

  auto* mll_cmd = app.add_subcommand("mll", "Multiplicative proof nets");
  mll_cmd->require_subcommand(1);
  std::string formula;
  std::string axioms;
  auto* mll_check = mll_cmd->add_subcommand(
      "check", "Danos-Regnier check of an axiom linking on a formula");
  mll_check->add_option("formula", formula, "Formula, e.g. \"(a^ @ a)\"")->required();
  mll_check->add_option("--axioms", axioms, "Leaf pairs, e.g. \"0-3,1-2\"")
      ->required();
  auto* mll_compose = mll_cmd->add_subcommand(
      "compose", "Cut elimination of FIRST : X-oY followed by SECOND : Y-oZ");
  mll_compose->add_option("first", first, "Proof net JSON file")->required();
  mll_compose->add_option("second", second, "Proof net JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  if (*compose_cmd) return run_compose(first, second, flat, out, err);
  if (*check_cmd) return run_check(file, family, out, err);
  if (*enum_cmd) {
    std::optional<std::size_t> cap;
    if (const char* env = std::getenv("LINKCAT_MAX_ENUM")) {
      try {
        cap = static_cast<std::size_t>(std::stoul(env));
      } catch (const std::exception&) {
        err << "error: LINKCAT_MAX_ENUM must be a non-negative integer\n";
        return kExitRejected;
      }
    }
    return run_enumerate(family, n, table, cap, out, err);
  }
  if (*render_cmd) return run_render(file, format, out, err);
  if (*mll_check) return run_mll_check(formula, axioms, out, err);
  if (*mll_compose) return run_mll_compose(first, second, out, err);
  return kExitRejected;
}

}  // namespace linkcat::cli
