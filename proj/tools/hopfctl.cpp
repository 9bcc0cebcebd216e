// hopfctl: command-line driver for structure files.
//
// Exit codes: 0 when every asserted check passes, 1 on an assertion failure,
// 2 on unreadable or malformed input.

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "hopf/session.hpp"

namespace {

constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

hopf::StructureFile load(const std::string& path) {
  const std::string text = read_input(path);
  try {
    return hopf::parse_structure(text);
  } catch (const hopf::ParseError& e) {
    throw InputError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

bool use_color(int fd) { return std::getenv("NO_COLOR") == nullptr && isatty(fd); }

int emit(const hopf::Report& r, std::ostream& os, int fd) {
  os << hopf::render_text(r, use_color(fd));
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Hopf-algebraic structures"};
  app.require_subcommand(1);

  std::string file;
  std::string name;
  std::string side;
  std::string decl;
  std::string prop;
  std::string mpi;
  std::string format = "text";
  std::string family;
  std::vector<std::uint64_t> params;
  bool dual = false;
  std::uint64_t prime = 0;

  auto* check = app.add_subcommand("check", "verify every declaration of a file");
  check->add_option("FILE", file, "structure file, or - for stdin")->required();

  auto* antipode = app.add_subcommand("antipode", "derive the antipode of a hopf declaration and insert it");
  antipode->add_option("FILE", file)->required();
  antipode->add_option("NAME", name, "hopf declaration")->required();

  auto* galois = app.add_subcommand("galois", "Galois verdict and kappa");
  galois->add_option("FILE", file)->required();
  galois->add_option("--side", side)->required()->check(CLI::IsMember({"extension", "coextension"}));
  galois->add_option("--decl", decl, "comodule algebra or module coalgebra to use");

  std::vector<std::string> props = hopf::construction_names();
  for (const char* alias : {"3.2", "3.3", "3.4", "3.6", "3.19", "3.20", "3.21"}) props.emplace_back(alias);
  auto* build = app.add_subcommand("build", "construct a mixed module, verify it and append it to the file");
  build->add_option("FILE", file)->required();
  build->add_option("--prop", prop, "construction name or number")->required()->check(CLI::IsMember(props));
  build->add_option("--mpi", mpi, "modular pair declaration (default: the trivial pair)");

  auto* catalog = app.add_subcommand("catalog", "emit a catalog structure file");
  catalog->add_option("FAMILY", family)->required();
  catalog->add_option("PARAMS", params)->required();
  catalog->add_flag("--dual", dual, "emit the linear dual");
  catalog->add_option("--field", prime, "prime field for group algebras and matrix coalgebras");

  auto* report = app.add_subcommand("report", "verify a file and print the report");
  report->add_option("FILE", file)->required();
  report->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (check->parsed()) return emit(hopf::check_file(load(file)), std::cout, STDOUT_FILENO);

    if (report->parsed()) {
      const hopf::Report r = hopf::check_file(load(file));
      if (format == "json") {
        std::cout << hopf::render_json(r);
        return r.exit_code();
      }
      return emit(r, std::cout, STDOUT_FILENO);
    }

    if (antipode->parsed()) {
      hopf::StructureFile sf = load(file);
      const hopf::Report r = hopf::derive_antipode_into(sf, name);
      std::cout << hopf::serialize(sf);
      return emit(r, std::cerr, STDERR_FILENO);
    }

    if (galois->parsed()) {
      const hopf::Report r =
          hopf::galois_report(load(file), side, decl.empty() ? std::nullopt : std::optional<std::string>(decl));
      return emit(r, std::cout, STDOUT_FILENO);
    }

    if (build->parsed()) {
      hopf::StructureFile sf = load(file);
      const hopf::BuildResult b =
          hopf::build_construction(sf, prop, mpi.empty() ? std::nullopt : std::optional<std::string>(mpi));
      std::cout << hopf::serialize(sf);
      return emit(b.report, std::cerr, STDERR_FILENO);
    }

    if (catalog->parsed()) {
      try {
        std::cout << hopf::serialize(hopf::catalog_file(
            family, params, dual, prime ? std::optional<std::uint64_t>(prime) : std::nullopt));
      } catch (const hopf::Error& e) {
        throw InputError(e.what());
      }
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const hopf::ReferenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const hopf::FieldError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const hopf::SpaceMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const hopf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kInputError;
}
