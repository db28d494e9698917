// Command-line surface: check laws, run constructions, certify parameterized
// files, and dump the built-in example corpus.
//
// Exit codes: 0 law holds / construction succeeded, 1 residual nonzero or a
// mathematical hypothesis failed, 2 usage or input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "alia/constructions.hpp"
#include "alia/dual_triangular.hpp"
#include "alia/example_corpus.hpp"
#include "alia/laws.hpp"
#include "alia/report.hpp"
#include "alia/structure_file.hpp"
#include "alia/yang_baxter.hpp"

namespace {

using namespace alia;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw AliaError(Err::Usage, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ParamBindings parse_bindings(const std::vector<std::string>& sets) {
  ParamBindings out;
  for (const auto& s : sets) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0)
      throw AliaError(Err::Usage, "--set expects NAME=RATIONAL, got '" + s + "'");
    try {
      out[s.substr(0, eq)] = Rat::parse(s.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw AliaError(Err::Usage, std::string("--set value: ") + e.what());
    }
  }
  return out;
}

void apply_overrides(StructureBundle& b, const std::vector<std::string>& overrides) {
  for (const auto& s : overrides) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0)
      throw AliaError(Err::Usage, "--override expects MAP=identity|zero|@OTHER, got '" + s + "'");
    std::string name = s.substr(0, eq);
    std::string value = s.substr(eq + 1);
    if (value == "identity") {
      b.maps[name] = LinearMap::identity(b.dim);
    } else if (value == "zero") {
      b.maps[name] = LinearMap::zero(b.dim);
    } else if (!value.empty() && value[0] == '@') {
      auto it = b.maps.find(value.substr(1));
      if (it == b.maps.end())
        throw AliaError(Err::UnknownName, "override source map " + value.substr(1) + " missing");
      b.maps[name] = it->second;
    } else {
      throw AliaError(Err::Usage, "--override value must be identity, zero or @OTHER");
    }
  }
}

LawId parse_law(const std::string& name) {
  auto law = law_from_name(name);
  if (!law) {
    std::string known;
    for (const auto& n : checkable_law_names()) known += "\n  " + n;
    throw AliaError(Err::Usage, "unknown law '" + name + "'; known laws:" + known);
  }
  return *law;
}

int cmd_check(const std::vector<std::string>& files, const std::string& law_name_str,
              const std::vector<std::string>& sets, const std::vector<std::string>& overrides,
              const std::string& format) {
  LawId law = parse_law(law_name_str);
  ParamBindings bindings = parse_bindings(sets);
  int worst = 0;
  std::string out;
  for (const auto& path : files) {
    StructureBundle b = parse_structure(read_file(path), bindings);
    apply_overrides(b, overrides);
    CheckReport rep = make_check_report(path, law, b);
    out += format == "json" ? render_json(rep) : render_text(rep);
    if (!rep.passed) worst = std::max(worst, 1);
  }
  std::cout << out;
  return worst;
}

int cmd_certify(const std::string& file, const std::string& law_name_str,
                const std::string& format) {
  LawId law = parse_law(law_name_str);
  ParsedFile raw = parse_raw(read_file(file));
  if (raw.params.empty()) {
    // No parameters: identical to check.
    CheckReport rep = make_check_report(file, law, resolve(raw, {}));
    std::cout << (format == "json" ? render_json(rep) : render_text(rep));
    return rep.passed ? 0 : 1;
  }
  CertifyReport rep = certify_law(file, law, raw);
  std::cout << (format == "json" ? render_json(rep) : render_text(rep));
  return rep.certified ? 0 : 1;
}

StructureBundle run_construct(const std::string& kind, const StructureBundle& in) {
  auto need_bracket = [&]() -> const Algebra& {
    if (!in.bracket) throw AliaError(Err::UnknownName, "input has no bracket section");
    return *in.bracket;
  };
  auto need_comul = [&]() -> const Coalgebra& {
    if (!in.comul) throw AliaError(Err::UnknownName, "input has no comul section");
    return *in.comul;
  };
  auto need_map = [&](const std::string& n) -> const LinearMap& {
    auto it = in.maps.find(n);
    if (it == in.maps.end()) throw AliaError(Err::UnknownName, "input has no map " + n);
    return it->second;
  };
  auto opt_map = [&](const std::string& n) -> std::optional<LinearMap> {
    auto it = in.maps.find(n);
    if (it == in.maps.end()) return std::nullopt;
    return it->second;
  };
  auto need_tensor = [&](const std::string& n) -> const TwoTensor& {
    auto it = in.tensors.find(n);
    if (it == in.tensors.end()) throw AliaError(Err::UnknownName, "input has no tensor " + n);
    return it->second;
  };
  auto need_form = [&](const std::string& n) -> const BilinearForm& {
    auto it = in.forms.find(n);
    if (it == in.forms.end()) throw AliaError(Err::UnknownName, "input has no form " + n);
    return it->second;
  };

  StructureBundle out;
  if (kind == "special") {
    out.dim = in.dim;
    out.bracket = special_left_alia(need_bracket(), need_map("f"), need_map("g"));
  } else if (kind == "delta-r") {
    out.dim = in.dim;
    out.comul = delta_r(need_bracket(), need_tensor("r"));
  } else if (kind == "bracket-omega") {
    out.dim = in.dim;
    out.bracket = bracket_omega(need_comul(), need_form("omega"));
  } else if (kind == "nijenhuis-from-symplectic") {
    out.dim = in.dim;
    out.bracket = need_bracket();
    out.maps["N"] =
        nijenhuis_from_symplectic(need_bracket(), need_form("omega"), need_tensor("r"));
  } else if (kind == "nijenhuis-from-cosymplectic") {
    out.dim = in.dim;
    out.comul = need_comul();
    out.maps["S"] = nijenhuis_coalgebra_from_cosymplectic(need_comul(), need_tensor("r"),
                                                          need_form("omega"));
  } else if (kind == "semidirect") {
    SemidirectResult res = semidirect_product(
        need_bracket(), left_right_operators(need_bracket()), opt_map("N"), opt_map("alpha"));
    out.dim = res.big.dim;
    out.bracket = std::move(res.big);
    if (res.nij) out.maps["N"] = *res.nij;
  } else if (kind == "double") {
    DoubleBundle res = drinfeld_double(need_bracket(), need_comul(), opt_map("N"), opt_map("S"));
    out.dim = res.big.dim;
    out.bracket = std::move(res.big);
    out.forms["B"] = res.form;
    if (res.nij) out.maps["N"] = *res.nij;
  } else if (kind == "t-sharp-lift") {
    TSharpLift res =
        t_sharp_lift(need_bracket(), left_right_operators(need_bracket()), need_map("T"),
                     opt_map("S"), opt_map("alpha"), opt_map("beta"), opt_map("N"));
    out.dim = res.big.dim;
    out.bracket = std::move(res.big);
    out.tensors["r"] = res.r;
    if (res.nij) out.maps["N"] = *res.nij;
    if (res.adm) out.maps["S"] = *res.adm;
  } else {
    throw AliaError(Err::Usage, "unknown construction '" + kind + "'");
  }
  return out;
}

int cmd_construct(const std::string& kind, const std::string& file,
                  const std::vector<std::string>& sets, const std::string& out_path) {
  ParamBindings bindings = parse_bindings(sets);
  StructureBundle in = parse_structure(read_file(file), bindings);
  StructureBundle out = run_construct(kind, in);
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw AliaError(Err::Usage, "cannot write " + out_path);
  os << emit_structure(out);
  return 0;
}

int cmd_examples(const std::string& write_dir) {
  if (write_dir.empty()) {
    for (const auto& ex : builtin_examples())
      std::cout << ex.name << " - " << ex.summary << "\n";
    return 0;
  }
  std::filesystem::create_directories(write_dir);
  for (const auto& ex : builtin_examples()) {
    std::filesystem::path p = std::filesystem::path(write_dir) / ex.name;
    std::ofstream os(p, std::ios::binary);
    if (!os) throw AliaError(Err::Usage, "cannot write " + p.string());
    os << ex.text;
    std::cout << "wrote " << p.string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact structure-constant toolkit for left Alia algebra structures"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  std::string law, format = "text", out_path, kind, write_dir;
  std::vector<std::string> sets, overrides;

  CLI::App* check = app.add_subcommand("check", "evaluate a law residual on files");
  check->add_option("files", files, "structure files")->required()->expected(-1);
  check->add_option("--law", law, "law name")->required();
  check->add_option("--set", sets, "bind a parameter, NAME=RATIONAL");
  check->add_option("--override", overrides, "replace a map, MAP=identity|zero|@OTHER");
  check->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  CLI::App* construct = app.add_subcommand("construct", "build a derived structure file");
  construct
      ->add_option("kind", kind,
                   "special | semidirect | double | delta-r | bracket-omega | "
                   "nijenhuis-from-symplectic | nijenhuis-from-cosymplectic | t-sharp-lift")
      ->required();
  construct->add_option("file", files, "input structure file")->required()->expected(1);
  construct->add_option("--set", sets, "bind a parameter, NAME=RATIONAL");
  construct->add_option("-o,--output", out_path, "output path")->required();

  CLI::App* certify = app.add_subcommand("certify", "check a law at all parameter sample points");
  certify->add_option("file", files, "structure file")->required()->expected(1);
  certify->add_option("--law", law, "law name")->required();
  certify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  CLI::App* examples = app.add_subcommand("examples", "list or write the built-in corpus");
  examples->add_option("--write", write_dir, "directory to write the example files into");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(files, law, sets, overrides, format);
    if (construct->parsed()) return cmd_construct(kind, files.at(0), sets, out_path);
    if (certify->parsed()) return cmd_certify(files.at(0), law, format);
    if (examples->parsed()) return cmd_examples(write_dir);
  } catch (const AliaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_input_error() ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
