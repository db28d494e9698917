#include "alia/report.hpp"

#include <sstream>

#include <json.hpp>

#include "alia/dual_triangular.hpp"
#include "alia/laws.hpp"
#include "alia/structure_file.hpp"
#include "alia/yang_baxter.hpp"

namespace alia {

namespace {

const Algebra& need_bracket(const StructureBundle& b) {
  if (!b.bracket) throw AliaError(Err::UnknownName, "file has no bracket section");
  return *b.bracket;
}

const Coalgebra& need_comul(const StructureBundle& b) {
  if (!b.comul) throw AliaError(Err::UnknownName, "file has no comul section");
  return *b.comul;
}

const LinearMap& need_map(const StructureBundle& b, const std::string& name) {
  auto it = b.maps.find(name);
  if (it == b.maps.end()) throw AliaError(Err::UnknownName, "file has no map " + name);
  return it->second;
}

const TwoTensor& need_tensor(const StructureBundle& b, const std::string& name) {
  auto it = b.tensors.find(name);
  if (it == b.tensors.end()) throw AliaError(Err::UnknownName, "file has no tensor " + name);
  return it->second;
}

const BilinearForm& need_form(const StructureBundle& b, const std::string& name) {
  auto it = b.forms.find(name);
  if (it == b.forms.end()) throw AliaError(Err::UnknownName, "file has no form " + name);
  return it->second;
}

}  // namespace

Residual run_law(const StructureBundle& b, LawId law) {
  switch (law) {
    case LawId::LeftAlia: return check_left_alia(need_bracket(b));
    case LawId::Associative: return check_associative(need_bracket(b));
    case LawId::Commutative: return check_commutative(need_bracket(b));
    case LawId::Coassociative: return check_coassociative(need_comul(b));
    case LawId::Cocommutative: return check_cocommutative(need_comul(b));
    case LawId::LeftAliaCoalgebra: return check_left_alia_coalgebra(need_comul(b));
    case LawId::NijenhuisAlgebra:
      return check_nijenhuis_algebra(need_bracket(b), need_map(b, "N"));
    case LawId::NijenhuisCoalgebra:
      return check_nijenhuis_coalgebra(need_comul(b), need_map(b, "S"));
    case LawId::AdjointAdmissible:
      return check_adjoint_admissible(need_bracket(b), need_map(b, "N"), need_map(b, "S"));
    case LawId::CoadjointAdmissible:
      return check_coadjoint_admissible(need_comul(b), need_map(b, "S"), need_map(b, "N"));
    case LawId::BialgebraCompat:
      return check_bialgebra_compat(need_bracket(b), need_comul(b));
    case LawId::NijLeftAliaBialgebra:
      return check_nijenhuis_left_alia_bialgebra(need_bracket(b), need_comul(b),
                                                 need_map(b, "N"), need_map(b, "S"));
    case LawId::Quadratic: return check_quadratic(need_bracket(b), need_form(b, "B"));
    case LawId::Symplectic: return check_symplectic(need_bracket(b), need_form(b, "omega"));
    case LawId::Cosymplectic: return check_cosymplectic(need_comul(b), need_tensor(b, "r"));
    case LawId::DBialgebra: return check_d_bialgebra(need_bracket(b), need_comul(b));
    case LawId::NijenhuisDCompat:
      return check_nijenhuis_d_compat(need_bracket(b), need_comul(b), need_map(b, "f"),
                                      need_map(b, "F"));
    case LawId::SpecialBialgebraCondition:
      return check_special_bialgebra_condition(need_bracket(b), need_comul(b), need_map(b, "f"),
                                               need_map(b, "g"), need_map(b, "F"),
                                               need_map(b, "G"));
    case LawId::Ybe: return alia_ybe_residual(need_bracket(b), need_tensor(b, "r"));
    case LawId::Prop33: return check_prop33(need_bracket(b), need_tensor(b, "r"));
    case LawId::SAdmissible:
      return s_admissibility_residual(need_tensor(b, "r"), need_map(b, "N"), need_map(b, "S"));
    case LawId::Prop37:
      return check_prop37(need_bracket(b), need_map(b, "N"), need_map(b, "S"),
                          need_tensor(b, "r"));
    case LawId::RelativeRotaBaxter:
      return check_relative_rota_baxter(need_bracket(b),
                                        left_right_operators(need_bracket(b)), need_map(b, "T"));
    case LawId::WeakRRB:
      return check_weak_rrb(need_bracket(b), need_map(b, "N"),
                            left_right_operators(need_bracket(b)), need_map(b, "alpha"),
                            need_map(b, "T"));
    case LawId::CoYbe: return co_ybe_residual(need_comul(b), need_form(b, "omega"));
    case LawId::Prop53: return check_prop53(need_comul(b), need_form(b, "omega"));
    default:
      throw AliaError(Err::UnknownName, std::string("law not checkable here: ") + law_name(law));
  }
}

CheckReport make_check_report(const std::string& file_label, LawId law,
                              const StructureBundle& b) {
  CheckReport r;
  r.file = file_label;
  r.law = law_name(law);
  Residual res = run_law(b, law);
  r.passed = res.passed();
  r.entries = res.entries;
  return r;
}

CertifyReport certify_law(const std::string& file_label, LawId law, const ParsedFile& raw) {
  CertifyReport rep;
  rep.file = file_label;
  rep.law = law_name(law);
  rep.params = raw.params;
  rep.certified = true;
  size_t np = raw.params.size();
  size_t total = 1;
  for (size_t i = 0; i < np; ++i) total *= std::size(kCertifyPoints);
  for (size_t g = 0; g < total; ++g) {
    ParamBindings bind;
    std::string label;
    size_t rest = g;
    for (size_t i = 0; i < np; ++i) {
      long v = kCertifyPoints[rest % std::size(kCertifyPoints)];
      rest /= std::size(kCertifyPoints);
      bind[raw.params[i]] = Rat(v);
      if (!label.empty()) label += ",";
      label += raw.params[i] + "=" + std::to_string(v);
    }
    StructureBundle b = resolve(raw, bind);
    Residual res = run_law(b, law);
    CertifyPointResult pt;
    pt.label = label;
    pt.passed = res.passed();
    pt.residual_count = res.entries.size();
    if (!pt.passed && rep.certified) {
      rep.certified = false;
      rep.witness = label.empty() ? std::string("(no parameters)") : label;
    }
    rep.points.push_back(std::move(pt));
  }
  return rep;
}

namespace {

std::string index_str(const std::vector<int>& idx) {
  std::string s = "(";
  for (size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(idx[i]);
  }
  s += ")";
  return s;
}

}  // namespace

std::string render_text(const CheckReport& r) {
  std::ostringstream out;
  out << "file: " << r.file << "\n";
  out << "law: " << r.law << "\n";
  out << "status: " << (r.passed ? "pass" : "fail") << "\n";
  if (!r.passed) {
    out << "residuals:\n";
    for (const auto& e : r.entries)
      out << "  " << law_name(e.part) << " " << index_str(e.index) << " = " << e.value.str()
          << "\n";
  }
  return out.str();
}

std::string render_json(const CheckReport& r) {
  nlohmann::json j;
  j["file"] = r.file;
  j["law"] = r.law;
  j["status"] = r.passed ? "pass" : "fail";
  auto arr = nlohmann::json::array();
  for (const auto& e : r.entries) {
    nlohmann::json je;
    je["part"] = law_name(e.part);
    je["index"] = e.index;
    je["value"] = e.value.str();
    arr.push_back(je);
  }
  j["residuals"] = arr;
  return j.dump(2) + "\n";
}

std::string render_text(const CertifyReport& r) {
  std::ostringstream out;
  out << "file: " << r.file << "\n";
  out << "law: " << r.law << "\n";
  out << "degree-bound: " << r.degree_bound << "\n";
  if (r.params.empty()) {
    out << "params: none\n";
  } else {
    out << "params:";
    for (const auto& p : r.params) out << " " << p;
    out << "\n";
    out << "points:";
    for (long v : kCertifyPoints) out << " " << v;
    out << "\n";
  }
  for (const auto& pt : r.points)
    out << "  " << (pt.label.empty() ? "run" : pt.label) << ": "
        << (pt.passed ? "pass" : "fail") << "\n";
  if (r.certified)
    out << "status: CERTIFIED\n";
  else
    out << "status: FAILED at " << *r.witness << "\n";
  return out.str();
}

std::string render_json(const CertifyReport& r) {
  nlohmann::json j;
  j["file"] = r.file;
  j["law"] = r.law;
  j["degree_bound"] = r.degree_bound;
  j["params"] = r.params;
  auto arr = nlohmann::json::array();
  for (const auto& pt : r.points) {
    nlohmann::json jp;
    jp["point"] = pt.label;
    jp["passed"] = pt.passed;
    jp["residuals"] = pt.residual_count;
    arr.push_back(jp);
  }
  j["points"] = arr;
  j["certified"] = r.certified;
  if (r.witness) j["witness"] = *r.witness;
  return j.dump(2) + "\n";
}

}  // namespace alia
