#include "leonard/document.hpp"

#include <algorithm>

#include "leonard/error.hpp"
#include "leonard/linalg.hpp"

namespace leonard::doc {

namespace {

Error parse_error(const std::string& where, const std::string& what) { return Error(ErrorKind::Parse, where + ": " + what); }

const Json& require(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw parse_error(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw parse_error(where, "missing key \"" + key + "\"");
  return *it;
}

const Json* optional_key(const Json& j, const std::string& key) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

FieldElement element_from_json(const FieldDescriptor& f, const Json& j, const std::string& where) {
  if (!j.is_string()) throw parse_error(where, "entries must be JSON strings");
  const std::string text = j.get<std::string>();
  try {
    return FieldElement::parse(f, text);
  } catch (const Error&) {
    throw parse_error(where, "malformed entry \"" + text + "\"");
  }
}

std::vector<FieldElement> elements_from_json(const FieldDescriptor& f, const Json& j, const std::string& where) {
  if (!j.is_array()) throw parse_error(where, "expected an array");
  std::vector<FieldElement> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(element_from_json(f, j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Matrix matrix_from_json(const FieldDescriptor& f, const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw parse_error(where, "expected a nonempty array of rows");
  const std::size_t n = j.size();
  std::vector<FieldElement> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != n) throw parse_error(row, "expected " + std::to_string(n) + " entries (square matrix)");
    for (std::size_t k = 0; k < n; ++k) flat.push_back(element_from_json(f, j[i][k], row + "[" + std::to_string(k) + "]"));
  }
  return Matrix(f, n, std::move(flat));
}

std::vector<Vector> vectors_from_json(const FieldDescriptor& f, const Json& j, const std::string& where) {
  if (!j.is_array()) throw parse_error(where, "expected an array of rows");
  std::vector<Vector> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto xs = elements_from_json(f, j[i], where + "[" + std::to_string(i) + "]");
    if (xs.empty()) throw parse_error(where, "empty vector");
    out.emplace_back(f, std::move(xs));
  }
  return out;
}

std::size_t size_from_json(const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) return j.get<std::size_t>();
  if (j.is_number_integer() && j.get<long long>() >= 0) return static_cast<std::size_t>(j.get<long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (!s.empty() && s.size() < 10 && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) return std::stoul(s);
  }
  throw parse_error(where, "expected a nonnegative integer");
}

bool bool_from_json(const Json& j, const std::string& where) {
  if (!j.is_boolean()) throw parse_error(where, "expected a boolean");
  return j.get<bool>();
}

std::string string_from_json(const Json& j, const std::string& where) {
  if (!j.is_string()) throw parse_error(where, "expected a string");
  return j.get<std::string>();
}

OrderingPair orderings_from_json(const FieldDescriptor& f, const Json& j, const std::string& where) {
  return OrderingPair{elements_from_json(f, require(j, "theta_order", where), where + ".theta_order"),
                      elements_from_json(f, require(j, "theta_star_order", where), where + ".theta_star_order")};
}

ParameterArray parameter_array_from_json(const FieldDescriptor& f, const Json& j, const std::string& where) {
  ParameterArray pa{f, size_from_json(require(j, "d", where), where + ".d"),
                    elements_from_json(f, require(j, "theta", where), where + ".theta"),
                    elements_from_json(f, require(j, "theta_star", where), where + ".theta_star"),
                    elements_from_json(f, require(j, "varphi", where), where + ".varphi")};
  return pa;
}

PatternClass pattern_from_json(const Json& j, const std::string& where) {
  const std::string s = string_from_json(j, where);
  for (auto c : {PatternClass::LowerPattern, PatternClass::UpperPattern, PatternClass::IrreducibleTridiagonal, PatternClass::Other}) {
    if (to_string(c) == s) return c;
  }
  throw parse_error(where, "unknown pattern class \"" + s + "\"");
}

constexpr std::array<ProductCondition, 4> kConditions{ProductCondition::DualLower, ProductCondition::DualUpper,
                                                      ProductCondition::PrimalLower, ProductCondition::PrimalUpper};

ProductCondition condition_from_json(const Json& j, const std::string& where) {
  const std::string s = string_from_json(j, where);
  for (auto c : kConditions) {
    if (to_string(c) == s) return c;
  }
  throw parse_error(where, "unknown condition \"" + s + "\"");
}

ParameterCondition parameter_condition_from_json(const Json& j, const std::string& where) {
  const std::string s = string_from_json(j, where);
  for (auto c : {ParameterCondition::CondI, ParameterCondition::CondII, ParameterCondition::CondIII, ParameterCondition::PhiZero}) {
    if (to_string(c) == s) return c;
  }
  throw parse_error(where, "unknown parameter condition \"" + s + "\"");
}

Json vectors_to_json(const std::vector<Vector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(v.to_strings());
  return out;
}

VerdictDocument verdict_document(const LeonardVerdict& v) {
  VerdictDocument out{v.is_leonard_system, v.flags, std::nullopt, classify_pattern(v.dual_pattern), classify_pattern(v.primal_pattern)};
  if (v.failure_witness) {
    const auto& w = *v.failure_witness;
    out.failure_witness = WitnessDocument{w.i, w.j, w.condition, w.product};
  }
  return out;
}

std::string describe(const WitnessDocument& w) {
  const bool dual = w.condition == ProductCondition::DualLower || w.condition == ProductCondition::DualUpper;
  const std::string product = dual ? "E*_" + std::to_string(w.i) + " A E*_" + std::to_string(w.j)
                                   : "E_" + std::to_string(w.i) + " A* E_" + std::to_string(w.j);
  const std::size_t gap = w.i > w.j ? w.i - w.j : w.j - w.i;
  const bool lower = w.condition == ProductCondition::DualLower || w.condition == ProductCondition::PrimalLower;
  const std::string state = w.product.is_zero() ? "is zero" : "is nonzero";
  const std::string need = gap == 1 ? "must be nonzero" : "must vanish";
  return std::string(to_string(w.condition)) + " fails: " + product + " " + state + " but " + need + " (" +
         (lower ? "i - j" : "j - i") + " = " + std::to_string(gap) + ")";
}

MatrixPair instance_matrices(const InstanceDocument& instance) {
  if (const auto* m = std::get_if<MatrixPair>(&instance.body)) return *m;
  auto [a, s] = construct_pair(std::get<ParameterArray>(instance.body));
  return MatrixPair{std::move(a), std::move(s)};
}

}  // namespace

bool operator==(const ConstructDocument& lhs, const ConstructDocument& rhs) {
  return lhs.field == rhs.field && lhs.matrices == rhs.matrices && lhs.orderings == rhs.orderings &&
         lhs.report.valid == rhs.report.valid && lhs.report.phi == rhs.report.phi &&
         lhs.report.failed_condition == rhs.report.failed_condition;
}

Json to_json(const FieldDescriptor& f) {
  if (f.is_rational()) return Json{{"kind", "rational"}};
  return Json{{"kind", "gf"}, {"p", f.modulus()}};
}

Json to_json(const Matrix& m) { return m.to_strings(); }

Json to_json(std::span<const FieldElement> xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

Json to_json(const OrderingPair& o) { return Json{{"theta_order", to_json(o.theta_order)}, {"theta_star_order", to_json(o.theta_star_order)}}; }

Json to_json(const ParameterArray& pa) {
  return Json{{"d", pa.d}, {"theta", to_json(pa.theta)}, {"theta_star", to_json(pa.theta_star)}, {"varphi", to_json(pa.varphi)}};
}

Json to_json(const InstanceDocument& d) {
  Json out{{"field", to_json(d.field)}};
  if (const auto* m = std::get_if<MatrixPair>(&d.body)) {
    out["matrices"] = Json{{"A", to_json(m->a)}, {"A_star", to_json(m->a_star)}};
  } else {
    out["parameter_array"] = to_json(std::get<ParameterArray>(d.body));
  }
  if (d.orderings) out["orderings"] = to_json(*d.orderings);
  return out;
}

Json to_json(const CertificateDocument& d) {
  Json flags;
  for (auto c : kConditions) flags[std::string(to_string(c))] = d.verdict.flags[static_cast<std::size_t>(c)];
  Json witness = nullptr;
  if (const auto& w = d.verdict.failure_witness) {
    witness = Json{{"i", w->i}, {"j", w->j}, {"condition", to_string(w->condition)}, {"product", to_json(w->product)}};
  }
  Json found = Json::array();
  for (const auto& o : d.orderings_found) found.push_back(to_json(o));

  Json out{{"field", to_json(d.field)},
           {"d", d.d},
           {"orderings", to_json(d.orderings)},
           {"orderings_found", found},
           {"verdict",
            {{"is_leonard_system", d.verdict.is_leonard_system},
             {"condition_flags", flags},
             {"failure_witness", witness},
             {"dual_pattern", to_string(d.verdict.dual_pattern)},
             {"primal_pattern", to_string(d.verdict.primal_pattern)}}},
           {"diagnostics", d.diagnostics}};
  out["split"] = d.split ? Json{{"basis", vectors_to_json(d.split->basis)}, {"split_sequence", to_json(d.split->split_sequence)}}
                         : Json(nullptr);
  if (d.companion_phi) out["companion_phi"] = to_json(*d.companion_phi);
  if (d.h) out["antiautomorphism"] = Json{{"H", to_json(*d.h)}};
  if (d.g) out["g_conjugation"] = Json{{"G", to_json(*d.g)}};
  return out;
}

Json to_json(const ConstructDocument& d) {
  Json report{{"valid", d.report.valid},
              {"phi", d.report.phi ? to_json(*d.report.phi) : Json(nullptr)},
              {"failed_condition", d.report.failed_condition ? Json(to_string(*d.report.failed_condition)) : Json(nullptr)}};
  return Json{{"field", to_json(d.field)},
              {"matrices", {{"A", to_json(d.matrices.a)}, {"A_star", to_json(d.matrices.a_star)}}},
              {"orderings", to_json(d.orderings)},
              {"report", report}};
}

FieldDescriptor field_from_json(const Json& j) {
  auto build = [](std::uint64_t p) {
    try {
      return FieldDescriptor::prime_field(p);
    } catch (const Error& e) {
      throw parse_error("field", e.what());
    }
  };
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "rational") return FieldDescriptor::rationals();
    if (s.rfind("gf:", 0) == 0 && s.size() > 3 && s.size() <= 13 &&
        std::all_of(s.begin() + 3, s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      return build(std::stoull(s.substr(3)));
    }
    throw parse_error("field", "expected \"rational\" or \"gf:P\", got \"" + s + "\"");
  }
  const std::string kind = string_from_json(require(j, "kind", "field"), "field.kind");
  if (kind == "rational") return FieldDescriptor::rationals();
  if (kind != "gf") throw parse_error("field.kind", "expected \"rational\" or \"gf\"");
  const Json& p = require(j, "p", "field");
  if (p.is_string()) return field_from_json(Json("gf:" + p.get<std::string>()));
  if (!p.is_number_unsigned()) throw parse_error("field.p", "expected a positive integer");
  return build(p.get<std::uint64_t>());
}

InstanceDocument instance_from_json(const Json& j) {
  if (!j.is_object()) throw parse_error("document", "expected a JSON object");
  const FieldDescriptor f = field_from_json(require(j, "field", "document"));
  const Json* m = optional_key(j, "matrices");
  const Json* pa = optional_key(j, "parameter_array");
  if ((m == nullptr) == (pa == nullptr)) throw parse_error("document", "exactly one of \"matrices\" and \"parameter_array\" is required");

  InstanceDocument out{f, MatrixPair{Matrix::zero(f, 1), Matrix::zero(f, 1)}, std::nullopt};
  if (m) {
    Matrix a = matrix_from_json(f, require(*m, "A", "matrices"), "A");
    Matrix s = matrix_from_json(f, require(*m, "A_star", "matrices"), "A_star");
    if (a.dim() != s.dim()) throw parse_error("matrices", "A is " + std::to_string(a.dim()) + "x" + std::to_string(a.dim()) +
                                                          " but A_star is " + std::to_string(s.dim()) + "x" + std::to_string(s.dim()));
    out.body = MatrixPair{std::move(a), std::move(s)};
  } else {
    out.body = parameter_array_from_json(f, *pa, "parameter_array");
  }
  if (const Json* o = optional_key(j, "orderings")) out.orderings = orderings_from_json(f, *o, "orderings");
  return out;
}

CertificateDocument certificate_from_json(const Json& j) {
  const FieldDescriptor f = field_from_json(require(j, "field", "document"));
  CertificateDocument out;
  out.field = f;
  out.d = size_from_json(require(j, "d", "document"), "d");
  out.orderings = orderings_from_json(f, require(j, "orderings", "document"), "orderings");
  const Json& found = require(j, "orderings_found", "document");
  if (!found.is_array()) throw parse_error("orderings_found", "expected an array");
  for (std::size_t i = 0; i < found.size(); ++i) out.orderings_found.push_back(orderings_from_json(f, found[i], "orderings_found[" + std::to_string(i) + "]"));

  const Json& v = require(j, "verdict", "document");
  out.verdict.is_leonard_system = bool_from_json(require(v, "is_leonard_system", "verdict"), "verdict.is_leonard_system");
  const Json& flags = require(v, "condition_flags", "verdict");
  for (auto c : kConditions) {
    const std::string key(to_string(c));
    out.verdict.flags[static_cast<std::size_t>(c)] = bool_from_json(require(flags, key, "verdict.condition_flags"), "verdict.condition_flags." + key);
  }
  if (const Json* w = optional_key(v, "failure_witness")) {
    out.verdict.failure_witness = WitnessDocument{size_from_json(require(*w, "i", "failure_witness"), "failure_witness.i"),
                                                  size_from_json(require(*w, "j", "failure_witness"), "failure_witness.j"),
                                                  condition_from_json(require(*w, "condition", "failure_witness"), "failure_witness.condition"),
                                                  matrix_from_json(f, require(*w, "product", "failure_witness"), "failure_witness.product")};
  }
  out.verdict.dual_pattern = pattern_from_json(require(v, "dual_pattern", "verdict"), "verdict.dual_pattern");
  out.verdict.primal_pattern = pattern_from_json(require(v, "primal_pattern", "verdict"), "verdict.primal_pattern");

  if (const Json* s = optional_key(j, "split")) {
    out.split = SplitDocument{vectors_from_json(f, require(*s, "basis", "split"), "split.basis"),
                              elements_from_json(f, require(*s, "split_sequence", "split"), "split.split_sequence")};
  }
  if (const Json* c = optional_key(j, "companion_phi")) out.companion_phi = elements_from_json(f, *c, "companion_phi");
  if (const Json* h = optional_key(j, "antiautomorphism")) out.h = matrix_from_json(f, require(*h, "H", "antiautomorphism"), "antiautomorphism.H");
  if (const Json* g = optional_key(j, "g_conjugation")) out.g = matrix_from_json(f, require(*g, "G", "g_conjugation"), "g_conjugation.G");
  const Json& diag = require(j, "diagnostics", "document");
  if (!diag.is_array()) throw parse_error("diagnostics", "expected an array");
  for (std::size_t i = 0; i < diag.size(); ++i) out.diagnostics.push_back(string_from_json(diag[i], "diagnostics[" + std::to_string(i) + "]"));
  return out;
}

ConstructDocument construct_from_json(const Json& j) {
  InstanceDocument inst = instance_from_json(j);
  const auto* m = std::get_if<MatrixPair>(&inst.body);
  if (!m || !inst.orderings) throw parse_error("document", "construct output carries matrices and orderings");
  const Json& r = require(j, "report", "document");
  LeonardParameterReport report;
  report.valid = bool_from_json(require(r, "valid", "report"), "report.valid");
  if (const Json* phi = optional_key(r, "phi")) report.phi = elements_from_json(inst.field, *phi, "report.phi");
  if (const Json* c = optional_key(r, "failed_condition")) report.failed_condition = parameter_condition_from_json(*c, "report.failed_condition");
  return ConstructDocument{inst.field, *m, *inst.orderings, std::move(report)};
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
}

InstanceDocument parse_instance(std::string_view text) { return instance_from_json(parse_json(text)); }

std::string print(const Json& j) { return j.dump(2) + "\n"; }
std::string print_line(const Json& j) { return j.dump() + "\n"; }

CertificateDocument classify(const InstanceDocument& instance) {
  const MatrixPair m = instance_matrices(instance);
  const FieldDescriptor f = instance.field;
  CertificateDocument out;
  out.field = f;
  out.d = m.a.dim() - 1;
  out.orderings_found = find_leonard_orderings(m.a, m.a_star);

  std::optional<OrderingPair> chosen = instance.orderings;
  if (!chosen) {
    if (const auto* pa = std::get_if<ParameterArray>(&instance.body)) {
      chosen = pa->orderings();
    } else if (!out.orderings_found.empty()) {
      chosen = out.orderings_found.front();
    }
  }
  const SpectralPair sp = spectral_pair(m.a, m.a_star, chosen);
  out.orderings = sp.orderings();
  const LeonardVerdict verdict = leonard_verdict(sp);
  out.verdict = verdict_document(verdict);

  if (exists_split(sp)) {
    SplitCertificate cert = build_split(sp);
    out.split = SplitDocument{cert.basis(), cert.split_sequence};
  }

  if (verdict.is_leonard_system) {
    out.diagnostics.push_back("all four product conditions hold for the reported orderings");
  } else {
    out.diagnostics.push_back(describe(*out.verdict.failure_witness));
    for (auto c : kConditions) {
      if (!verdict.flag(c)) out.diagnostics.push_back(std::string(to_string(c)) + " does not hold");
    }
    const Char1Legs legs = char1_legs(m.a, m.a_star, out.orderings);
    if (!legs.forward) out.diagnostics.push_back("no split decomposition for (theta, theta*)");
    if (!legs.reversed) out.diagnostics.push_back("no split decomposition for (theta reversed, theta*)");
  }
  out.diagnostics.push_back(std::to_string(out.orderings_found.size()) + " Leonard ordering pair(s) found");
  return out;
}

CertificateDocument certify(const InstanceDocument& instance) {
  CertificateDocument out = classify(instance);
  if (!out.verdict.is_leonard_system) {
    throw Error(ErrorKind::NotLeonard, out.diagnostics.front());
  }
  const MatrixPair m = instance_matrices(instance);
  const std::size_t n = m.a.dim();
  auto violation = [](const std::string& what) { return Error(ErrorKind::InvariantViolation, "certificate: " + what); };

  const CanonicalForm cf = canonicalize(m.a, m.a_star, out.orderings);
  const GConjugation gc = g_conjugation(cf.a, cf.a_star, cf.parameters.orderings());
  const LeonardParameterReport report = check_parameter_array(cf.parameters);
  if (!report.valid || *report.phi != gc.phi) throw violation("companion sequence disagrees with the parameter-array test");

  Matrix g = cf.change_of_basis * gc.g;
  const Matrix g_inv = inverse(g);
  std::vector<FieldElement> reversed(out.orderings.theta_order.rbegin(), out.orderings.theta_order.rend());
  ParameterArray flipped{out.field, n - 1, reversed, out.orderings.theta_star_order, gc.phi};
  auto [want_a, want_s] = construct_pair(flipped);
  if (!(g_inv * m.a * g == want_a) || !(g_inv * m.a_star * g == want_s)) throw violation("G does not conjugate to the reversed form");

  const SpectralPair sp = spectral_pair(m.a, m.a_star, out.orderings);
  const Antiautomorphism dagger = antiautomorphism_in_eigenbasis(m.a, sp.dual);
  for (const Matrix* x : {&m.a, &m.a_star}) {
    if (!(dagger.apply(*x) == *x) || !(dagger.apply(dagger.apply(*x)) == *x)) throw violation("H conjugation identity fails");
  }
  if (conjugator_solutions(m.a, m.a_star).size() != 1) throw violation("conjugator solution space is not a line");

  out.companion_phi = gc.phi;
  out.h = dagger.conjugator;
  out.g = std::move(g);
  out.diagnostics.push_back("split basis, G and H re-verified");
  return out;
}

ConstructDocument construct(const InstanceDocument& instance) {
  const auto* pa = std::get_if<ParameterArray>(&instance.body);
  if (!pa) throw Error(ErrorKind::Parse, "document: construct needs a \"parameter_array\"");
  auto [a, s] = construct_pair(*pa);
  return ConstructDocument{instance.field, MatrixPair{std::move(a), std::move(s)}, pa->orderings(), check_parameter_array(*pa)};
}

}  // namespace leonard::doc
