#pragma once

// JSON documents read and written by leonard-kit. Every field element is a
// string; JSON numbers are never used for entries.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "leonard/leonard.hpp"

namespace leonard::doc {

using Json = nlohmann::json;

struct MatrixPair {
  Matrix a;
  Matrix a_star;
  friend bool operator==(const MatrixPair&, const MatrixPair&) = default;
};

/// One problem instance: a matrix pair or a parameter array, plus optional orderings.
struct InstanceDocument {
  FieldDescriptor field;
  std::variant<MatrixPair, ParameterArray> body;
  std::optional<OrderingPair> orderings;

  friend bool operator==(const InstanceDocument&, const InstanceDocument&) = default;
};

struct WitnessDocument {
  std::size_t i = 0;
  std::size_t j = 0;
  ProductCondition condition = ProductCondition::DualLower;
  Matrix product;
  friend bool operator==(const WitnessDocument&, const WitnessDocument&) = default;
};

struct VerdictDocument {
  bool is_leonard_system = false;
  ConditionFlags flags{};
  std::optional<WitnessDocument> failure_witness;
  PatternClass dual_pattern = PatternClass::Other;
  PatternClass primal_pattern = PatternClass::Other;
  friend bool operator==(const VerdictDocument&, const VerdictDocument&) = default;
};

struct SplitDocument {
  std::vector<Vector> basis;  // u_0..u_d
  std::vector<FieldElement> split_sequence;
  friend bool operator==(const SplitDocument&, const SplitDocument&) = default;
};

struct CertificateDocument {
  FieldDescriptor field = FieldDescriptor::rationals();
  std::size_t d = 0;
  OrderingPair orderings;  // the pair the verdict refers to
  std::vector<OrderingPair> orderings_found;
  VerdictDocument verdict;
  std::optional<SplitDocument> split;
  std::optional<std::vector<FieldElement>> companion_phi;
  std::optional<Matrix> h;
  std::optional<Matrix> g;
  std::vector<std::string> diagnostics;

  friend bool operator==(const CertificateDocument&, const CertificateDocument&) = default;
};

/// Output of `construct`: a matrices instance (pipeable into classify) plus the report.
struct ConstructDocument {
  FieldDescriptor field;
  MatrixPair matrices;
  OrderingPair orderings;
  LeonardParameterReport report;

  friend bool operator==(const ConstructDocument& lhs, const ConstructDocument& rhs);
};

Json to_json(const FieldDescriptor& f);
Json to_json(const Matrix& m);
Json to_json(std::span<const FieldElement> xs);
Json to_json(const OrderingPair& o);
Json to_json(const ParameterArray& pa);
Json to_json(const InstanceDocument& d);
Json to_json(const CertificateDocument& d);
Json to_json(const ConstructDocument& d);

/// All parsers throw Error(Parse) naming the offending key or cell.
FieldDescriptor field_from_json(const Json& j);
InstanceDocument instance_from_json(const Json& j);
CertificateDocument certificate_from_json(const Json& j);
ConstructDocument construct_from_json(const Json& j);

/// Parses UTF-8 JSON text; syntax errors become Error(Parse).
Json parse_json(std::string_view text);
InstanceDocument parse_instance(std::string_view text);

/// Sorted keys, two-space indent, trailing newline.
std::string print(const Json& j);
/// Single line, sorted keys, trailing newline.
std::string print_line(const Json& j);

/// Builds the certificate for classify: verdict for `instance.orderings` when
/// given, otherwise for the first ordering pair found (canonical orderings
/// when none is found).
CertificateDocument classify(const InstanceDocument& instance);
/// classify plus companion phi, G and H. Throws NotLeonard.
CertificateDocument certify(const InstanceDocument& instance);
/// Throws Parse unless the instance holds a parameter array.
ConstructDocument construct(const InstanceDocument& instance);

}  // namespace leonard::doc
