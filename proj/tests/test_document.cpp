#include <doctest.h>

#include "leonard/cli.hpp"
#include "leonard/document.hpp"
#include "leonard/sampler.hpp"
#include "support.hpp"

using namespace leonard;
using namespace leonard::doc;

namespace {

const char* kD2 = R"({"field":"rational","parameter_array":{"d":2,"theta":["2","0","-2"],"theta_star":["2","0","-2"],"varphi":["-4","-4"]}})";
const char* kD2Bad = R"({"field":"rational","parameter_array":{"d":2,"theta":["2","0","-2"],"theta_star":["2","0","-2"],"varphi":["-4","1"]}})";

std::string pair_doc(const std::string& a, const std::string& s, const std::string& field = "\"rational\"") {
  return "{\"field\":" + field + ",\"matrices\":{\"A\":" + a + ",\"A_star\":" + s + "}}";
}

}  // namespace

TEST_CASE("field descriptors in documents") {
  CHECK(field_from_json(Json("rational")) == FieldDescriptor::rationals());
  CHECK(field_from_json(Json("gf:997")) == FieldDescriptor::prime_field(997));
  CHECK(field_from_json(Json::parse(R"({"kind":"gf","p":7})")) == FieldDescriptor::prime_field(7));
  CHECK(field_from_json(Json::parse(R"({"kind":"rational"})")) == FieldDescriptor::rationals());
  for (const char* bad : {R"("gf:8")", R"("real")", R"({"kind":"gf"})", R"({"kind":"gf","p":-3})", "3"}) {
    CHECK_THROWS_AS(field_from_json(Json::parse(bad)), Error);
  }
}

TEST_CASE("instance parsing") {
  auto inst = parse_instance(kD2);
  REQUIRE(std::holds_alternative<ParameterArray>(inst.body));
  CHECK(std::get<ParameterArray>(inst.body).varphi == support::els(support::q(), {-4, -4}));
  auto bad = [](const std::string& text) {
    try {
      parse_instance(text);
      return std::string();
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Parse);
      return std::string(e.what());
    }
  };
  CHECK(bad(pair_doc(R"([["1","1.5"],["0","2"]])", R"([["1","0"],["0","2"]])")).find("A[0][1]") != std::string::npos);
  CHECK(bad(pair_doc(R"([["1",2],["0","2"]])", R"([["1","0"],["0","2"]])")).find("A[0][1]") != std::string::npos);
  CHECK_FALSE(bad(pair_doc(R"([["1","1"]])", R"([["1","0"],["0","2"]])")).empty());
  CHECK_FALSE(bad(pair_doc(R"([["1"]])", R"([["1","0"],["0","2"]])")).empty());
  CHECK_FALSE(bad(R"({"field":"rational"})").empty());
  CHECK_FALSE(bad("{not json").empty());
  CHECK_FALSE(bad(R"({"field":"rational","matrices":{"A":[["1"]],"A_star":[["1"]]},"parameter_array":{"d":0,"theta":["1"],"theta_star":["1"],"varphi":[]}})").empty());
  CHECK(bad(pair_doc(R"([["1"]])", R"([["-1"]])", "\"gf:5\"")).find("-1") != std::string::npos);
}

TEST_CASE("instance round trip") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto f = seed % 2 ? FieldDescriptor::prime_field(997) : FieldDescriptor::rationals();
    auto pa = random_parameter_arrays(seed, seed % 7, f, 1).front();
    InstanceDocument a{f, pa, std::nullopt};
    CHECK(instance_from_json(parse_json(print(to_json(a)))) == a);
    auto [m, s] = construct_pair(pa);
    InstanceDocument b{f, MatrixPair{m, s}, pa.orderings()};
    CHECK(instance_from_json(parse_json(print_line(to_json(b)))) == b);
  }
}

TEST_CASE("certificate and construct round trip") {
  for (const char* text : {kD2, kD2Bad}) {
    const auto inst = parse_instance(text);
    const auto c = classify(inst);
    CHECK(certificate_from_json(parse_json(print(to_json(c)))) == c);
    const auto k = construct(inst);
    CHECK(construct_from_json(parse_json(print(to_json(k)))) == k);
  }
  const auto full = certify(parse_instance(kD2));
  CHECK(certificate_from_json(parse_json(print(to_json(full)))) == full);
  CHECK(full.companion_phi == support::els(support::q(), {4, 4}));
  REQUIRE(full.h);
  REQUIRE(full.g);
}

TEST_CASE("classify") {
  auto r = cli::classify(kD2);
  CHECK(r.exit_code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["verdict"]["is_leonard_system"] == true);
  CHECK(j["split"]["split_sequence"] == Json::parse(R"(["-4","-4"])"));

  auto c = cli::classify(pair_doc(R"([["1","2"],["0","3"]])", R"([["1","2"],["0","3"]])"));
  CHECK(c.exit_code == 0);
  const Json k = Json::parse(c.out);
  CHECK(k["verdict"]["is_leonard_system"] == false);
  CHECK(k["verdict"]["failure_witness"].is_object());
  CHECK(k["orderings_found"].empty());

  auto p = cli::classify(pair_doc(R"([["1","1.5"],["0","2"]])", R"([["1","0"],["0","2"]])"));
  CHECK(p.exit_code == cli::kParse);
  CHECK(p.out.empty());
  CHECK(p.err.find("1.5") != std::string::npos);
  CHECK(p.err.find("A[0][1]") != std::string::npos);

  CHECK(cli::classify(pair_doc(R"([["0","1"],["0","0"]])", R"([["1","0"],["0","2"]])")).exit_code == cli::kNotMultiplicityFree);
  CHECK(cli::classify(pair_doc(R"([["1","0"],["0","2"]])", R"([["1","0"],["0","2"]])", "\"gf:1000003\"")).exit_code == cli::kModulusTooLarge);

  auto given = Json::parse(kD2);
  given["orderings"] = Json::parse(R"({"theta_order":["-2","0","2"],"theta_star_order":["2","0","-2"]})");
  auto g = Json::parse(cli::classify(given.dump()).out);
  CHECK(g["orderings"]["theta_order"] == Json::parse(R"(["-2","0","2"])"));
  CHECK(g["verdict"]["is_leonard_system"] == true);
  given["orderings"]["theta_order"] = Json::parse(R"(["-2","0","3"])");
  CHECK(cli::classify(given.dump()).exit_code == cli::kParse);
}

TEST_CASE("construct") {
  auto r = cli::construct(R"({"field":"rational","parameter_array":{"d":1,"theta":["1","0"],"theta_star":["1","0"],"varphi":["1"]}})");
  CHECK(r.exit_code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["matrices"]["A"] == Json::parse(R"([["1","0"],["1","0"]])"));
  CHECK(j["matrices"]["A_star"] == Json::parse(R"([["1","1"],["0","0"]])"));
  CHECK(j["report"]["valid"] == true);
  CHECK(j["report"]["phi"] == Json::parse(R"(["2"])"));

  const Json bad = Json::parse(cli::construct(kD2Bad).out);
  CHECK(bad["report"]["valid"] == false);
  CHECK(bad["report"]["failed_condition"] == "CondI");

  const Json zero = Json::parse(cli::construct(R"({"field":"gf:7","parameter_array":{"d":0,"theta":["3"],"theta_star":["4"],"varphi":[]}})").out);
  CHECK(zero["matrices"]["A"] == Json::parse(R"([["3"]])"));
  CHECK(zero["report"]["valid"] == true);
  CHECK(zero["report"]["phi"].empty());

  CHECK(cli::construct(R"({"field":"rational","parameter_array":{"d":1,"theta":["1","1"],"theta_star":["1","0"],"varphi":["1"]}})").exit_code ==
        cli::kInvariantViolation);
  CHECK(cli::construct(R"({"field":"rational","parameter_array":{"d":1,"theta":["1","0"],"theta_star":["1","0"],"varphi":["0"]}})").exit_code ==
        cli::kInvariantViolation);
  CHECK(cli::construct(pair_doc(R"([["1"]])", R"([["1"]])")).exit_code == cli::kParse);

  // construct output feeds classify
  const auto piped = cli::classify(cli::construct(kD2).out);
  CHECK(piped.exit_code == 0);
  CHECK(Json::parse(piped.out)["split"]["split_sequence"] == Json::parse(R"(["-4","-4"])"));
}

TEST_CASE("certify") {
  auto r = cli::certify(kD2);
  CHECK(r.exit_code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["companion_phi"] == Json::parse(R"(["4","4"])"));
  const auto q = FieldDescriptor::rationals();
  const auto inst = parse_instance(kD2);
  auto [a, s] = construct_pair(std::get<ParameterArray>(inst.body));
  const auto cert = certificate_from_json(j);
  const Matrix h = *cert.h, hi = *support::invert(h);
  CHECK(support::product(support::product(hi, a.transpose()), h) == a);
  CHECK(support::product(support::product(hi, s.transpose()), h) == s);

  CHECK(cli::certify(kD2Bad).exit_code == cli::kNotLeonard);
  const Json trivial = Json::parse(cli::certify(R"({"field":"rational","parameter_array":{"d":0,"theta":["5"],"theta_star":["7"],"varphi":[]}})").out);
  CHECK(trivial["antiautomorphism"]["H"] == Json::parse(R"([["1"]])"));
  CHECK(trivial["g_conjugation"]["G"] == Json::parse(R"([["1"]])"));

  // a conjugated Leonard pair given as matrices
  support::Gen gen(12);
  const Matrix t = gen.invertible(q, 3), ti = *support::invert(t);
  InstanceDocument conj{q, MatrixPair{support::product(support::product(ti, a), t), support::product(support::product(ti, s), t)},
                        std::get<ParameterArray>(inst.body).orderings()};
  const auto c = certify(conj);
  CHECK(c.companion_phi == support::els(q, {4, 4}));
  CHECK(c.split->split_sequence == support::els(q, {-4, -4}));
}

TEST_CASE("random") {
  auto r = cli::random(1, 3, "gf:997", 5);
  CHECK(r.exit_code == 0);
  std::size_t lines = 0;
  std::size_t start = 0;
  while (start < r.out.size()) {
    const std::size_t end = r.out.find('\n', start);
    const auto line = r.out.substr(start, end - start);
    const auto built = cli::construct(line);
    CHECK(built.exit_code == 0);
    CHECK(Json::parse(built.out)["report"]["valid"] == true);
    ++lines;
    start = end + 1;
  }
  CHECK(lines == 5);
  CHECK(cli::random(1, 3, "gf:997", 5).out == r.out);
  CHECK(cli::random(2, 3, "gf:997", 5).out != r.out);
  const Json z = Json::parse(cli::random(4, 0, "rational", 1).out);
  CHECK(z["parameter_array"]["varphi"].empty());
  CHECK(cli::random(1, 3, "gf:2", 1).exit_code == cli::kRetryBudget);
  CHECK(cli::random(1, 3, "gf:4", 1).exit_code == cli::kParse);
  CHECK(cli::random(1, 2, "rational", 30).exit_code == 0);
}
