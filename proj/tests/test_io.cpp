#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "toricsegre/io.hpp"

using namespace toricsegre;

namespace {

std::string sample(const std::string& name) {
  std::ifstream in(std::string(SAMPLES_DIR) + "/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ErrorCode input_code(const std::string& text) {
  try {
    const InputDocument doc = parse_input(text);
    run(doc, options_from(doc));
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

const char* kP2 = R"("rays": [[1, 0], [0, 1], [-1, -1]], "max_cones": [[0, 1], [1, 2], [0, 2]])";

std::string p2_doc(const std::string& rest) { return std::string("{") + kP2 + ", " + rest + "}"; }

}  // namespace

TEST_CASE("input documents") {
  const InputDocument doc = parse_input(sample("hirzebruch_f1.json"));
  CHECK(doc.rays.size() == 4);
  CHECK(doc.max_cones[0] == Cone{0, 3});
  CHECK(doc.variables == std::vector<std::string>{"x0", "x1", "y0", "y1"});
  CHECK(doc.degrees == IntMatrix{{1, 1, 1, 0}, {0, 0, 1, 1}});
  CHECK(parse_input(input_to_json(doc)) == doc);

  const ToricVariety x = variety_of(doc);
  const Ideal i = ideal_of(doc, x);
  CHECK(i.generators()[0].terms().size() == 2);
  CHECK(i.degrees()[0] == MultiDegree{4, 2});

  const InputDocument p = parse_input(sample("p1p1p1.json"));
  const ToricVariety px = variety_of(p);
  CHECK(multidegree_of(px.parse("x0*z0^2"), px.ring()) == MultiDegree{1, 0, 2});

  // Cones are stored sorted; options parse.
  const InputDocument q = parse_input(p2_doc(R"("max_cones": [[1, 0]], "ideal": ["z0"], "options": {"seed": 4, "format": "json"})"));
  CHECK(q.max_cones == std::vector<Cone>{{0, 1}});
  CHECK(q.options.seed == 4u);
  CHECK(q.options.format == "json");
  CHECK(parse_input(input_to_json(q)) == q);
}

TEST_CASE("input diagnostics") {
  CHECK(input_code("{") == ErrorCode::Syntax);
  CHECK(input_code("[]") == ErrorCode::InvalidInput);
  CHECK(input_code(p2_doc(R"("ideal": ["z0"], "extra": 1)")) == ErrorCode::InvalidInput);
  CHECK(input_code(p2_doc(R"("ideal": ["z0"], "options": {"sead": 1})")) == ErrorCode::InvalidInput);
  CHECK(input_code(p2_doc(R"("ideal": [3])")) == ErrorCode::InvalidInput);
  CHECK(input_code(p2_doc(R"("ideal": ["z0"], "variables": ["a", "b"])")) == ErrorCode::InvalidInput);
  CHECK(input_code(p2_doc(R"("ideal": ["z0"], "variables": ["a", "a", "b"])")) == ErrorCode::InvalidInput);
  CHECK(input_code(p2_doc(R"("ideal": ["w0"])")) == ErrorCode::UnknownVariable);
  CHECK(input_code(p2_doc(R"("ideal": ["z0 + z1^2"])")) == ErrorCode::NotHomogeneous);
  CHECK(input_code(p2_doc(R"("ideal": ["z0 +"])")) == ErrorCode::Syntax);
  CHECK(input_code(p2_doc(R"("ideal": ["z0", "z1", "z2"])")) == ErrorCode::EmptySubscheme);
  CHECK(input_code(p2_doc(R"("ideal": ["z0"], "degrees": [[2, 2, 2]])")) == ErrorCode::InvalidDegrees);
  CHECK(input_code(p2_doc(R"("ideal": ["z0"], "options": {"coeff_bound": 0})")) == ErrorCode::InvalidInput);
  CHECK(input_code(R"({"rays": [[1, 0], [1, 2], [0, -1], [-1, 0]], "max_cones": [[0, 1], [1, 3], [2, 3], [0, 2]], "ideal": ["z0"]})") ==
        ErrorCode::NotSmooth);
}

TEST_CASE("output round trip and determinism") {
  for (const char* name : {"hirzebruch_f1.json", "p1p1p1.json", "threefold.json"}) {
    INFO(name);
    const InputDocument doc = parse_input(sample(name));
    const OutputDocument out = run(doc, options_from(doc));
    const std::string text = output_to_json(out);
    CHECK(output_from_json(text) == out);
    CHECK(output_to_json(output_from_json(text)) == text);
    CHECK(output_to_json(run(doc, options_from(doc))) == text);
  }
}

TEST_CASE("output content") {
  const InputDocument doc = parse_input(sample("hirzebruch_f1.json"));
  const OutputDocument out = run(doc, options_from(doc));
  CHECK(out.alpha == MultiDegree{6, 4});
  CHECK(out.n == 1);
  CHECK(out.k == 2);
  CHECK(out.bases[1] == std::vector<std::vector<std::size_t>>{{0}, {2}});
  // s_0 = D_x0 + 2 D_y0 = 3F + 2E, s_1 = -6 D_x0 D_y0 = -6 EF.
  CHECK(out.segre[0] == std::vector<ClassTerm>{{1, {0}, 1}, {1, {2}, 2}});
  CHECK(out.segre[1] == std::vector<ClassTerm>{{2, {0, 2}, -6}});
  CHECK(out.residuals[1].rows.size() == 1);
  CHECK(out.residuals[1].rows[0].gamma == 6);
  CHECK(out.seed == 0);
  CHECK(out.coeff_bound == 100);
  CHECK(out.retries == 5);
}
