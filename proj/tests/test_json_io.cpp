#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "aomsim/errors.hpp"
#include "aomsim/json_io.hpp"
#include "test_helpers.hpp"

using namespace aomsim;
using testing::ket;

namespace {

std::string parse_failure(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::parse);
    return e.what();
  }
  FAIL("expected a parse error");
  return {};
}

}  // namespace

TEST_CASE("state JSON: reads the documented layout") {
  auto s = state_from_json(parse_json(R"({"n_slots": 2, "terms": [
      {"ket": [["1", 0], ["2", 1]], "amp": [0.6, 0]},
      {"ket": [["1'", 1], ["2'", 0]], "amp": [0, 0.8]}]})",
                                      "inline"));
  CHECK(s.n_slots() == 2);
  CHECK(s.normalized());
  CHECK(s.amplitude(ket({{"1'", 1}, {"2'", 0}})) == Complex{0, 0.8});
}

TEST_CASE("property: state JSON round trip") {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 20; ++t) {
    auto s = testing::random_state(rng, {ket({{"1", 0}, {"T1'", -2}}), ket({{"x", 5}, {"y", 1}}),
                                         ket({{"1", 1}, {"1", 1}})});
    auto back = state_from_json(state_to_json(s));
    REQUIRE(back.size() == s.size());
    for (const auto& [k, a] : s) CHECK(std::abs(back.amplitude(k) - a) <= 1e-12);
  }
}

TEST_CASE("state JSON: diagnostics name the offending field") {
  auto mixed = parse_failure([] {
    state_from_json(parse_json(R"({"n_slots": 2, "terms": [
        {"ket": [["1", 0], ["2", 1]], "amp": [1, 0]},
        {"ket": [["1", 0]], "amp": [1, 0]}]})",
                               "inline"));
  });
  CHECK(mixed.find("state.terms[1].ket") != std::string::npos);

  CHECK(parse_failure([] { parse_json(R"({"n_slots": 1, "terms": [{"ket": [["1", 0]], "amp": [NaN, 0]}]})", "f"); })
            .find("invalid JSON") != std::string::npos);
  CHECK(parse_failure([] { state_from_json(parse_json(R"({"terms": []})", "f")); }).find("state.n_slots") !=
        std::string::npos);
  CHECK(parse_failure([] {
          state_from_json(parse_json(R"({"n_slots": 1, "terms": [{"ket": [["1", 0]], "amp": [1]}]})", "f"));
        }).find("state.terms[0].amp") != std::string::npos);
  CHECK(parse_failure([] {
          state_from_json(parse_json(R"({"n_slots": 1, "terms": [{"ket": [["1", 0.5]], "amp": [1, 0]}]})", "f"));
        }).find("state.terms[0].ket[0][1]") != std::string::npos);
  CHECK(parse_failure([] {
          state_from_json(parse_json(R"({"n_slots": 1, "terms": [{"ket": [["", 0]], "amp": [1, 0]}]})", "f"));
        }).find("state.terms[0].ket[0][0]") != std::string::npos);
  CHECK(parse_failure([] {
          state_from_json(parse_json(R"({"n_slots": 1, "terms": [{"ket": [["1", 0]], "amp": [1e400, 0]}]})", "f"));
        }) != "");
}

TEST_CASE("transform JSON: round trip and validation") {
  auto m = balanced_aom(0.3, std::numbers::pi / 2, {{"1", 0}, {"1'", 1}, {"t", 0}, {"d", 1}});
  const json j = transform_to_json(m);
  CHECK(j["inputs"] == json::parse(R"([["1", 0], ["1'", 1]])"));
  CHECK(j["outputs"] == json::parse(R"([["t", 0], ["d", 1]])"));
  auto back = transform_from_json(j);
  CHECK(distance_up_to_phase(m, back) <= 1e-12);

  CHECK(parse_failure([] {
          transform_from_json(parse_json(R"({"inputs": [["a", 0]], "outputs": [["b", 0]], "matrix": [[[1, 0], [0, 0]]]})", "f"));
        }).find("transform.matrix[0]") != std::string::npos);
  CHECK(parse_failure([] {
          transform_from_json(parse_json(R"({"inputs": [["a", 0], ["a", 0]], "outputs": [["b", 0]], "matrix": [[[1, 0], [0, 0]]]})", "f"));
        }).find("duplicate") != std::string::npos);
  CHECK(parse_failure([] { transform_from_json(parse_json(R"({"inputs": [], "outputs": []})", "f")); })
            .find("transform.matrix") != std::string::npos);
}

TEST_CASE("swap report JSON: field names and fixed rounding") {
  auto r = run_swap(TransformKind::correct);
  const json j = swap_report_to_json(r, {});
  for (const char* key : {"transform_kind", "norm_after_aoms", "postselect_probability", "factor_overlap",
                          "rho14_negativity", "rho14_eigenvalues", "nosignal_trace_distance", "swapping_verdict",
                          "tool_version", "tolerances"}) {
    CHECK_MESSAGE(j.contains(key), key);
  }
  CHECK(j["transform_kind"] == "correct");
  CHECK(j["postselect_probability"] == 0.5);
  CHECK(j["rho14_negativity"] == 0.0);
  CHECK(j["swapping_verdict"] == false);
  CHECK(j["factor_overlap"] == json::array({0.0, 0.0}));

  CHECK(round_fixed(-1e-13) == 0.0);
  CHECK_FALSE(std::signbit(round_fixed(-1e-13)));
  CHECK(round_fixed(0.1234567890126) == 0.123456789013);
}

TEST_CASE("density JSON mirrors the state layout") {
  auto rho = partial_trace(build_source_states().phi, {0});
  const json j = density_to_json(rho);
  CHECK(j["kept_slots"] == json::array({0}));
  CHECK(j["basis"] == json::parse(R"([[["1", 0]], [["1'", 1]]])"));
  CHECK(j["matrix"][0][0] == json::array({0.5, 0.0}));
}
