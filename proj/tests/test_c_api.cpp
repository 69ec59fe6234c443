#include "ybe/ybe.h"

#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <string>

namespace {

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out = s ? s : "";
  ybe_string_free(s);
  return out;
}

ybe_solution* load(const char* name) {
  ybe_solution* s = nullptr;
  REQUIRE(ybe_solution_load((std::string(YBE_DATA_DIR "/") + name).c_str(), &s) == YBE_OK);
  return s;
}

}  // namespace

TEST_CASE("solutions through the C API") {
  ybe_solution* s = load("irretractable4.sol");
  CHECK(ybe_solution_size(s) == 4);
  uint32_t images[4];
  REQUIRE(ybe_solution_sigma(s, 1, images) == YBE_OK);
  CHECK(images[0] == 2);
  CHECK(images[3] == 1);
  CHECK(ybe_solution_sigma(s, 5, images) == YBE_ERR_OUT_OF_RANGE);
  CHECK(std::strlen(ybe_last_error()) > 0);

  ybe_verify_report v{};
  REQUIRE(ybe_verify(s, &v) == YBE_OK);
  CHECK(v.braided);
  CHECK(v.involutive);

  ybe_analysis a{};
  REQUIRE(ybe_analyze(s, &a) == YBE_OK);
  CHECK(a.class_m == 4);
  CHECK(a.indecomposable);
  CHECK(a.retract_level == -1);
  CHECK(a.condition_C);
  CHECK(a.condition_C_column == 1);
  CHECK(a.iyb_order == 8);

  char* text = nullptr;
  REQUIRE(ybe_class_witness(s, 1, &text) == YBE_OK);
  CHECK(take(text).find("sigma_1 sigma_4 sigma_2 sigma_3") != std::string::npos);

  REQUIRE(ybe_solution_format(s, nullptr, &text) == YBE_OK);
  ybe_solution* copy = nullptr;
  REQUIRE(ybe_solution_parse(take(text).c_str(), &copy) == YBE_OK);
  CHECK(ybe_solution_size(copy) == 4);
  ybe_solution_free(copy);

  ybe_solution* pumped = nullptr;
  REQUIRE(ybe_pump(s, 1, 0, &pumped) == YBE_OK);
  CHECK(ybe_solution_size(pumped) == 16);
  ybe_solution_free(pumped);
  CHECK(ybe_pump(s, 2, 100, &pumped) == YBE_ERR_LIMIT_EXCEEDED);

  REQUIRE(ybe_g_cycles(s, 1, 3, 1, &text) == YBE_OK);
  CHECK(take(text).rfind("(T_1^1,T_2^3,T_3^1,T_4^3)", 0) == 0);

  int ok = 0;
  REQUIRE(ybe_frt_relations(s, &text, &ok) == YBE_OK);
  ybe_string_free(text);
  CHECK(ok);

  ybe_solution_free(s);
}

TEST_CASE("error codes") {
  ybe_solution* s = nullptr;
  CHECK(ybe_solution_load(YBE_DATA_DIR "/no_such_file.sol", &s) == YBE_ERR_IO);
  CHECK(s == nullptr);
  CHECK(ybe_solution_parse("2\n2 1\n", &s) == YBE_ERR_PARSE);
  CHECK(std::string(ybe_status_name(YBE_ERR_PARSE)).size() > 0);

  ybe_solution* bad = load("nonbraided.sol");
  ybe_verify_report v{};
  REQUIRE(ybe_verify(bad, &v) == YBE_OK);
  CHECK_FALSE(v.braided);
  CHECK(v.has_braided_witness);
  CHECK(v.braided_witness[0] == 1);
  CHECK(v.braided_witness[1] == 1);
  CHECK(v.braided_witness[2] == 2);
  ybe_analysis a{};
  REQUIRE(ybe_analyze(bad, &a) == YBE_OK);
  CHECK(a.nondegenerate);
  CHECK_FALSE(a.braided);
  CHECK(a.class_m == -1);
  ybe_solution_free(bad);

  const uint32_t not_bijective[] = {1, 1, 1, 2};
  CHECK(ybe_solution_from_sigma(2, not_bijective, &s) != YBE_OK);
}

TEST_CASE("keys and ciphers through the C API") {
  ybe_solution* s = load("irretractable4.sol");
  ybe_key* key = nullptr;
  REQUIRE(ybe_key_new(s, "46", 2, 0, 0, &key) == YBE_OK);
  char* out = nullptr;
  REQUIRE(ybe_key_eval(key, "9", 0, &out) == YBE_OK);
  CHECK(take(out) == "108");
  REQUIRE(ybe_key_eval(key, "108", 1, &out) == YBE_OK);
  CHECK(take(out) == "9");
  REQUIRE(ybe_key_domain_size(key, &out) == YBE_OK);
  CHECK(take(out) == "256");
  CHECK(ybe_key_eval(key, "257", 0, &out) == YBE_ERR_OUT_OF_RANGE);
  CHECK(ybe_key_eval(key, "abc", 0, &out) != YBE_OK);

  char* blocks = nullptr;
  REQUIRE(ybe_encode_text("ITS A", &blocks) == YBE_OK);
  const std::string plain = take(blocks);
  CHECK(plain == "09 20 19 00 01");
  REQUIRE(ybe_encrypt(key, plain.c_str(), 0, &out) == YBE_OK);
  const std::string cipher = take(out);
  CHECK(cipher == "108 83 82 0 100");
  REQUIRE(ybe_decrypt(key, cipher.c_str(), 1, &out) == YBE_OK);
  const std::string back = take(out);
  CHECK(back == plain);
  REQUIRE(ybe_decode_text(back.c_str(), &out) == YBE_OK);
  CHECK(take(out) == "ITS A");

  ybe_key* bob = nullptr;
  REQUIRE(ybe_key_new(s, "3", 2, 1, 0, &bob) == YBE_OK);
  char* intermediate = nullptr;
  char* transmitted = nullptr;
  REQUIRE(ybe_sign(bob, key, "9 20 19", 0, &intermediate, &transmitted) == YBE_OK);
  CHECK(take(intermediate) == "247 208 205");
  const std::string sent = take(transmitted);
  CHECK(sent == "62 39 40");
  REQUIRE(ybe_open_signature(key, bob, sent.c_str(), 1, &out) == YBE_OK);
  CHECK(take(out) == "09 20 19");

  ybe_key* huge = nullptr;
  CHECK(ybe_key_new(s, "1", 6, 1, 0, &huge) == YBE_ERR_LIMIT_EXCEEDED);
  CHECK(ybe_key_new(s, "0", 2, 0, 0, &huge) == YBE_ERR_OUT_OF_RANGE);

  int ok = 0;
  REQUIRE(ybe_key_check(key, "9 23", 1, 10, 3, &out, &ok) == YBE_OK);
  CHECK(ok);
  CHECK(take(out).rfind("checked 268 points of 256\ninverse ok\n", 0) == 0);
  REQUIRE(ybe_key_new(s, "1", 6, 0, 0, &huge) == YBE_OK);
  CHECK(ybe_key_check(huge, nullptr, 1, 0, 3, &out, &ok) == YBE_ERR_LIMIT_EXCEEDED);
  REQUIRE(ybe_key_check(huge, nullptr, 0, 100, 3, &out, &ok) == YBE_OK);
  CHECK(ok);
  CHECK(take(out) == "checked 100 points of 340282366920938463463374607431768211456\ninverse ok\n");
  ybe_key_free(huge);

  REQUIRE(ybe_preservation_check(s, 2, &out, &ok) == YBE_OK);
  CHECK(ok);
  CHECK(take(out) == "checked 4 solutions\npreservation ok\n");
  CHECK(ybe_preservation_check(nullptr, 5, &out, &ok) == YBE_ERR_LIMIT_EXCEEDED);

  int equal = 0;
  REQUIRE(ybe_key_exchange(s, 1, "2", "3", "14", 1, 0, &out, &equal) == YBE_OK);
  const std::string transcript = take(out);
  CHECK(equal);
  CHECK(transcript.find("bob→alice: 6") != std::string::npos);
  CHECK(transcript.find("alice→bob: 1") != std::string::npos);

  ybe_key_free(bob);
  ybe_key_free(key);
  ybe_solution_free(s);
}

TEST_CASE("census through the C API") {
  ybe_census* c = nullptr;
  REQUIRE(ybe_census_build(4, &c) == YBE_OK);
  CHECK(ybe_census_total(c) == 168);
  CHECK(ybe_census_iso(c) == 23);

  ybe_census_filter_spec spec{1, 1, -1, 0};
  ybe_census* f = nullptr;
  REQUIRE(ybe_census_filter(c, &spec, &f) == YBE_OK);
  CHECK(ybe_census_iso(f) >= 1);
  ybe_solution* rep = nullptr;
  REQUIRE(ybe_census_representative(f, 0, &rep) == YBE_OK);
  ybe_analysis a{};
  REQUIRE(ybe_analyze(rep, &a) == YBE_OK);
  CHECK(a.indecomposable);
  CHECK(a.retract_level == -1);
  ybe_solution_free(rep);
  CHECK(ybe_census_representative(f, 1000, &rep) == YBE_ERR_OUT_OF_RANGE);

  char* summary = nullptr;
  REQUIRE(ybe_census_summary(c, &summary) == YBE_OK);
  CHECK(take(summary).rfind("n 4\ntotal 168\niso 23\n", 0) == 0);

  const auto dir = std::filesystem::temp_directory_path() / "ybe_c_api_census";
  std::filesystem::remove_all(dir);
  REQUIRE(ybe_census_write(f, dir.string().c_str()) == YBE_OK);
  CHECK(std::filesystem::exists(dir / "summary.txt"));
  CHECK(std::filesystem::exists(dir / "rep_001.sol"));
  std::filesystem::remove_all(dir);

  ybe_census_free(f);
  ybe_census_free(c);
  CHECK(ybe_census_build(5, &c) == YBE_ERR_LIMIT_EXCEEDED);
}

TEST_CASE("estimators through the C API") {
  char* ops = nullptr;
  double seconds = 0, lg = 0;
  REQUIRE(ybe_cost_model(4, 2, 0, nullptr, &ops, &seconds, &lg) == YBE_OK);
  CHECK(take(ops) == "582");
  CHECK(seconds == doctest::Approx(5.82e-7));
  CHECK(ybe_cost_model(1, 2, 0, nullptr, &ops, &seconds, &lg) == YBE_ERR_INVALID_ARGUMENT);

  REQUIRE(ybe_attack_cost(4, 2, "168", nullptr, &seconds, &lg) == YBE_OK);
  CHECK(seconds == doctest::Approx(168 * 5.82e-7));

  double perms = 0;
  REQUIRE(ybe_search_space(4, 2, nullptr, &perms, &lg) == YBE_OK);
  CHECK(perms == doctest::Approx(506.93).epsilon(1e-4));

  char* exact = nullptr;
  REQUIRE(ybe_cycle_type_count(4, "2^2", &lg, &exact) == YBE_OK);
  CHECK(take(exact) == "3");
  REQUIRE(ybe_cycle_type_count(256, "4^64", &lg, nullptr) == YBE_OK);
  CHECK(lg == doctest::Approx(379.298).epsilon(1e-5));
  CHECK(ybe_cycle_type_count(5, "2^2", &lg, nullptr) != YBE_OK);
}
