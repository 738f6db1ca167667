#include <scf/serialize.hpp>

#include <gtest/gtest.h>

using namespace scf;

TEST(Json, ElementRoundTrip) {
  FieldParam p(Integer("123456789012345678901234567890"));
  Element x(p, Integer("-98765432109876543210"), Integer(2), Integer(-3));
  Json j = to_json(x);
  EXPECT_EQ(j.dump(),
            R"({"r":"-98765432109876543210","s":"2","t":"-3","a":"123456789012345678901234567890"})");
  EXPECT_EQ(element_from_json(j), x);
}

TEST(Json, SymbolicElement) {
  auto x = SymbolicElement::alpha() * SymbolicElement::alpha();
  EXPECT_EQ(to_json(x).dump(), R"({"r":["2","1"],"s":["0","1"],"t":["-1"]})");
}

TEST(Json, EnclosureRoundTrip) {
  auto enc = isolate_roots(FieldParam(7), 20);
  Json j = to_json(enc);
  EXPECT_EQ(j.at("a"), "7");
  EXPECT_EQ(j.at("bits"), 20);
  EXPECT_NE(j.at("alpha").at(0).get<std::string>().find('/'), std::string::npos);
  auto back = enclosure_from_json(j);
  for (int k = 0; k < 3; ++k) EXPECT_EQ(back.root(k), enc.root(k));
}

TEST(Json, UnitWordRoundTrip) {
  UnitWord w{-1, 3, -2};
  EXPECT_EQ(to_json(w).dump(), R"({"sign":-1,"i":3,"j":-2})");
  EXPECT_EQ(unit_word_from_json(to_json(w)), w);
}

TEST(Json, TheoremReport) {
  auto r = verify_theorem(FieldParam(7));
  Json j = to_json(r);
  EXPECT_EQ(j.at("a"), "7");
  EXPECT_EQ(j.at("n_max"), "17");
  EXPECT_EQ(j.at("counterexamples").size(), 0u);
  EXPECT_EQ(j.at("elements").size(), r.elements.size());
  bool saw_table_row = false;
  for (const auto& e : j.at("elements")) {
    if (e.at("r") == "2" && e.at("s") == "1" && e.at("t") == "0") {
      saw_table_row = true;
      EXPECT_EQ(e.at("class"), "alpha_minus_one_associate");
      EXPECT_EQ(e.at("witness").at("conj"), 2);
    }
  }
  EXPECT_TRUE(saw_table_row);
  EXPECT_FALSE(to_json(r, false).contains("elements"));
  EXPECT_EQ(to_json(r).dump(), to_json(verify_theorem(FieldParam(7))).dump());
}

TEST(Json, Reports) {
  Report r{"demo", {}};
  r.add("x", "1 = 1", true);
  r.add("y", "1 = 2", false, "no");
  Json j = to_json(r);
  EXPECT_EQ(j.at("all_passed"), false);
  EXPECT_EQ(j.at("checks").at(1).at("status"), "fail");
  EXPECT_EQ(j.at("checks").at(1).at("detail"), "no");
}

TEST(Csv, CorollaryHit) {
  auto hits = scan_corollary(Corollary::cor2, 1L, 1L);
  ASSERT_EQ(hits.size(), 1u);
  std::string row = to_csv(hits.front());
  EXPECT_EQ(row.rfind("1,5,13,true,\"m <= 13; 6a+19 = (2a+3)^2, so b is a norm\",", 0), 0u);
  const std::string header = corollary_csv_header();
  EXPECT_EQ(std::count(header.begin(), header.end(), ','), 11);
  auto j = to_json(hits.front());
  EXPECT_EQ(j.at("hit"), false);
  EXPECT_EQ(j.at("generator_polys").at(0).size(), 7u);
}
