#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ordalg/commands.hpp"
#include "ordalg/io.hpp"

using namespace ordalg;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(ORDALG_FIXTURES) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Io, RoundTripIsByteIdentical) {
  for (const auto& name : {"x4_minus_1.json", "x12_minus_1.json", "gaussian.json", "zeta5.json"}) {
    std::string text = fixture(name);
    EXPECT_EQ(serialize_order_document(parse_order_document(text)), text) << name;
  }
  // huge structure constants survive
  Int big("1000000000000000000000000000001");
  OrderDocument doc = document_from_poly({-big, 0, 1});
  std::string once = serialize_order_document(doc);
  EXPECT_NE(once.find("1000000000000000000000000000001"), std::string::npos);
  EXPECT_EQ(serialize_order_document(parse_order_document(once)), once);
}

TEST(Io, LabelsArePreserved) {
  OrderDocument doc = parse_order_document(fixture("z_times_z.json"));
  EXPECT_EQ(doc.labels, (std::vector<std::string>{"e1", "e2"}));
  EXPECT_EQ(document_from_poly({1, 0, 0, 1}).labels, (std::vector<std::string>{"1", "X", "X^2"}));
}

TEST(Io, AcceptsPlainIntegers) {
  OrderDocument doc = parse_order_document(R"({"rank": 1, "table": [1]})");
  EXPECT_EQ(doc.order.rank(), 1u);
}

TEST(Io, RejectsMalformedDocuments) {
  EXPECT_THROW(parse_order_document("{"), InputError);
  EXPECT_THROW(parse_order_document("[]"), InputError);
  EXPECT_THROW(parse_order_document(R"({"rank": "2"})"), InputError);
  EXPECT_THROW(parse_order_document(fixture("wrong_shape.json")), InputError);
  EXPECT_THROW(parse_order_document(fixture("non_associative.json")), InputError);
  EXPECT_THROW(parse_order_document(fixture("no_identity.json")), InputError);
  EXPECT_THROW(parse_order_document(R"({"rank": "1", "table": ["x"]})"), InputError);
  EXPECT_THROW(parse_order_document(R"({"rank": "1", "table": ["1/2"]})"), InputError);
  EXPECT_THROW(parse_order_document(R"({"rank": "0", "table": []})"), InputError);
  EXPECT_THROW(read_order_document("/nonexistent/file.json"), InputError);
}

TEST(Io, CommandsAreDeterministic) {
  Order a = parse_order_document(fixture("x12_minus_1.json")).order;
  EXPECT_EQ(cmd_units(a, false).output.dump(), cmd_units(a, false).output.dump());
  EXPECT_EQ(cmd_graph(a, Int(2)).output.dump(), cmd_graph(a, Int(2)).output.dump());
}

TEST(Io, CommandOutputs) {
  Order a = parse_order_document(fixture("x4_minus_1.json")).order;
  auto units = cmd_units(a, false);
  EXPECT_EQ(units.output["invariant_factors"], Json::parse(R"(["2","4"])"));
  EXPECT_EQ(units.output["order"], "8");
  EXPECT_EQ(cmd_units(a, true).output["invariant_factors"], units.output["invariant_factors"]);

  auto ids = cmd_idempotents(a);
  EXPECT_EQ(ids.output["idempotents"], Json::parse(R"([["1","0","0","0"]])"));

  auto dec = cmd_decompose(a);
  EXPECT_EQ(dec.output["index_b_a_sep"], "8");
  EXPECT_EQ(dec.output["index_c_a_sep"]["2"], "8");

  auto dl = cmd_dlog(a, Json::parse(R"([["0","1","0","0"],["-1","0","0","0"]])"),
                     Json::parse(R"(["0","0","0","-1"])"));
  EXPECT_EQ(dl.status, 0);
  auto no = cmd_dlog(a, Json::parse(R"([["0","0","-1","0"]])"), Json::parse(R"(["-1","0","0","0"])"));
  EXPECT_EQ(no.status, 1);
  EXPECT_THROW(cmd_dlog(a, Json::parse(R"([["2","0","0","0"]])"), Json::parse(R"(["1","0","0","0"])")),
               InputError);
  EXPECT_THROW(cmd_dlog(a, Json::parse("[]"), Json::parse(R"(["1"])")), InputError);

  Order zz = parse_order_document(fixture("z_times_z.json")).order;
  EXPECT_TRUE(cmd_graph(zz, std::nullopt).output["edges"].empty());
  EXPECT_THROW(cmd_graph(a, Int(4)), InputError);
}
