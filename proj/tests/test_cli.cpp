#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "document.hpp"
#include "prefnet/reference.hpp"

using namespace prefnet;
using namespace prefnet::cli;

namespace {

const char* kDoc = R"({
  "members": ["a", "b", "c"],
  "preferences": {"a": ["a", "c", "b"], "b": ["b", "a", "c"], "c": ["c", "b", "a"]}
})";

int run(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int rc = run_command(args, o, e);
  if (out) *out = o.str() + e.str();
  return rc;
}

}  // namespace

TEST(Document, ParsesLabelsAndOrders) {
  const auto net = parse_network(kDoc);
  ASSERT_EQ(net.size(), 3);
  EXPECT_EQ(net.label(2), "c");
  EXPECT_EQ(net.order(0).list(), (std::vector<MemberId>{0, 2, 1}));
}

TEST(Document, RoundTripsReferenceNetwork) {
  const auto net = reference::b3ct_profile();
  EXPECT_EQ(parse_network(serialize_network(net)), net);
  const auto text = serialize_network(net);
  EXPECT_EQ(serialize_network(parse_network(text)), text);
}

TEST(Document, DuplicateNamesTheMember) {
  const auto doc = read_document(R"({"members":["a","b"],"preferences":{"a":["a","a"],"b":["b","a"]}})");
  ASSERT_EQ(doc.violations.size(), 1u);
  EXPECT_EQ(doc.violations[0].member, "a");
  EXPECT_NE(doc.violations[0].message.find("repeats a"), std::string::npos);
}

TEST(Document, MissingMemberInList) {
  EXPECT_THROW(parse_network(R"({"members":["a","b"],"preferences":{"a":["a"],"b":["b","a"]}})"), InputError);
}

TEST(Document, MissingListAndUnknownLabels) {
  EXPECT_FALSE(read_document(R"({"members":["a","b"],"preferences":{"a":["a","b"]}})").violations.empty());
  try {
    parse_network(R"({"members":["a","b"],"preferences":{"a":["a","z"],"b":["b","a"]}})");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("preferences.a[1]"), std::string::npos);
  }
  EXPECT_THROW(parse_network("{\"members\": [\"a\""), InputError);
  EXPECT_THROW(parse_network(R"({"members":["a"],"preferences":{"a":["a"]},"extra":1})"), InputError);
}

TEST(Cli, ExitCodes) {
  std::string out;
  EXPECT_EQ(run({"check", "--paper-instances", "--rule", "harmonious", "--set", "1,5,6"}, &out), kExitOk);
  EXPECT_NE(out.find("member: true"), std::string::npos);
  EXPECT_EQ(run({"axioms", "--rule", "b3ct", "--axiom", "Mon", "--paper-instances"}), kExitViolation);
  EXPECT_EQ(run({"check", "--unknown"}), kExitUsage);
  EXPECT_EQ(run({"check", "--paper-instances", "--instance", "nope", "--set", "1"}), kExitUsage);
  EXPECT_EQ(run({"stability", "--paper-instances", "--set", "1,5,6", "--delta", "x"}), kExitUsage);
}

TEST(Cli, JsonReportIsReproducible) {
  const std::vector<std::string> args{"identify", "--paper-instances", "--seed", "5", "--budget", "200", "--format", "json"};
  std::string a, b;
  ASSERT_EQ(run(args, &a), kExitOk);
  ASSERT_EQ(run(args, &b), kExitOk);
  EXPECT_EQ(a, b);
  const auto j = Json::parse(a);
  EXPECT_EQ(j["seed"], 5);
  EXPECT_EQ(j["argv"].size(), args.size());
  EXPECT_EQ(j["command"], "identify");
  EXPECT_TRUE(j.contains("version"));
}

TEST(Cli, RationalFlags) {
  std::string out;
  ASSERT_EQ(run({"stability", "--paper-instances", "--set", "1,5,6", "--delta", "0.25", "--format", "json"}, &out), kExitOk);
  EXPECT_EQ(Json::parse(out)["result"]["delta"], "1/4");
}
